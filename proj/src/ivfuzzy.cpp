#include "hyperlab/ivfuzzy.hpp"

#include <algorithm>
#include <set>

namespace hyperlab {

const char* relation_name(PointRelation rel) {
    switch (rel) {
        case PointRelation::In: return "in";
        case PointRelation::Q: return "q";
        case PointRelation::InOrQ: return "invq";
        case PointRelation::InAndQ: return "inandq";
    }
    return "?";
}

PointRelation parse_relation(const std::string& name) {
    if (name == "in") return PointRelation::In;
    if (name == "q") return PointRelation::Q;
    if (name == "invq") return PointRelation::InOrQ;
    if (name == "inandq") return PointRelation::InAndQ;
    throw ParseError("unknown point relation: " + name);
}

bool satisfies(const IVFuzzyPoint& p, const IVFuzzySet& A, PointRelation rel,
               StrictConvention convention) {
    if (p.support < 0 || p.support >= A.size()) throw CarrierMismatch("point support out of range");
    const IntervalValue& mu = A.at(p.support);
    switch (rel) {
        case PointRelation::In: return iv_leq(p.value, mu);
        case PointRelation::Q: return iv_sum_exceeds_one(mu, p.value, convention);
        case PointRelation::InOrQ:
            return iv_leq(p.value, mu) || iv_sum_exceeds_one(mu, p.value, convention);
        case PointRelation::InAndQ:
            return iv_leq(p.value, mu) && iv_sum_exceeds_one(mu, p.value, convention);
    }
    return false;
}

ElemSet level_set(const IVFuzzySet& A, const IntervalValue& s) {
    ElemSet out;
    for (int e = 0; e < A.size(); ++e)
        if (iv_leq(s, A.at(e))) out.insert(e);
    return out;
}

IVFuzzySet characteristic(const ElemSet& S, int size) {
    if (!S.subset_of(ElemSet::full(size))) throw CarrierMismatch("subset out of range");
    IVFuzzySet A(size, IntervalValue::bottom());
    for (Element e : S.elements()) A.set(e, IntervalValue::top());
    return A;
}

CriticalThresholds::CriticalThresholds(const IVFuzzySet& A, std::vector<Rational> extra_points) {
    std::set<Rational> pts{Rational(0), Rational(1, 2), Rational(1)};
    auto add = [&](const Rational& r) {
        if (r >= Rational(0) && r <= Rational(1)) pts.insert(r);
    };
    for (const IntervalValue& v : A.values()) {
        add(v.lo());
        add(v.hi());
        add(Rational(1) - v.lo());
        add(Rational(1) - v.hi());
    }
    for (const Rational& r : extra_points) {
        add(r);
        add(Rational(1) - r);
    }
    base_.assign(pts.begin(), pts.end());
    points_ = base_;
    for (std::size_t i = 0; i + 1 < base_.size(); ++i)
        points_.push_back((base_[i] + base_[i + 1]) / Rational(2));
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i; j < points_.size(); ++j) {
            IntervalValue v = IntervalValue::make(points_[i], points_[j]);
            if (!v.is_bottom()) grid_.push_back(v);
        }
}

Rational CriticalThresholds::representative(const Rational& v) const {
    if (v < Rational(0) || v > Rational(1)) throw ScalarOutOfRange("threshold outside [0,1]");
    auto it = std::lower_bound(base_.begin(), base_.end(), v);
    if (it != base_.end() && *it == v) return v;
    // v lies strictly between *(it-1) and *it; 0 and 1 are always present.
    const Rational& lo = *(it - 1);
    const Rational& hi = *it;
    return (lo + hi) / Rational(2);
}

IntervalValue CriticalThresholds::representative(const IntervalValue& v) const {
    return IntervalValue::make(representative(v.lo()), representative(v.hi()));
}

bool equivalent(const IVFuzzySet& A, const IVFuzzySet& B) {
    if (A.size() != B.size()) throw CarrierMismatch("fuzzy sets on different carriers");
    CriticalThresholds ca(A);
    CriticalThresholds cb(B);
    std::set<std::uint64_t> fa;
    std::set<std::uint64_t> fb;
    auto collect = [&](const std::vector<IntervalValue>& grid) {
        for (const IntervalValue& s : grid) {
            fa.insert(level_set(A, s).bits());
            fb.insert(level_set(B, s).bits());
        }
    };
    collect(ca.grid());
    collect(cb.grid());
    return fa == fb;
}

} // namespace hyperlab
