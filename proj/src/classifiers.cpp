#include "hyperlab/classifiers.hpp"

#include <algorithm>
#include <map>

namespace hyperlab {

namespace {

void require_instance(const KrasnerHyperring& R, const IVFuzzySet& A) {
    if (!R.validated()) throw NotValidated("structure not validated");
    if (A.size() != R.size()) throw CarrierMismatch("fuzzy set carrier mismatch");
}

template <typename Fn>
void for_each_tuple(int length, int size, Fn&& fn) {
    std::vector<Element> t(length, 0);
    while (true) {
        if (!fn(std::span<const Element>(t))) return;
        int i = length - 1;
        while (i >= 0 && ++t[i] == size) t[i--] = 0;
        if (i < 0) return;
    }
}

std::string tuple_str(std::span<const Element> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Threshold boxes and feasibility queries for the quantifier elimination.
// ---------------------------------------------------------------------------

/// Axis-aligned region of thresholds (lo,hi): component ranges plus the
/// implicit constraints lo <= hi and (lo,hi) != (0,0), and an optional strict
/// side condition from the quasi-coincidence relation.
struct ThresholdBox {
    Rational llo{0}, lhi{1};
    Rational hlo{0}, hhi{1};
    bool has_strict = false;
    bool strict_conj = false;
    Rational sl{0}, sh{0};
};

struct BoxQuery {
    std::optional<Rational> pin_lo, pin_hi;
    std::optional<Rational> min_lo, min_hi;
    std::optional<Rational> max_lo, max_hi;
};

bool feasible(const ThresholdBox& box, const BoxQuery& q) {
    Rational a = box.llo, b = box.lhi;
    Rational c = box.hlo, d = box.hhi;
    if (q.min_lo && *q.min_lo > a) a = *q.min_lo;
    if (q.max_lo && *q.max_lo < b) b = *q.max_lo;
    if (q.min_hi && *q.min_hi > c) c = *q.min_hi;
    if (q.max_hi && *q.max_hi < d) d = *q.max_hi;
    if (q.pin_lo) {
        if (*q.pin_lo < a || *q.pin_lo > b) return false;
        a = b = *q.pin_lo;
    }
    if (q.pin_hi) {
        if (*q.pin_hi < c || *q.pin_hi > d) return false;
        c = d = *q.pin_hi;
    }
    if (a > b || c > d || a > d) return false;
    if (d.is_zero()) return false; // only (0,0) would remain
    if (box.has_strict) {
        // The point (min(b,d), d) maximizes both components simultaneously.
        Rational sup_lo = b < d ? b : d;
        if (box.strict_conj) return sup_lo > box.sl && d > box.sh;
        return sup_lo > box.sl || d > box.sh;
    }
    return true;
}

std::vector<ThresholdBox> region_boxes(PointRelation alpha, const IntervalValue& mu,
                                       StrictConvention convention) {
    std::vector<ThresholdBox> out;
    auto push_in = [&] {
        ThresholdBox b;
        b.lhi = mu.lo();
        b.hhi = mu.hi();
        out.push_back(b);
    };
    auto push_q = [&] {
        ThresholdBox b;
        b.llo = Rational(1) - mu.lo();
        b.hlo = Rational(1) - mu.hi();
        b.has_strict = true;
        b.strict_conj = convention == StrictConvention::BothStrict;
        b.sl = b.llo;
        b.sh = b.hlo;
        out.push_back(b);
    };
    switch (alpha) {
        case PointRelation::In: push_in(); break;
        case PointRelation::Q: push_q(); break;
        case PointRelation::InOrQ:
            push_in();
            push_q();
            break;
        case PointRelation::InAndQ:
            throw UnsupportedAlpha("alpha = inandq not supported");
    }
    return out;
}

std::vector<ThresholdBox> intersect_domain(const std::vector<ThresholdBox>& boxes,
                                           ThresholdDomain domain) {
    if (domain == ThresholdDomain::Unrestricted) return boxes;
    const Rational half(1, 2);
    std::vector<ThresholdBox> out;
    for (const ThresholdBox& b : boxes) {
        ThresholdBox down = b; // both components <= 1/2
        if (half < down.lhi) down.lhi = half;
        if (half < down.hhi) down.hhi = half;
        out.push_back(down);
        ThresholdBox up = b; // both components >= 1/2
        if (up.llo < half) up.llo = half;
        if (up.hlo < half) up.hlo = half;
        out.push_back(up);
    }
    return out;
}

/// Per-membership-value, per-grid-point feasibility bits.
struct RegionFlags {
    // direction "min": thresholds >= r (hypotheses for the rmin conclusion)
    bool e_min, lo_min, hi_min;
    // direction "max": thresholds <= r
    bool e_max, lo_max, hi_max;
    bool both; // r itself lies in the region
};

class QuantifierTables {
public:
    QuantifierTables(const IVFuzzySet& A, PointRelation alpha, const AlphaBetaOptions& opts,
                     PointRelation beta) {
        // Distinct membership values and element -> value id.
        value_id_.resize(A.size());
        for (int e = 0; e < A.size(); ++e) {
            const IntervalValue& v = A.at(e);
            int id = -1;
            for (std::size_t i = 0; i < values_.size(); ++i)
                if (values_[i] == v) { id = static_cast<int>(i); break; }
            if (id < 0) {
                id = static_cast<int>(values_.size());
                values_.push_back(v);
            }
            value_id_[e] = id;
        }

        CriticalThresholds crit(A);
        for (const IntervalValue& r : crit.grid()) {
            if (opts.domain == ThresholdDomain::HalfComparable &&
                !iv_comparable(r, IntervalValue::half()))
                continue;
            grid_.push_back(r);
        }

        const std::size_t nv = values_.size();
        flags_.resize(nv * grid_.size());
        beta_ok_.resize(nv * grid_.size());
        for (std::size_t vi = 0; vi < nv; ++vi) {
            auto boxes = intersect_domain(region_boxes(alpha, values_[vi], opts.convention),
                                          opts.domain);
            for (std::size_t gi = 0; gi < grid_.size(); ++gi) {
                const IntervalValue& r = grid_[gi];
                RegionFlags f{};
                for (const ThresholdBox& b : boxes) {
                    BoxQuery q;
                    q.min_lo = r.lo(); q.min_hi = r.hi();
                    f.e_min = f.e_min || feasible(b, q);
                    q = {}; q.pin_lo = r.lo(); q.min_hi = r.hi();
                    f.lo_min = f.lo_min || feasible(b, q);
                    q = {}; q.min_lo = r.lo(); q.pin_hi = r.hi();
                    f.hi_min = f.hi_min || feasible(b, q);
                    q = {}; q.max_lo = r.lo(); q.max_hi = r.hi();
                    f.e_max = f.e_max || feasible(b, q);
                    q = {}; q.pin_lo = r.lo(); q.max_hi = r.hi();
                    f.lo_max = f.lo_max || feasible(b, q);
                    q = {}; q.max_lo = r.lo(); q.pin_hi = r.hi();
                    f.hi_max = f.hi_max || feasible(b, q);
                    q = {}; q.pin_lo = r.lo(); q.pin_hi = r.hi();
                    f.both = f.both || feasible(b, q);
                }
                flags_[vi * grid_.size() + gi] = f;
                bool in = iv_leq(r, values_[vi]);
                bool qq = iv_sum_exceeds_one(values_[vi], r, opts.convention);
                bool ok = false;
                switch (beta) {
                    case PointRelation::In: ok = in; break;
                    case PointRelation::Q: ok = qq; break;
                    case PointRelation::InOrQ: ok = in || qq; break;
                    case PointRelation::InAndQ: ok = in && qq; break;
                }
                beta_ok_[vi * grid_.size() + gi] = ok;
            }
        }
    }

    int value_id(Element e) const { return value_id_[e]; }
    const std::vector<IntervalValue>& grid() const { return grid_; }
    const RegionFlags& flags(int vid, std::size_t gi) const { return flags_[vid * grid_.size() + gi]; }
    bool beta_ok(int vid, std::size_t gi) const { return beta_ok_[vid * grid_.size() + gi]; }

    /// rmin of one threshold per argument can equal r: everyone can sit above
    /// r, and the lo and hi components are attained (by one argument or two).
    bool achievable_min(std::span<const int> vids, std::size_t gi) const {
        bool any_both = false;
        int lo_at = -1, hi_at = -1;
        int lo_cnt = 0, hi_cnt = 0;
        for (std::size_t k = 0; k < vids.size(); ++k) {
            const RegionFlags& f = flags(vids[k], gi);
            if (!f.e_min) return false;
            if (f.both) any_both = true;
            if (f.lo_min) { ++lo_cnt; lo_at = static_cast<int>(k); }
            if (f.hi_min) { ++hi_cnt; hi_at = static_cast<int>(k); }
        }
        if (any_both) return true;
        if (lo_cnt == 0 || hi_cnt == 0) return false;
        return lo_cnt > 1 || hi_cnt > 1 || lo_at != hi_at;
    }

    bool achievable_max(std::span<const int> vids, std::size_t gi) const {
        bool any_both = false;
        int lo_at = -1, hi_at = -1;
        int lo_cnt = 0, hi_cnt = 0;
        for (std::size_t k = 0; k < vids.size(); ++k) {
            const RegionFlags& f = flags(vids[k], gi);
            if (!f.e_max) return false;
            if (f.both) any_both = true;
            if (f.lo_max) { ++lo_cnt; lo_at = static_cast<int>(k); }
            if (f.hi_max) { ++hi_cnt; hi_at = static_cast<int>(k); }
        }
        if (any_both) return true;
        if (lo_cnt == 0 || hi_cnt == 0) return false;
        return lo_cnt > 1 || hi_cnt > 1 || lo_at != hi_at;
    }

    bool in_region(int vid, std::size_t gi) const { return flags(vid, gi).both; }

private:
    std::vector<IntervalValue> values_;
    std::vector<int> value_id_;
    std::vector<IntervalValue> grid_;
    std::vector<RegionFlags> flags_;
    std::vector<bool> beta_ok_;
};

ClassReport violation(ConditionKind kind, std::string condition, ClassWitness w) {
    ClassReport rep;
    rep.ok = false;
    rep.kind = kind;
    rep.condition = std::move(condition);
    rep.witness = std::move(w);
    return rep;
}

} // namespace

ClassReport is_ordinary(const KrasnerHyperring& R, const IVFuzzySet& A) {
    require_instance(R, A);
    const int m = R.m();
    const int n = R.n();
    ClassReport rep;

    std::vector<IntervalValue> vals;
    for_each_tuple(m, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue w = rmin(std::span<const IntervalValue>(vals));
        for (Element a : R.f().at(t).elements()) {
            if (!iv_leq(w, A.at(a))) {
                rep = violation(ConditionKind::Sum, "(i)",
                                {{t.begin(), t.end()},
                                 a,
                                 w,
                                 std::nullopt,
                                 "rmin of memberships " + w.str() + " not <= mu(" +
                                     std::to_string(a) + ") = " + A.at(a).str()});
                return false;
            }
        }
        return true;
    });
    if (!rep.ok) return rep;

    for (Element b = 0; b < R.size(); ++b) {
        Element nb = R.inverse(b);
        if (!iv_leq(A.at(b), A.at(nb))) {
            return violation(ConditionKind::Negation, "(ii)",
                             {{b},
                              nb,
                              A.at(b),
                              std::nullopt,
                              "mu(" + std::to_string(b) + ") not <= mu(-" + std::to_string(b) +
                                  ")"});
        }
    }

    for_each_tuple(n, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue w = rmax(std::span<const IntervalValue>(vals));
        Element gv = R.g().at(t);
        if (!iv_leq(w, A.at(gv))) {
            rep = violation(ConditionKind::Product, "(iii)",
                            {{t.begin(), t.end()},
                             gv,
                             w,
                             std::nullopt,
                             "rmax of memberships " + w.str() + " not <= mu(g" + tuple_str(t) +
                                 ") = " + A.at(gv).str()});
            return false;
        }
        return true;
    });
    return rep;
}

ClassReport is_alpha_beta(const KrasnerHyperring& R, const IVFuzzySet& A, const AlphaBeta& ab,
                          const AlphaBetaOptions& opts) {
    require_instance(R, A);
    const int m = R.m();
    const int n = R.n();
    QuantifierTables tab(A, ab.alpha, opts, ab.beta);
    const std::size_t G = tab.grid().size();
    ClassReport rep;

    // (1) hypotheses on an m-tuple force the conclusion at rmin for every
    // member of the hyper-sum.
    std::vector<int> vids(m);
    for_each_tuple(m, R.size(), [&](std::span<const Element> t) {
        for (int i = 0; i < m; ++i) vids[i] = tab.value_id(t[i]);
        ElemSet targets = R.f().at(t);
        for (std::size_t gi = 0; gi < G; ++gi) {
            if (!tab.achievable_min(vids, gi)) continue;
            for (Element a : targets.elements()) {
                if (!tab.beta_ok(tab.value_id(a), gi)) {
                    rep = violation(
                        ConditionKind::Sum, "(1)",
                        {{t.begin(), t.end()},
                         a,
                         tab.grid()[gi],
                         std::nullopt,
                         "threshold " + tab.grid()[gi].str() + " is an achievable rmin but the " +
                             "conclusion fails at " + std::to_string(a)});
                    return false;
                }
            }
        }
        return true;
    });
    if (!rep.ok) return rep;

    // (2) single-argument condition on negatives.
    for (Element b = 0; b < R.size(); ++b) {
        int vb = tab.value_id(b);
        int vt = tab.value_id(R.inverse(b));
        for (std::size_t gi = 0; gi < G; ++gi) {
            if (!tab.in_region(vb, gi)) continue;
            if (!tab.beta_ok(vt, gi)) {
                return violation(ConditionKind::Negation, "(2)",
                                 {{b},
                                  R.inverse(b),
                                  tab.grid()[gi],
                                  std::nullopt,
                                  "hypothesis holds at " + tab.grid()[gi].str() +
                                      " but the conclusion fails at the negative"});
            }
        }
    }

    // (3) hypotheses on an n-tuple force the conclusion at rmax for g(...).
    std::vector<int> gvids(n);
    for_each_tuple(n, R.size(), [&](std::span<const Element> t) {
        for (int i = 0; i < n; ++i) gvids[i] = tab.value_id(t[i]);
        int vt = tab.value_id(R.g().at(t));
        for (std::size_t gi = 0; gi < G; ++gi) {
            if (!tab.achievable_max(gvids, gi)) continue;
            if (!tab.beta_ok(vt, gi)) {
                rep = violation(ConditionKind::Product, "(3)",
                                {{t.begin(), t.end()},
                                 R.g().at(t),
                                 tab.grid()[gi],
                                 std::nullopt,
                                 "threshold " + tab.grid()[gi].str() +
                                     " is an achievable rmax but the conclusion fails at g" +
                                     tuple_str(t)});
                return false;
            }
        }
        return true;
    });
    return rep;
}

ClassReport is_in_invq_closed(const KrasnerHyperring& R, const IVFuzzySet& A, Variant variant) {
    require_instance(R, A);
    const int m = R.m();
    const int n = R.n();
    const IntervalValue half = IntervalValue::half();
    ClassReport rep;

    std::vector<IntervalValue> vals;
    for_each_tuple(m, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue w = rmin(rmin(std::span<const IntervalValue>(vals)), half);
        for (Element a : R.f().at(t).elements()) {
            if (!iv_leq(w, A.at(a))) {
                rep = violation(ConditionKind::Sum, "(i2)",
                                {{t.begin(), t.end()},
                                 a,
                                 w,
                                 std::nullopt,
                                 "rmin with [1/2,1/2] " + w.str() + " not <= mu(" +
                                     std::to_string(a) + ")"});
                return false;
            }
        }
        return true;
    });
    if (!rep.ok) return rep;

    for (Element b = 0; b < R.size(); ++b) {
        IntervalValue w = rmin(A.at(b), half);
        if (!iv_leq(w, A.at(R.inverse(b)))) {
            return violation(ConditionKind::Negation, "(ii2)",
                             {{b}, R.inverse(b), w, std::nullopt,
                              "rmin with [1/2,1/2] not <= membership of the negative"});
        }
    }

    const bool corrected = variant == Variant::Corrected;
    for_each_tuple(n, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue mx = rmax(std::span<const IntervalValue>(vals));
        IntervalValue w = corrected ? rmin(mx, half) : rmax(mx, half);
        Element gv = R.g().at(t);
        if (!iv_leq(w, A.at(gv))) {
            rep = violation(ConditionKind::Product, corrected ? "(iii2c)" : "(iii2)",
                            {{t.begin(), t.end()},
                             gv,
                             w,
                             std::nullopt,
                             std::string(corrected ? "capped rmax " : "rmax with [1/2,1/2] ") +
                                 w.str() + " not <= mu(g" + tuple_str(t) + ")"});
            return false;
        }
        return true;
    });
    return rep;
}

ClassReport is_threshold(const KrasnerHyperring& R, const IVFuzzySet& A, const ThresholdPair& th,
                         Variant variant) {
    require_instance(R, A);
    const int m = R.m();
    const int n = R.n();
    ClassReport rep;

    std::vector<IntervalValue> vals;
    for_each_tuple(m, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue w = rmin(rmin(std::span<const IntervalValue>(vals)), th.s2);
        for (Element a : R.f().at(t).elements()) {
            if (!iv_leq(w, rmax(A.at(a), th.s1))) {
                rep = violation(ConditionKind::Sum, "(1)",
                                {{t.begin(), t.end()},
                                 a,
                                 w,
                                 std::nullopt,
                                 "rmin capped at s2 " + w.str() + " not <= rmax(mu(" +
                                     std::to_string(a) + "), s1)"});
                return false;
            }
        }
        return true;
    });
    if (!rep.ok) return rep;

    for (Element b = 0; b < R.size(); ++b) {
        IntervalValue w = rmin(A.at(b), th.s2);
        if (!iv_leq(w, rmax(A.at(R.inverse(b)), th.s1))) {
            return violation(ConditionKind::Negation, "(2)",
                             {{b}, R.inverse(b), w, std::nullopt,
                              "rmin capped at s2 not <= rmax of the negative's membership and s1"});
        }
    }

    const bool corrected = variant == Variant::Corrected;
    for_each_tuple(n, R.size(), [&](std::span<const Element> t) {
        vals.clear();
        for (Element e : t) vals.push_back(A.at(e));
        IntervalValue mx = rmax(std::span<const IntervalValue>(vals));
        IntervalValue w = corrected ? rmin(mx, th.s2) : rmax(mx, th.s2);
        Element gv = R.g().at(t);
        if (!iv_leq(w, rmax(A.at(gv), th.s1))) {
            rep = violation(ConditionKind::Product, corrected ? "(3c)" : "(3)",
                            {{t.begin(), t.end()},
                             gv,
                             w,
                             std::nullopt,
                             std::string(corrected ? "capped rmax " : "rmax with s2 ") + w.str() +
                                 " not <= rmax(mu(g" + tuple_str(t) + "), s1)"});
            return false;
        }
        return true;
    });
    return rep;
}

ClassReport level_criterion(const KrasnerHyperring& R, const IVFuzzySet& A,
                            const LevelRange& range) {
    require_instance(R, A);
    if (!iv_lt(range.s1, range.s2)) throw MalformedThresholds("level range requires s1 < s2");
    CriticalThresholds crit(A, {range.s1.lo(), range.s1.hi(), range.s2.lo(), range.s2.hi()});
    std::map<std::uint64_t, HyperidealReport> memo;
    for (const IntervalValue& s : crit.grid()) {
        if (!(iv_lt(range.s1, s) && iv_leq(s, range.s2))) continue;
        ElemSet level = level_set(A, s);
        if (level.empty()) continue;
        auto it = memo.find(level.bits());
        if (it == memo.end()) it = memo.emplace(level.bits(), is_hyperideal(R, level)).first;
        if (!it->second.ok) {
            return violation(ConditionKind::Level, "(level)",
                             {{},
                              std::nullopt,
                              s,
                              level,
                              "level set " + level.str() + " at " + s.str() +
                                  " is not a hyperideal: " + it->second.witness->describe()});
        }
    }
    return ClassReport::pass();
}

} // namespace hyperlab
