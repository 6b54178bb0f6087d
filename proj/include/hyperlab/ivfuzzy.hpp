#ifndef HYPERLAB_IVFUZZY_HPP
#define HYPERLAB_IVFUZZY_HPP

#include <vector>

#include "hyperlab/hyperstructure.hpp"
#include "hyperlab/interval.hpp"

namespace hyperlab {

/// Total map from a finite carrier to D[0,1].
class IVFuzzySet {
public:
    IVFuzzySet() = default;
    IVFuzzySet(int size, IntervalValue fill) : mu_(size, fill) {}
    explicit IVFuzzySet(std::vector<IntervalValue> mu) : mu_(std::move(mu)) {}

    int size() const { return static_cast<int>(mu_.size()); }
    const IntervalValue& at(Element e) const { return mu_.at(e); }
    void set(Element e, const IntervalValue& v) { mu_.at(e) = v; }
    const std::vector<IntervalValue>& values() const { return mu_; }

    ElemSet support() const {
        ElemSet s;
        for (int e = 0; e < size(); ++e)
            if (!mu_[e].is_bottom()) s.insert(e);
        return s;
    }

    friend bool operator==(const IVFuzzySet& a, const IVFuzzySet& b) { return a.mu_ == b.mu_; }

private:
    std::vector<IntervalValue> mu_;
};

/// Fuzzy point: value s at the support element, [0,0] elsewhere.
/// The value must be nonzero.
struct IVFuzzyPoint {
    Element support;
    IntervalValue value;

    IVFuzzyPoint(Element e, IntervalValue v) : support(e), value(std::move(v)) {
        if (value.is_bottom()) throw MalformedInterval("fuzzy point value must not be [0,0]");
    }
};

enum class PointRelation { In, Q, InOrQ, InAndQ };

const char* relation_name(PointRelation rel);
PointRelation parse_relation(const std::string& name);

/// Point-to-set relations: In is componentwise dominance by the membership
/// value, Q is quasi-coincidence (membership + value exceeds [1,1]).
bool satisfies(const IVFuzzyPoint& p, const IVFuzzySet& A, PointRelation rel,
               StrictConvention convention = StrictConvention::Paper);

/// { a | mu(a) >= s } under componentwise order.
ElemSet level_set(const IVFuzzySet& A, const IntervalValue& s);

/// [1,1] on S, [0,0] elsewhere.
IVFuzzySet characteristic(const ElemSet& S, int size);

/// Threshold partition of a fuzzy set: the sorted critical points (value
/// endpoints, their complements, 0, 1/2, 1, plus a midpoint inside each gap)
/// and the representative grid of interval thresholds built from them.
///
/// Every predicate of the form "mu(x) >= s", "mu(x)+s > [1,1]" is constant as
/// s ranges over one cell of the partition, so quantifying over the grid is
/// equivalent to quantifying over all of D[0,1].
class CriticalThresholds {
public:
    CriticalThresholds(const IVFuzzySet& A, std::vector<Rational> extra_points = {});

    const std::vector<Rational>& points() const { return points_; }
    const std::vector<IntervalValue>& grid() const { return grid_; }

    /// Cell representative of a scalar in [0,1]: itself when it is a base
    /// critical point, otherwise the midpoint of its enclosing gap.
    Rational representative(const Rational& v) const;
    IntervalValue representative(const IntervalValue& v) const;

private:
    std::vector<Rational> base_;   // sorted distinct critical points
    std::vector<Rational> points_; // base plus gap midpoints, sorted
    std::vector<IntervalValue> grid_;
};

/// Same family of level subsets, decided on the union of both representative
/// grids.
bool equivalent(const IVFuzzySet& A, const IVFuzzySet& B);

} // namespace hyperlab

#endif
