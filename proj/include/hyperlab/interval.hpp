#ifndef HYPERLAB_INTERVAL_HPP
#define HYPERLAB_INTERVAL_HPP

#include <span>
#include <string>
#include <vector>

#include "hyperlab/rational.hpp"

namespace hyperlab {

enum class Ordering { Less, Equal, Greater, Incomparable };

/// Convention for deciding whether an (unclamped) componentwise sum exceeds
/// [1,1]. The default treats > as "componentwise >= and not equal", so a sum
/// like (1.0, 1.1) counts. BothStrict requires both components strictly above
/// one; it exists for sensitivity runs and is not used by default anywhere.
enum class StrictConvention { Paper, BothStrict };

/// A closed subinterval [lo,hi] of [0,1] with exact rational endpoints.
/// Ordered componentwise; rmin/rmax are its lattice meet/join.
class IntervalValue {
public:
    IntervalValue() = default;

    static IntervalValue make(const Rational& lo, const Rational& hi) {
        if (lo < Rational(0) || hi > Rational(1) || lo > hi)
            throw MalformedInterval("not a subinterval of [0,1]: [" + lo.str() + "," + hi.str() + "]");
        IntervalValue v;
        v.lo_ = lo;
        v.hi_ = hi;
        return v;
    }

    static IntervalValue bottom() { return make(Rational(0), Rational(0)); }
    static IntervalValue top() { return make(Rational(1), Rational(1)); }
    static IntervalValue half() { return make(Rational(1, 2), Rational(1, 2)); }
    static IntervalValue scalar(const Rational& v) { return make(v, v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool is_bottom() const { return lo_.is_zero() && hi_.is_zero(); }
    bool is_scalar() const { return lo_ == hi_; }

    friend bool operator==(const IntervalValue& a, const IntervalValue& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

private:
    Rational lo_;
    Rational hi_;
};

inline bool iv_leq(const IntervalValue& a, const IntervalValue& b) {
    return a.lo() <= b.lo() && a.hi() <= b.hi();
}

inline bool iv_lt(const IntervalValue& a, const IntervalValue& b) {
    return iv_leq(a, b) && !(a == b);
}

inline bool iv_comparable(const IntervalValue& a, const IntervalValue& b) {
    return iv_leq(a, b) || iv_leq(b, a);
}

inline Ordering iv_cmp(const IntervalValue& a, const IntervalValue& b) {
    if (a == b) return Ordering::Equal;
    if (iv_leq(a, b)) return Ordering::Less;
    if (iv_leq(b, a)) return Ordering::Greater;
    return Ordering::Incomparable;
}

inline IntervalValue rmin(const IntervalValue& a, const IntervalValue& b) {
    return IntervalValue::make(a.lo() < b.lo() ? a.lo() : b.lo(),
                               a.hi() < b.hi() ? a.hi() : b.hi());
}

inline IntervalValue rmax(const IntervalValue& a, const IntervalValue& b) {
    return IntervalValue::make(a.lo() < b.lo() ? b.lo() : a.lo(),
                               a.hi() < b.hi() ? b.hi() : a.hi());
}

IntervalValue rmin(std::span<const IntervalValue> xs);
IntervalValue rmax(std::span<const IntervalValue> xs);

/// Componentwise infimum of a finite nonempty collection; coincides with
/// folded rmin (rsup likewise with rmax).
IntervalValue rinf(std::span<const IntervalValue> xs);
IntervalValue rsup(std::span<const IntervalValue> xs);

inline IntervalValue rmin(std::initializer_list<IntervalValue> xs) {
    return rmin(std::span<const IntervalValue>(xs.begin(), xs.size()));
}
inline IntervalValue rmax(std::initializer_list<IntervalValue> xs) {
    return rmax(std::span<const IntervalValue>(xs.begin(), xs.size()));
}
inline IntervalValue rinf(std::initializer_list<IntervalValue> xs) {
    return rinf(std::span<const IntervalValue>(xs.begin(), xs.size()));
}
inline IntervalValue rsup(std::initializer_list<IntervalValue> xs) {
    return rsup(std::span<const IntervalValue>(xs.begin(), xs.size()));
}

/// k*[lo,hi] = [k*lo, k*hi] for a scalar k in [0,1].
IntervalValue iv_scale(const Rational& k, const IntervalValue& x);

/// Decides whether the unclamped componentwise sum x + y is strictly greater
/// than [1,1]. This is the single comparison point for the quasi-coincidence
/// test, so the strictness convention can be swapped globally.
bool iv_sum_exceeds_one(const IntervalValue& x, const IntervalValue& y,
                        StrictConvention convention = StrictConvention::Paper);

} // namespace hyperlab

#endif
