#include "hyperlab/interval.hpp"

namespace hyperlab {

IntervalValue rmin(std::span<const IntervalValue> xs) {
    if (xs.empty()) throw EmptyCollection("rmin of empty collection");
    IntervalValue acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = rmin(acc, xs[i]);
    return acc;
}

IntervalValue rmax(std::span<const IntervalValue> xs) {
    if (xs.empty()) throw EmptyCollection("rmax of empty collection");
    IntervalValue acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = rmax(acc, xs[i]);
    return acc;
}

IntervalValue rinf(std::span<const IntervalValue> xs) {
    if (xs.empty()) throw EmptyCollection("rinf of empty collection");
    return rmin(xs);
}

IntervalValue rsup(std::span<const IntervalValue> xs) {
    if (xs.empty()) throw EmptyCollection("rsup of empty collection");
    return rmax(xs);
}

IntervalValue iv_scale(const Rational& k, const IntervalValue& x) {
    if (k < Rational(0) || k > Rational(1))
        throw ScalarOutOfRange("scale factor outside [0,1]: " + k.str());
    return IntervalValue::make(k * x.lo(), k * x.hi());
}

bool iv_sum_exceeds_one(const IntervalValue& x, const IntervalValue& y,
                        StrictConvention convention) {
    const Rational one(1);
    Rational slo = x.lo() + y.lo();
    Rational shi = x.hi() + y.hi();
    if (convention == StrictConvention::BothStrict) return slo > one && shi > one;
    return slo >= one && shi >= one && (slo > one || shi > one);
}

} // namespace hyperlab
