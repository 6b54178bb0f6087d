#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperlab/oracle.hpp"

using namespace hyperlab;

namespace {

IntervalValue tenths(int lo, int hi) {
    return IntervalValue::make(Rational(lo, 10), Rational(hi, 10));
}

/// Membership of the running 4-element example: 0,1 -> [0.8,0.9],
/// 2 -> [0.7,0.8], 3 -> [0.6,0.7].
IVFuzzySet example_set() {
    IVFuzzySet A(4, IntervalValue::bottom());
    A.set(0, tenths(8, 9));
    A.set(1, tenths(8, 9));
    A.set(2, tenths(7, 8));
    A.set(3, tenths(6, 7));
    return A;
}

ElemSet es(std::initializer_list<Element> xs) {
    ElemSet s;
    for (Element x : xs) s.insert(x);
    return s;
}

Rational random_unit_rational(std::mt19937_64& rng, int max_den = 1000) {
    long long d = 1 + static_cast<long long>(rng() % max_den);
    long long n = static_cast<long long>(rng() % (d + 1));
    return Rational(n, d);
}

} // namespace

TEST_CASE("point relations") {
    IVFuzzySet A = example_set();
    CHECK(satisfies(IVFuzzyPoint(0, tenths(8, 9)), A, PointRelation::In));
    CHECK(satisfies(IVFuzzyPoint(3, IntervalValue::half()), A, PointRelation::Q));
    CHECK(satisfies(IVFuzzyPoint(2, tenths(1, 2)), A, PointRelation::In));
    CHECK_FALSE(satisfies(IVFuzzyPoint(3, tenths(2, 8)), A, PointRelation::InOrQ));
    CHECK(satisfies(IVFuzzyPoint(0, tenths(8, 9)), A, PointRelation::InAndQ));
    CHECK_THROWS_AS(IVFuzzyPoint(0, IntervalValue::bottom()), MalformedInterval);
}

TEST_CASE("level sets") {
    IVFuzzySet A = example_set();
    CHECK(level_set(A, tenths(7, 8)) == es({0, 1, 2}));
    CHECK(level_set(A, IntervalValue::bottom()) == ElemSet::full(4));
    CHECK(level_set(A, tenths(6, 7)) == ElemSet::full(4));
    CHECK(level_set(A, tenths(9, 9)) == ElemSet());
    IVFuzzySet chi = characteristic(es({0, 2}), 4);
    for (auto s : {tenths(1, 1), tenths(3, 9), IntervalValue::top()})
        CHECK(level_set(chi, s) == es({0, 2}));
}

TEST_CASE("characteristic functions") {
    IVFuzzySet chi = characteristic(es({0}), 4);
    CHECK(chi.at(0) == IntervalValue::top());
    CHECK(chi.at(1) == IntervalValue::bottom());
    CHECK(characteristic(ElemSet(), 4) == IVFuzzySet(4, IntervalValue::bottom()));
    CHECK(satisfies(IVFuzzyPoint(1, IntervalValue::top()), characteristic(es({0, 1}), 4),
                    PointRelation::In));
    CHECK(chi.support() == es({0}));
}

TEST_CASE("support is exactly the nonbottom carrier part") {
    IVFuzzySet A = example_set();
    CHECK(A.support() == ElemSet::full(4));
    A.set(2, IntervalValue::bottom());
    CHECK(A.support() == es({0, 1, 3}));
}

TEST_CASE("critical thresholds of a constant set") {
    IVFuzzySet A(4, IntervalValue::half());
    CriticalThresholds crit(A);
    std::vector<Rational> expected = {Rational(0), Rational(1, 4), Rational(1, 2),
                                      Rational(3, 4), Rational(1)};
    CHECK(crit.points() == expected);
}

TEST_CASE("critical thresholds contain endpoints and complements") {
    CriticalThresholds crit(example_set());
    for (int i : {6, 7, 8, 9, 4, 3, 2, 1}) {
        Rational v(i, 10);
        CHECK(std::find(crit.points().begin(), crit.points().end(), v) != crit.points().end());
    }
    // Grid excludes [0,0] and includes every pair of points.
    for (const IntervalValue& g : crit.grid()) CHECK_FALSE(g.is_bottom());
}

TEST_CASE("level antitonicity over the grid") {
    IVFuzzySet A = example_set();
    CriticalThresholds crit(A);
    for (const IntervalValue& s : crit.grid())
        for (const IntervalValue& t : crit.grid())
            if (iv_leq(s, t)) CHECK(level_set(A, t).subset_of(level_set(A, s)));
}

TEST_CASE("grid soundness: random thresholds match their representatives") {
    std::mt19937_64 rng(7);
    IVFuzzySet sets[] = {example_set(), characteristic(es({0, 2}), 4),
                         IVFuzzySet(4, tenths(3, 6))};
    for (const IVFuzzySet& A : sets) {
        CriticalThresholds crit(A);
        for (int i = 0; i < 10000; ++i) {
            Rational a = random_unit_rational(rng);
            Rational b = random_unit_rational(rng);
            if (b < a) std::swap(a, b);
            IntervalValue s = IntervalValue::make(a, b);
            IntervalValue rep = crit.representative(s);
            for (int e = 0; e < A.size(); ++e) {
                CHECK(iv_leq(s, A.at(e)) == iv_leq(rep, A.at(e)));
                CHECK(iv_sum_exceeds_one(A.at(e), s) == iv_sum_exceeds_one(A.at(e), rep));
            }
        }
    }
}

TEST_CASE("satisfies is antitone in the threshold for In, monotone for Q") {
    IVFuzzySet A = example_set();
    CriticalThresholds crit(A);
    for (const IntervalValue& s : crit.grid())
        for (const IntervalValue& t : crit.grid()) {
            if (!iv_leq(s, t)) continue;
            for (int e = 0; e < A.size(); ++e) {
                if (satisfies(IVFuzzyPoint(e, t), A, PointRelation::In))
                    CHECK(satisfies(IVFuzzyPoint(e, s), A, PointRelation::In));
                if (satisfies(IVFuzzyPoint(e, s), A, PointRelation::Q))
                    CHECK(satisfies(IVFuzzyPoint(e, t), A, PointRelation::Q));
            }
        }
}

TEST_CASE("equivalence of level families") {
    IVFuzzySet A = example_set();
    CHECK(equivalent(A, A));
    // Halving a chain-valued set preserves the nested family.
    IVFuzzySet half(4, IntervalValue::bottom());
    for (int e = 0; e < 4; ++e) half.set(e, iv_scale(Rational(1, 2), A.at(e)));
    CHECK(equivalent(A, half));
    CHECK_FALSE(equivalent(characteristic(es({0}), 4), characteristic(es({0, 1}), 4)));
    CHECK_THROWS_AS(equivalent(A, IVFuzzySet(3, IntervalValue::bottom())), CarrierMismatch);
}
