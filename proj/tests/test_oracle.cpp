#include <doctest.h>

#include "hyperlab/oracle.hpp"

using namespace hyperlab;

namespace {

IntervalValue tenths(int lo, int hi) {
    return IntervalValue::make(Rational(lo, 10), Rational(hi, 10));
}

IVFuzzySet example_set() {
    IVFuzzySet A(4, IntervalValue::bottom());
    A.set(0, tenths(8, 9));
    A.set(1, tenths(8, 9));
    A.set(2, tenths(7, 8));
    A.set(3, tenths(6, 7));
    return A;
}

const KrasnerHyperring& paper24() {
    static KrasnerHyperring R = [] {
        KrasnerHyperring r = make_paper24();
        r.validate();
        return r;
    }();
    return R;
}

} // namespace

TEST_CASE("catalog entries validate on load") {
    std::vector<CatalogEntry> catalog = default_catalog();
    CHECK(catalog.size() == 6);
    for (const CatalogEntry& e : catalog) CHECK(e.ring.validated());
}

TEST_CASE("corpus generation is deterministic") {
    const KrasnerHyperring& R = paper24();
    CorpusSpec spec{1, 10, 3, false};
    std::vector<IVFuzzySet> a = gen_fuzzy(R, spec);
    std::vector<IVFuzzySet> b = gen_fuzzy(R, spec);
    REQUIRE(a.size() == 3);
    CHECK(a == b);
    spec.seed = 2;
    CHECK(gen_fuzzy(R, spec) != a);
    CHECK_THROWS_AS(gen_fuzzy(R, CorpusSpec{1, 1, 3, false}), MalformedCorpusSpec);
}

TEST_CASE("corpus endpoints live on the grid") {
    const KrasnerHyperring& R = paper24();
    for (bool chain : {false, true}) {
        CorpusSpec spec{7, 10, 25, chain};
        for (const IVFuzzySet& A : gen_fuzzy(R, spec))
            for (const IntervalValue& v : A.values()) {
                CHECK(10 % v.lo().den() == 0);
                CHECK(10 % v.hi().den() == 0);
            }
    }
}

TEST_CASE("chain corpora are chains comparable to the half point") {
    for (const CatalogEntry& e : default_catalog()) {
        CorpusSpec spec{13, 10, 25, true};
        for (const IVFuzzySet& A : gen_fuzzy(e.ring, spec)) {
            for (int x = 0; x < A.size(); ++x) {
                CHECK_FALSE(A.at(x).is_bottom());
                CHECK(iv_comparable(A.at(x), IntervalValue::half()));
                for (int y = 0; y < A.size(); ++y)
                    CHECK(iv_comparable(A.at(x), A.at(y)));
            }
        }
    }
}

TEST_CASE("slow oracle agrees with the classifier on the example set") {
    const AlphaBeta rels[] = {{PointRelation::In, PointRelation::In},
                              {PointRelation::In, PointRelation::InOrQ},
                              {PointRelation::Q, PointRelation::InOrQ}};
    std::vector<Rational> pts5 = grid_points(5);
    for (const AlphaBeta& ab : rels) {
        bool fast = is_alpha_beta(paper24(), example_set(), ab).ok;
        bool slow = slow_alpha_beta(paper24(), example_set(), ab, pts5);
        CHECK(fast == slow);
    }
    // The worked example is an (in, invq) hyperideal on the q=5 grid as well.
    CHECK(slow_alpha_beta(paper24(), example_set(),
                          {PointRelation::In, PointRelation::InOrQ}, pts5));
}

TEST_CASE("slow oracle rejects a non-ideal characteristic set") {
    ElemSet bad;
    bad.insert(0);
    bad.insert(3);
    IVFuzzySet chi = characteristic(bad, 4);
    CHECK_FALSE(slow_alpha_beta(paper24(), chi, {PointRelation::In, PointRelation::In},
                                grid_points(5)));
}

TEST_CASE("slow oracle budget guard") {
    std::vector<Rational> pts = grid_points(10);
    CHECK_THROWS_AS(slow_alpha_beta(paper24(), example_set(),
                                    {PointRelation::In, PointRelation::InOrQ}, pts, {}, 100),
                    InstanceTooLarge);
}

TEST_CASE("slow oracle agrees across a quarter-grid corpus") {
    // Sets valued on the quarter grid are resolved exactly by the 5-point
    // threshold grid, so the product enumeration must match the reduction.
    std::vector<Rational> pts = grid_points(4);
    const AlphaBeta rels[] = {{PointRelation::In, PointRelation::In},
                              {PointRelation::In, PointRelation::InOrQ},
                              {PointRelation::Q, PointRelation::InOrQ}};
    for (const CatalogEntry& e : default_catalog()) {
        if (e.name != "paper24" && e.name != "zmod4_2_4") continue;
        CorpusSpec spec{3, 4, 30, false};
        for (const IVFuzzySet& A : gen_fuzzy(e.ring, spec))
            for (const AlphaBeta& ab : rels)
                CHECK(is_alpha_beta(e.ring, A, ab).ok == slow_alpha_beta(e.ring, A, ab, pts));
    }
}

TEST_CASE("theorem T3 replays cleanly on paper24") {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({"paper24", make_paper24()});
    catalog.back().ring.validate();
    TheoremResult res = run_theorem("T3", catalog, CorpusSpec{42, 10, 0, false}, Variant::Corrected);
    CHECK(res.pass());
    CHECK(res.trials == 15); // nonempty subsets of a 4-element carrier
}

TEST_CASE("theorem T9 fails under the paper-literal variant") {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({"paper24", make_paper24()});
    catalog.back().ring.validate();
    CorpusSpec spec{42, 10, 50, true};
    TheoremResult res = run_theorem("T9", catalog, spec, Variant::PaperLiteral);
    CHECK_FALSE(res.pass());
    CHECK_FALSE(res.failures.empty());
    CHECK(res.failure_count >= static_cast<int>(res.failures.size()));
}

TEST_CASE("unknown theorem ids are rejected") {
    CHECK_THROWS_AS(run_theorem("T42", default_catalog(), CorpusSpec{1, 10, 1, false},
                                Variant::Corrected),
                    UnknownTheorem);
}

TEST_CASE("mutation sensitivity: lowering a membership below its f-row flips the verdict") {
    const KrasnerHyperring& R = paper24();
    IVFuzzySet A = example_set();
    REQUIRE(is_alpha_beta(R, A, {PointRelation::In, PointRelation::InOrQ}).ok);
    A.set(3, tenths(1, 1)); // below rmin of the (1,2) row
    CHECK_FALSE(is_alpha_beta(R, A, {PointRelation::In, PointRelation::InOrQ}).ok);
}
