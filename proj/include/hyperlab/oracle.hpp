#ifndef HYPERLAB_ORACLE_HPP
#define HYPERLAB_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlab/implication.hpp"

namespace hyperlab {

/// The (2,4)-hyperring worked out in the classifier tests: carrier {0,1,2,3},
/// addition table with 1+1 = {0,1}, 1+3 = 3+1 = {2,3}, 3+3 = {0,1}, and a
/// 4-ary product equal to 2 on B^4 (B = {2,3}) and 0 elsewhere.
KrasnerHyperring make_paper24();

/// Classical Z_k viewed as a degenerate Krasner (m,n)-hyperring:
/// f(a_1..a_m) = {sum mod k}, g(b_1..b_n) = product mod k.
KrasnerHyperring make_zmod(int k, int m, int n);

struct CatalogEntry {
    std::string name;
    KrasnerHyperring ring;
};

/// Named validated structures used by the verification suite. Every entry is
/// validated on construction; a failure here is a build error.
std::vector<CatalogEntry> default_catalog();

struct CorpusSpec {
    std::uint64_t seed = 0;
    int q = 10;          // grid denominator for membership endpoints
    int count = 0;       // number of fuzzy sets
    bool chain_only = false;

    void check() const {
        if (q < 2) throw MalformedCorpusSpec("grid denominator must be >= 2");
        if (count < 0) throw MalformedCorpusSpec("count must be nonnegative");
    }
};

/// Deterministic pseudo-random fuzzy sets on R's carrier. Plain mode draws
/// independent endpoint pairs i/q <= j/q (the bottom value [0,0] may occur).
/// Chain mode draws all values from one random monotone staircase from [0,0]
/// to [1,1] that passes through [1/2,1/2], excluding [0,0] itself: a chain in
/// D[0,1] whose members are pairwise comparable and comparable to the
/// half-point, which is the regime where the scalar-style level and closed
/// form theorems transfer exactly.
std::vector<IVFuzzySet> gen_fuzzy(const KrasnerHyperring& R, const CorpusSpec& spec);

/// Ground-truth re-evaluation of the quantified (alpha,beta) conditions by
/// direct product enumeration of per-argument thresholds over all interval
/// pairs built from the given scalar points (restricted to the same threshold
/// domain as the fast classifier). No achievable-region reduction: this is
/// the oracle that validates is_alpha_beta.
bool slow_alpha_beta(const KrasnerHyperring& R, const IVFuzzySet& A, const AlphaBeta& ab,
                     const std::vector<Rational>& points, const AlphaBetaOptions& opts = {},
                     std::uint64_t budget = 100'000'000ULL);

/// Scalar points {0, 1/q, ..., 1} plus 1/2.
std::vector<Rational> grid_points(int q);

struct TheoremFailure {
    std::string structure;
    int instance = -1;      // corpus index, or -1 for subset-driven theorems
    std::string detail;
};

struct TheoremResult {
    std::string id;
    std::uint64_t seed = 0;
    Variant variant = Variant::Corrected;
    int trials = 0;
    int failure_count = 0;
    std::vector<TheoremFailure> failures; // capped
    int failure_cap = 10;

    bool pass() const { return failure_count == 0; }
    void record(TheoremFailure f) {
        ++failure_count;
        if (static_cast<int>(failures.size()) < failure_cap) failures.push_back(std::move(f));
    }
};

const std::vector<std::string>& theorem_ids(); // T1..T9

/// Replays one theorem over catalog x corpus (T3/T4 range over subsets
/// instead of fuzzy sets). Implications are checked pointwise; biconditionals
/// in both directions. Every failure is recorded with a witness description.
TheoremResult run_theorem(const std::string& id, const std::vector<CatalogEntry>& catalog,
                          const CorpusSpec& corpus, Variant variant);

} // namespace hyperlab

#endif
