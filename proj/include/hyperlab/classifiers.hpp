#ifndef HYPERLAB_CLASSIFIERS_HPP
#define HYPERLAB_CLASSIFIERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperlab/ivfuzzy.hpp"

namespace hyperlab {

/// The printed closed-form conditions for the product slot appear in two
/// shapes: PaperLiteral keeps the outer rmax absorbing the upper constant,
/// Corrected caps the rmax of memberships with it (rmin of the rmax). The two
/// disagree on sets valued below the constant; both ship and the oracle
/// measures the difference.
enum class Variant { PaperLiteral, Corrected };

/// Domain the hypothesis thresholds of the quantified definitions range over.
///
/// HalfComparable restricts to nonzero intervals comparable to [1/2,1/2]
/// (every scalar threshold is included). This is exactly the regime in which
/// the half-point closed form is equivalent to the quantified definition; the
/// unrestricted interval domain rejects sets the closed form accepts and is
/// kept for sensitivity runs.
enum class ThresholdDomain { HalfComparable, Unrestricted };

struct AlphaBeta {
    PointRelation alpha;
    PointRelation beta;

    AlphaBeta(PointRelation a, PointRelation b) : alpha(a), beta(b) {
        if (alpha == PointRelation::InAndQ)
            throw UnsupportedAlpha("alpha = inandq has an empty hypothesis and is not supported");
    }
};

struct ThresholdPair {
    IntervalValue s1;
    IntervalValue s2;

    ThresholdPair(IntervalValue lo, IntervalValue hi) : s1(std::move(lo)), s2(std::move(hi)) {
        if (!iv_lt(s1, s2)) throw MalformedThresholds("thresholds require s1 < s2");
    }
};

enum class ConditionKind { Sum, Negation, Product, Level };

struct ClassWitness {
    std::vector<Element> tuple;           // offending argument tuple (or element)
    std::optional<Element> target;        // escaping element, when applicable
    std::optional<IntervalValue> threshold;
    std::optional<ElemSet> subset;        // failing level set, for level checks
    std::string detail;
};

struct ClassReport {
    bool ok = true;
    ConditionKind kind = ConditionKind::Sum;
    std::string condition; // e.g. "(i)", "(ii2)", "(3)"
    std::optional<ClassWitness> witness;

    static ClassReport pass() { return {}; }
};

struct AlphaBetaOptions {
    ThresholdDomain domain = ThresholdDomain::HalfComparable;
    StrictConvention convention = StrictConvention::Paper;
};

/// Ordinary interval-valued fuzzy hyperideal:
///   (i)   rmin of the argument memberships dominates no member of the
///         hyper-sum from above (rmin <= rinf over f),
///   (ii)  mu(b) <= mu(-b),
///   (iii) rmax of the argument memberships <= mu(g(...)).
ClassReport is_ordinary(const KrasnerHyperring& R, const IVFuzzySet& A);

/// Quantified (alpha,beta) hyperideal, decided by quantifier elimination:
/// per argument the admissible thresholds form a union of order boxes; the
/// conclusion depends only on the rmin (resp. rmax) of the chosen thresholds,
/// whose achievability is tested at every representative grid point.
ClassReport is_alpha_beta(const KrasnerHyperring& R, const IVFuzzySet& A, const AlphaBeta& ab,
                          const AlphaBetaOptions& opts = {});

/// Half-point closed form of the (in, in-or-q) notion.
ClassReport is_in_invq_closed(const KrasnerHyperring& R, const IVFuzzySet& A, Variant variant);

/// Fuzzy hyperideal with thresholds (s1, s2).
ClassReport is_threshold(const KrasnerHyperring& R, const IVFuzzySet& A, const ThresholdPair& th,
                         Variant variant);

struct LevelRange {
    IntervalValue s1;
    IntervalValue s2;

    static LevelRange lower() { return {IntervalValue::bottom(), IntervalValue::half()}; }
    static LevelRange upper() { return {IntervalValue::half(), IntervalValue::top()}; }
    static LevelRange full() { return {IntervalValue::bottom(), IntervalValue::top()}; }
    static LevelRange custom(const ThresholdPair& th) { return {th.s1, th.s2}; }
};

/// Checks that every nonempty level set F(A;s) with s1 < s <= s2 is a
/// hyperideal, evaluating s over the representative grid (augmented with the
/// range endpoints).
ClassReport level_criterion(const KrasnerHyperring& R, const IVFuzzySet& A, const LevelRange& range);

} // namespace hyperlab

#endif
