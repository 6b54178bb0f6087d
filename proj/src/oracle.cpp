#include "hyperlab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace hyperlab {

KrasnerHyperring make_paper24() {
    const int size = 4;
    auto S = [](std::initializer_list<Element> es) {
        ElemSet s;
        for (Element e : es) s.insert(e);
        return s;
    };
    std::vector<ElemSet> f(16);
    auto put = [&](Element a, Element b, ElemSet v) {
        f[a * size + b] = v;
        f[b * size + a] = v;
    };
    for (Element x = 0; x < size; ++x) put(0, x, S({x}));
    put(1, 1, S({0, 1}));
    put(1, 2, S({3}));
    put(1, 3, S({2, 3}));
    put(2, 2, S({0}));
    put(2, 3, S({1}));
    put(3, 3, S({0, 1}));

    std::vector<Element> g(256, 0);
    std::vector<Element> t(4);
    for (int r = 0; r < 256; ++r) {
        int x = r;
        bool allB = true;
        for (int i = 3; i >= 0; --i) {
            t[i] = x % size;
            x /= size;
            allB = allB && (t[i] == 2 || t[i] == 3);
        }
        g[r] = allB ? 2 : 0;
    }
    return KrasnerHyperring(HyperOpTable(2, size, std::move(f)), NaryOpTable(4, size, std::move(g)), 0);
}

KrasnerHyperring make_zmod(int k, int m, int n) {
    if (k < 1 || k > 64) throw CarrierTooLarge("zmod carrier size out of range");
    std::uint64_t fcount = 1;
    for (int i = 0; i < m; ++i) fcount *= k;
    std::vector<ElemSet> f(fcount);
    {
        std::vector<Element> t(m, 0);
        for (std::uint64_t r = 0; r < fcount; ++r) {
            std::uint64_t x = r;
            int sum = 0;
            for (int i = m - 1; i >= 0; --i) {
                sum += static_cast<int>(x % k);
                x /= k;
            }
            f[r] = ElemSet::single(sum % k);
        }
    }
    std::uint64_t gcount = 1;
    for (int i = 0; i < n; ++i) gcount *= k;
    std::vector<Element> g(gcount);
    for (std::uint64_t r = 0; r < gcount; ++r) {
        std::uint64_t x = r;
        long long prod = 1;
        for (int i = n - 1; i >= 0; --i) {
            prod = (prod * static_cast<long long>(x % k)) % k;
            x /= k;
        }
        g[r] = static_cast<Element>(prod);
    }
    return KrasnerHyperring(HyperOpTable(m, k, std::move(f)), NaryOpTable(n, k, std::move(g)), 0);
}

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, KrasnerHyperring ring) {
        AxiomReport rep = ring.validate();
        if (!rep.all_ok()) throw Error("catalog structure failed validation: " + name);
        out.push_back({std::move(name), std::move(ring)});
    };
    add("paper24", make_paper24());
    add("zmod2_2_2", make_zmod(2, 2, 2));
    add("zmod3_2_3", make_zmod(3, 2, 3));
    add("zmod4_2_4", make_zmod(4, 2, 4));
    add("zmod5_3_2", make_zmod(5, 3, 2));
    add("zmod6_2_2", make_zmod(6, 2, 2));
    return out;
}

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

/// Monotone staircase of (lo,hi) grid pairs from from*(1,1) to to*(1,1),
/// keeping lo <= hi; appends every point after the start.
void staircase(std::mt19937_64& rng, int q, int from, int to,
               std::vector<IntervalValue>& out) {
    int lo = from, hi = from;
    while (lo < to || hi < to) {
        bool can_hi = hi < to;
        bool can_lo = lo < hi;
        bool move_hi;
        if (can_hi && can_lo) move_hi = (rng() & 1) != 0;
        else move_hi = can_hi;
        if (move_hi) ++hi; else ++lo;
        out.push_back(IntervalValue::make(Rational(lo, q), Rational(hi, q)));
    }
}

} // namespace

std::vector<IVFuzzySet> gen_fuzzy(const KrasnerHyperring& R, const CorpusSpec& spec) {
    spec.check();
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<IVFuzzySet> out;
    out.reserve(spec.count);
    for (int c = 0; c < spec.count; ++c) {
        IVFuzzySet A(R.size(), IntervalValue::bottom());
        if (spec.chain_only) {
            std::vector<IntervalValue> chain;
            int lower_top = spec.q / 2;
            int upper_bot = (spec.q + 1) / 2;
            staircase(rng, spec.q, 0, lower_top, chain);
            if (upper_bot > lower_top)
                chain.push_back(IntervalValue::make(Rational(upper_bot, spec.q), Rational(upper_bot, spec.q)));
            staircase(rng, spec.q, upper_bot, spec.q, chain);
            for (int e = 0; e < R.size(); ++e)
                A.set(e, chain[next_below(rng, chain.size())]);
        } else {
            for (int e = 0; e < R.size(); ++e) {
                int a = static_cast<int>(next_below(rng, spec.q + 1));
                int b = static_cast<int>(next_below(rng, spec.q + 1));
                if (a > b) std::swap(a, b);
                A.set(e, IntervalValue::make(Rational(a, spec.q), Rational(b, spec.q)));
            }
        }
        out.push_back(std::move(A));
    }
    return out;
}

std::vector<Rational> grid_points(int q) {
    std::set<Rational> pts{Rational(1, 2)};
    for (int i = 0; i <= q; ++i) pts.insert(Rational(i, q));
    return {pts.begin(), pts.end()};
}

namespace {

struct IvLess {
    bool operator()(const IntervalValue& a, const IntervalValue& b) const {
        if (a.lo() < b.lo()) return true;
        if (b.lo() < a.lo()) return false;
        return a.hi() < b.hi();
    }
};

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

bool relation_holds(PointRelation rel, const IntervalValue& mu, const IntervalValue& s,
                    StrictConvention conv) {
    bool in = iv_leq(s, mu);
    bool qq = iv_sum_exceeds_one(mu, s, conv);
    switch (rel) {
        case PointRelation::In: return in;
        case PointRelation::Q: return qq;
        case PointRelation::InOrQ: return in || qq;
        case PointRelation::InAndQ: return in && qq;
    }
    return false;
}

} // namespace

bool slow_alpha_beta(const KrasnerHyperring& R, const IVFuzzySet& A, const AlphaBeta& ab,
                     const std::vector<Rational>& points, const AlphaBetaOptions& opts,
                     std::uint64_t budget) {
    if (!R.validated()) throw NotValidated("structure not validated");
    if (A.size() != R.size()) throw CarrierMismatch("fuzzy set carrier mismatch");

    std::vector<IntervalValue> pairs;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i; j < points.size(); ++j) {
            IntervalValue v = IntervalValue::make(points[i], points[j]);
            if (v.is_bottom()) continue;
            if (opts.domain == ThresholdDomain::HalfComparable &&
                !iv_comparable(v, IntervalValue::half()))
                continue;
            pairs.push_back(v);
        }

    // Per-element admissible hypothesis thresholds.
    std::vector<std::vector<IntervalValue>> admissible(R.size());
    for (Element e = 0; e < R.size(); ++e)
        for (const IntervalValue& p : pairs)
            if (relation_holds(ab.alpha, A.at(e), p, opts.convention)) admissible[e].push_back(p);

    std::uint64_t used = 0;
    auto charge = [&](std::uint64_t amount) {
        used += amount;
        if (used > budget) throw InstanceTooLarge("slow oracle budget exceeded");
    };

    auto beta_at = [&](Element target, const IntervalValue& r) {
        return relation_holds(ab.beta, A.at(target), r, opts.convention);
    };

    bool ok = true;

    // Condition (1): product over hypothesis thresholds, conclusion at rmin.
    {
        std::map<IntervalValue, bool, IvLess> memo;
        for_each_tuple(R.m(), R.size(), [&](std::span<const Element> t) {
            std::uint64_t combos = 1;
            for (Element e : t) combos *= admissible[e].size();
            charge(combos);
            ElemSet targets = R.f().at(t);
            std::function<bool(int, const IntervalValue&)> rec =
                [&](int i, const IntervalValue& acc) -> bool {
                if (i == R.m()) {
                    auto it = memo.find(acc);
                    if (it == memo.end()) {
                        bool good = true;
                        for (Element a : targets.elements())
                            if (!beta_at(a, acc)) { good = false; break; }
                        it = memo.emplace(acc, good).first;
                    }
                    return it->second;
                }
                for (const IntervalValue& p : admissible[t[i]])
                    if (!rec(i + 1, i == 0 ? p : rmin(acc, p))) return false;
                return true;
            };
            // memo depends on the target set; reset per tuple.
            memo.clear();
            if (!rec(0, IntervalValue::top())) { ok = false; return false; }
            return true;
        });
        if (!ok) return false;
    }

    // Condition (2).
    for (Element b = 0; b < R.size(); ++b) {
        charge(admissible[b].size());
        for (const IntervalValue& p : admissible[b])
            if (!beta_at(R.inverse(b), p)) return false;
    }

    // Condition (3): conclusion at rmax for g.
    {
        for_each_tuple(R.n(), R.size(), [&](std::span<const Element> t) {
            std::uint64_t combos = 1;
            for (Element e : t) combos *= admissible[e].size();
            charge(combos);
            Element target = R.g().at(t);
            std::map<IntervalValue, bool, IvLess> memo;
            std::function<bool(int, const IntervalValue&)> rec =
                [&](int i, const IntervalValue& acc) -> bool {
                if (i == R.n()) {
                    auto it = memo.find(acc);
                    if (it == memo.end()) it = memo.emplace(acc, beta_at(target, acc)).first;
                    return it->second;
                }
                for (const IntervalValue& p : admissible[t[i]])
                    if (!rec(i + 1, i == 0 ? p : rmax(acc, p))) return false;
                return true;
            };
            if (!rec(0, IntervalValue::bottom())) { ok = false; return false; }
            return true;
        });
    }
    return ok;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "T5",
                                              "T6", "T7", "T8", "T9"};
    return ids;
}

namespace {

ThresholdPair th_low() { return {IntervalValue::bottom(), IntervalValue::half()}; }
ThresholdPair th_full() { return {IntervalValue::bottom(), IntervalValue::top()}; }
ThresholdPair th_upper() { return {IntervalValue::half(), IntervalValue::top()}; }

using InstanceCheck =
    std::function<std::vector<std::string>(const KrasnerHyperring&, const IVFuzzySet&, Variant)>;

std::vector<std::string> check_iff(bool lhs, bool rhs, const std::string& lhs_name,
                                   const std::string& rhs_name) {
    std::vector<std::string> out;
    if (lhs && !rhs) out.push_back(lhs_name + " holds but " + rhs_name + " fails");
    if (rhs && !lhs) out.push_back(rhs_name + " holds but " + lhs_name + " fails");
    return out;
}

} // namespace

TheoremResult run_theorem(const std::string& id, const std::vector<CatalogEntry>& catalog,
                          const CorpusSpec& corpus, Variant variant) {
    TheoremResult result;
    result.id = id;
    result.seed = corpus.seed;
    result.variant = variant;

    const AlphaBeta in_in(PointRelation::In, PointRelation::In);
    const AlphaBeta in_invq(PointRelation::In, PointRelation::InOrQ);
    const AlphaBeta invq_invq(PointRelation::InOrQ, PointRelation::InOrQ);

    // Subset-driven replays: the characteristic-function theorems.
    if (id == "T3" || id == "T4") {
        for (const CatalogEntry& entry : catalog) {
            const KrasnerHyperring& R = entry.ring;
            const std::uint64_t total = ElemSet::full(R.size()).bits();
            for (std::uint64_t mask = 1; mask <= total; ++mask) {
                ElemSet S(mask);
                ++result.trials;
                bool ideal = is_hyperideal(R, S).ok;
                IVFuzzySet chi = characteristic(S, R.size());
                if (id == "T3") {
                    if (ideal && !is_alpha_beta(R, chi, in_in).ok)
                        result.record({entry.name, -1,
                                       "characteristic of hyperideal " + S.str() +
                                           " is not an (in,in) hyperideal"});
                } else {
                    bool ab = is_alpha_beta(R, chi, in_invq).ok;
                    for (const std::string& msg :
                         check_iff(ideal, ab, "hyperideal " + S.str(), "(in,invq) on characteristic"))
                        result.record({entry.name, -1, msg});
                }
            }
        }
        return result;
    }

    InstanceCheck check;
    if (id == "T1") {
        check = [&](const KrasnerHyperring& R, const IVFuzzySet& A, Variant) {
            std::vector<std::string> out;
            if (is_alpha_beta(R, A, in_in).ok && !is_alpha_beta(R, A, in_invq).ok)
                out.push_back("(in,in) holds but (in,invq) fails");
            return out;
        };
    } else if (id == "T2") {
        check = [&](const KrasnerHyperring& R, const IVFuzzySet& A, Variant) {
            std::vector<std::string> out;
            if (is_alpha_beta(R, A, invq_invq).ok && !is_alpha_beta(R, A, in_invq).ok)
                out.push_back("(invq,invq) holds but (in,invq) fails");
            return out;
        };
    } else if (id == "T5") {
        check = [](const KrasnerHyperring& R, const IVFuzzySet& A, Variant) {
            bool ord = is_ordinary(R, A).ok;
            bool lv = level_criterion(R, A, LevelRange::full()).ok;
            return check_iff(ord, lv, "ordinary", "levels over (0,1]");
        };
    } else if (id == "T6") {
        check = [&](const KrasnerHyperring& R, const IVFuzzySet& A, Variant) {
            std::vector<std::string> out;
            if (is_alpha_beta(R, A, in_invq).ok &&
                !level_criterion(R, A, LevelRange::lower()).ok)
                out.push_back("(in,invq) holds but a low level set is not a hyperideal");
            return out;
        };
    } else if (id == "T7") {
        check = [](const KrasnerHyperring& R, const IVFuzzySet& A, Variant v) {
            bool th = is_threshold(R, A, th_upper(), v).ok;
            bool lv = level_criterion(R, A, LevelRange::upper()).ok;
            return check_iff(th, lv, "upper rmax conditions", "levels over (1/2,1]");
        };
    } else if (id == "T8") {
        check = [](const KrasnerHyperring& R, const IVFuzzySet& A, Variant v) {
            std::vector<std::string> out;
            const std::pair<ThresholdPair, const char*> cases[] = {
                {th_low(), "(0,1/2]"}, {th_full(), "(0,1]"}, {th_upper(), "(1/2,1]"}};
            for (const auto& [th, name] : cases) {
                bool thr = is_threshold(R, A, th, v).ok;
                bool lv = level_criterion(R, A, LevelRange::custom(th)).ok;
                for (const std::string& msg :
                     check_iff(thr, lv, std::string("thresholds ") + name,
                               std::string("levels over ") + name))
                    out.push_back(msg);
            }
            return out;
        };
    } else if (id == "T9") {
        check = [](const KrasnerHyperring& R, const IVFuzzySet& A, Variant v) {
            std::vector<std::string> out;
            const IntervalValue half = IntervalValue::half();
            const std::tuple<ImplicationOperator, ThresholdPair, const char*> cases[] = {
                {ImplicationOperator::GainesRescher, th_full(), "Igr vs thresholds (0,1]"},
                {ImplicationOperator::Godel, th_low(), "Ig vs thresholds (0,1/2]"},
                {ImplicationOperator::ContrapositionGodel, th_upper(), "Icg vs thresholds (1/2,1]"}};
            for (const auto& [op, th, name] : cases) {
                bool imp = is_t_implication_based(R, A, op, half).ok;
                bool thr = is_threshold(R, A, th, v).ok;
                for (const std::string& msg : check_iff(imp, thr, name, name))
                    out.push_back(msg);
            }
            return out;
        };
    } else {
        throw UnknownTheorem("unknown theorem id: " + id);
    }

    for (const CatalogEntry& entry : catalog) {
        std::vector<IVFuzzySet> sets = gen_fuzzy(entry.ring, corpus);
        for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
            ++result.trials;
            for (std::string& msg : check(entry.ring, sets[i], variant))
                result.record({entry.name, i, std::move(msg)});
        }
    }
    return result;
}

} // namespace hyperlab
