#include "hyperlab/hyperstructure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hyperlab {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) throw CarrierTooLarge("table size overflow");
        out *= base;
    }
    return out;
}

/// Odometer over all tuples of the given length with digits in [0, size).
/// Calls fn(span) for each tuple in lexicographic order; fn returns false to stop.
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

} // namespace

std::string ElemSet::str() const {
    std::string s = "{";
    bool first = true;
    for (Element e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

HyperOpTable::HyperOpTable(int arity, int size, std::vector<ElemSet> entries)
    : arity_(arity), size_(size), entries_(std::move(entries)) {
    if (arity < 2) throw Error("hyperoperation arity must be >= 2");
    if (size < 1 || size > 64) throw CarrierTooLarge("carrier size must be in [1,64]");
    if (entries_.size() != pow_u64(size, arity)) throw Error("hyperoperation table is not total");
    ElemSet full = ElemSet::full(size);
    for (const ElemSet& s : entries_) {
        if (s.empty()) throw Error("hyperoperation entry is empty");
        if (!s.subset_of(full)) throw Error("hyperoperation entry out of range");
    }
}

std::uint64_t HyperOpTable::rank(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("expected " + std::to_string(arity_) + " arguments");
    std::uint64_t r = 0;
    for (Element a : args) {
        if (a < 0 || a >= size_) throw Error("element out of range: " + std::to_string(a));
        r = r * size_ + static_cast<std::uint64_t>(a);
    }
    return r;
}

void HyperOpTable::set_entry(std::uint64_t r, ElemSet value) {
    if (value.empty() || !value.subset_of(ElemSet::full(size_))) throw Error("bad hyperoperation entry");
    entries_[r] = value;
}

NaryOpTable::NaryOpTable(int arity, int size, std::vector<Element> entries)
    : arity_(arity), size_(size), entries_(std::move(entries)) {
    if (arity < 2) throw Error("operation arity must be >= 2");
    if (size < 1 || size > 64) throw CarrierTooLarge("carrier size must be in [1,64]");
    if (entries_.size() != pow_u64(size, arity)) throw Error("operation table is not total");
    for (Element e : entries_)
        if (e < 0 || e >= size) throw Error("operation output out of range");
}

std::uint64_t NaryOpTable::rank(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("expected " + std::to_string(arity_) + " arguments");
    std::uint64_t r = 0;
    for (Element a : args) {
        if (a < 0 || a >= size_) throw Error("element out of range: " + std::to_string(a));
        r = r * size_ + static_cast<std::uint64_t>(a);
    }
    return r;
}

void NaryOpTable::set_entry(std::uint64_t r, Element value) {
    if (value < 0 || value >= size_) throw Error("bad operation output");
    entries_[r] = value;
}

std::vector<std::pair<std::string, const AxiomCheck*>> AxiomReport::items() const {
    return {
        {"commutativity", &commutativity},
        {"f-associativity", &f_associativity},
        {"scalar-neutral", &scalar_neutral},
        {"unique-inverses", &unique_inverses},
        {"reversibility", &reversibility},
        {"g-associativity", &g_associativity},
        {"distributivity", &distributivity},
        {"absorbing-zero", &absorbing_zero},
    };
}

KrasnerHyperring::KrasnerHyperring(HyperOpTable f, NaryOpTable g, Element zero)
    : f_(std::move(f)), g_(std::move(g)), zero_(zero) {
    if (f_.size() != g_.size()) throw Error("f and g disagree on carrier size");
    if (zero_ < 0 || zero_ >= f_.size()) throw Error("zero outside carrier");
}

Element KrasnerHyperring::neutral() const {
    if (!validated_) throw NotValidated("structure not validated");
    return neutral_;
}

Element KrasnerHyperring::inverse(Element a) const {
    if (!validated_) throw NotValidated("structure not validated");
    if (a < 0 || a >= size()) throw Error("element out of range");
    return inverses_[a];
}

ElemSet f_ext(const KrasnerHyperring& R, std::span<const ElemSet> sets) {
    const int m = R.m();
    if (static_cast<int>(sets.size()) != m) throw ArityMismatch("f_ext expects m argument sets");
    std::vector<std::vector<Element>> lists;
    lists.reserve(sets.size());
    for (const ElemSet& s : sets) {
        if (s.empty()) throw EmptyArgumentSet("f_ext argument set is empty");
        lists.push_back(s.elements());
    }
    ElemSet out;
    std::vector<Element> args(m);
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        for (int i = 0; i < m; ++i) args[i] = lists[i][idx[i]];
        out |= R.f().at(args);
        int i = m - 1;
        while (i >= 0 && ++idx[i] == lists[i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

ElemSet f_iter(const KrasnerHyperring& R, int l, std::span<const Element> args) {
    const int m = R.m();
    if (l < 1) throw ArityMismatch("f_iter requires l >= 1");
    if (static_cast<int>(args.size()) != l * (m - 1) + 1)
        throw ArityMismatch("f_iter expects l*(m-1)+1 arguments");
    ElemSet acc = R.f().at(args.subspan(0, m));
    std::size_t pos = m;
    std::vector<ElemSet> stage(m);
    for (int step = 1; step < l; ++step) {
        stage[0] = acc;
        for (int i = 1; i < m; ++i) stage[i] = ElemSet::single(args[pos + i - 1]);
        acc = f_ext(R, stage);
        pos += m - 1;
    }
    return acc;
}

AxiomReport KrasnerHyperring::validate(const ValidateOptions& opts) {
    AxiomReport report;
    const int sz = size();
    const int m = f_.arity();
    const int n = g_.arity();

    // Budget estimate before the exhaustive loops.
    {
        long double cost = 0;
        cost += powl(sz, m);                                  // commutativity
        cost += powl(sz, 2 * m - 1) * m * m;                  // f-associativity
        cost += powl(sz, 2) * m;                              // neutral + inverses
        cost += powl(sz, m) * m * m;                          // reversibility
        cost += powl(sz, 2 * n - 1) * n * n;                  // g-associativity
        cost += powl(sz, n - 1) * powl(sz, m) * n * (m + 2);  // distributivity
        cost += powl(sz, n - 1) * n;                          // absorbing zero
        if (cost > static_cast<long double>(opts.max_atomic))
            throw CarrierTooLarge("validation would exceed the atomic-lookup cap; raise max_atomic to override");
    }

    // (a) commutativity: f(t) must agree with f at the sorted tuple, which
    // covers every permutation pair.
    if (opts.require_commutative) {
        std::vector<Element> sorted(m);
        for_each_tuple(m, sz, [&](std::span<const Element> t) {
            sorted.assign(t.begin(), t.end());
            std::sort(sorted.begin(), sorted.end());
            if (!(f_.at(t) == f_.at(sorted))) {
                report.commutativity.fail({t.begin(), t.end()},
                                          "f" + tuple_str(t) + " != f at sorted tuple");
                return false;
            }
            return true;
        });
    } else {
        report.commutativity.note = "not checked (relaxed by options)";
    }

    // (b) m-ary associativity over all (2m-1)-tuples and nesting positions.
    {
        std::vector<ElemSet> sets(m);
        auto nested = [&](std::span<const Element> t, int i) {
            std::vector<Element> inner(t.begin() + i, t.begin() + i + m);
            for (int k = 0; k < m; ++k) {
                if (k < i) sets[k] = ElemSet::single(t[k]);
                else if (k == i) sets[k] = f_.at(inner);
                else sets[k] = ElemSet::single(t[k + m - 1]);
            }
            return f_ext(*this, sets);
        };
        for_each_tuple(2 * m - 1, sz, [&](std::span<const Element> t) {
            ElemSet first = nested(t, 0);
            for (int j = 1; j < m; ++j) {
                if (!(nested(t, j) == first)) {
                    report.f_associativity.fail(
                        {t.begin(), t.end()},
                        "nesting positions 0 and " + std::to_string(j) + " differ at " + tuple_str(t));
                    return false;
                }
            }
            return true;
        });
    }

    // (c) unique scalar neutral, which must be the designated zero.
    std::vector<Element> neutrals;
    {
        std::vector<Element> args(m);
        for (Element e = 0; e < sz; ++e) {
            bool neutral = true;
            for (Element a = 0; a < sz && neutral; ++a) {
                args[0] = a;
                for (int i = 1; i < m; ++i) args[i] = e;
                neutral = f_.at(args) == ElemSet::single(a);
            }
            if (neutral) neutrals.push_back(e);
        }
        if (neutrals.size() != 1) {
            report.scalar_neutral.fail({}, neutrals.empty()
                                               ? "no scalar neutral element"
                                               : "scalar neutral not unique");
        } else if (neutrals[0] != zero_) {
            report.scalar_neutral.fail({neutrals[0]},
                                       "scalar neutral differs from the designated zero");
        }
    }

    // (d) unique inverses: e in f(a, b, e^(m-2)) for exactly one b.
    std::vector<Element> inv(sz, -1);
    if (report.scalar_neutral.ok) {
        const Element e = neutrals[0];
        std::vector<Element> args(m);
        for (Element a = 0; a < sz; ++a) {
            int hits = 0;
            for (Element b = 0; b < sz; ++b) {
                args[0] = a;
                args[1] = b;
                for (int i = 2; i < m; ++i) args[i] = e;
                if (f_.at(args).contains(e)) {
                    ++hits;
                    inv[a] = b;
                }
            }
            if (hits != 1) {
                report.unique_inverses.fail({a}, hits == 0 ? "no inverse" : "inverse not unique");
                break;
            }
        }
    } else {
        report.unique_inverses.fail({}, "skipped: no scalar neutral");
    }

    // (e) reversibility: a in f(t) implies t[i] in f(a, inverses of the rest).
    if (report.unique_inverses.ok) {
        std::vector<Element> args(m);
        for_each_tuple(m, sz, [&](std::span<const Element> t) {
            for (Element a : f_.at(t).elements()) {
                for (int i = 0; i < m; ++i) {
                    args[0] = a;
                    int k = 1;
                    for (int j = 0; j < m; ++j)
                        if (j != i) args[k++] = inv[t[j]];
                    if (!f_.at(args).contains(t[i])) {
                        std::vector<Element> w(t.begin(), t.end());
                        w.push_back(a);
                        report.reversibility.fail(std::move(w),
                                                  "cannot solve back slot " + std::to_string(i) +
                                                      " of f" + tuple_str(t) + " for member " +
                                                      std::to_string(a));
                        return false;
                    }
                }
            }
            return true;
        });
    } else {
        report.reversibility.fail({}, "skipped: inverses unavailable");
    }

    // (f) n-ary associativity of g.
    {
        auto nested = [&](std::span<const Element> t, int i) {
            std::vector<Element> args(n);
            std::vector<Element> inner(t.begin() + i, t.begin() + i + n);
            for (int k = 0; k < n; ++k) {
                if (k < i) args[k] = t[k];
                else if (k == i) args[k] = g_.at(inner);
                else args[k] = t[k + n - 1];
            }
            return g_.at(args);
        };
        for_each_tuple(2 * n - 1, sz, [&](std::span<const Element> t) {
            Element first = nested(t, 0);
            for (int j = 1; j < n; ++j) {
                if (nested(t, j) != first) {
                    report.g_associativity.fail(
                        {t.begin(), t.end()},
                        "nesting positions 0 and " + std::to_string(j) + " differ at " + tuple_str(t));
                    return false;
                }
            }
            return true;
        });
    }

    // (g) distributivity of g over f in every slot.
    {
        std::vector<Element> gargs(n);
        std::vector<Element> fargs(m);
        bool done = false;
        for (int slot = 0; slot < n && !done; ++slot) {
            for_each_tuple(n - 1, sz, [&](std::span<const Element> outer) {
                for_each_tuple(m, sz, [&](std::span<const Element> a) {
                    ElemSet lhs;
                    for (Element c : f_.at(a).elements()) {
                        int k = 0;
                        for (int j = 0; j < n; ++j) gargs[j] = (j == slot) ? c : outer[k++];
                        lhs.insert(g_.at(gargs));
                    }
                    for (int i = 0; i < m; ++i) {
                        int k = 0;
                        for (int j = 0; j < n; ++j) gargs[j] = (j == slot) ? a[i] : outer[k++];
                        fargs[i] = g_.at(gargs);
                    }
                    ElemSet rhs = f_.at(fargs);
                    if (!(lhs == rhs)) {
                        std::vector<Element> w(outer.begin(), outer.end());
                        w.insert(w.end(), a.begin(), a.end());
                        report.distributivity.fail(std::move(w),
                                                   "slot " + std::to_string(slot) + ": g(.., f" +
                                                       tuple_str(a) + ", ..) = " + lhs.str() +
                                                       " but f of images = " + rhs.str());
                        done = true;
                        return false;
                    }
                    return true;
                });
                return !done;
            });
        }
    }

    // (h) zero absorbing in every slot of g.
    {
        std::vector<Element> gargs(n);
        bool done = false;
        for (int slot = 0; slot < n && !done; ++slot) {
            for_each_tuple(n - 1, sz, [&](std::span<const Element> outer) {
                int k = 0;
                for (int j = 0; j < n; ++j) gargs[j] = (j == slot) ? zero_ : outer[k++];
                if (g_.at(gargs) != zero_) {
                    std::vector<Element> w(outer.begin(), outer.end());
                    report.absorbing_zero.fail(std::move(w),
                                               "g with zero in slot " + std::to_string(slot) +
                                                   " returned " + std::to_string(g_.at(gargs)));
                    done = true;
                    return false;
                }
                return true;
            });
        }
    }

    if (report.all_ok()) {
        validated_ = true;
        neutral_ = neutrals[0];
        inverses_ = std::move(inv);
    }
    return report;
}

std::string HyperidealWitness::describe() const {
    switch (kind) {
        case Kind::Neutral: return "neutral element missing from subset";
        case Kind::Inverse: return "inverse of " + std::to_string(tuple[0]) + " escapes subset";
        case Kind::FClosure:
            return "f" + tuple_str(tuple) + " contains " + std::to_string(offending) +
                   " outside subset";
        case Kind::Solvability:
            return "no in-subset solution at " + tuple_str(tuple);
        case Kind::GAbsorption:
            return "g" + tuple_str(tuple) + " = " + std::to_string(offending) +
                   " escapes subset";
    }
    return {};
}

HyperidealReport is_hyperideal(const KrasnerHyperring& R, const ElemSet& S) {
    if (S.empty()) throw EmptySubset("hyperideal test on empty subset");
    if (!R.validated()) throw NotValidated("structure not validated");
    const int m = R.m();
    const int n = R.n();
    HyperidealReport rep;
    auto fail = [&](HyperidealWitness w) {
        rep.ok = false;
        rep.witness = std::move(w);
    };

    if (!S.contains(R.neutral())) {
        fail({HyperidealWitness::Kind::Neutral, {}, R.neutral()});
        return rep;
    }
    for (Element s : S.elements()) {
        if (!S.contains(R.inverse(s))) {
            fail({HyperidealWitness::Kind::Inverse, {s}, R.inverse(s)});
            return rep;
        }
    }

    const std::vector<Element> members = S.elements();
    const int k = static_cast<int>(members.size());

    // f-closure over S^m.
    {
        std::vector<int> idx(m, 0);
        std::vector<Element> t(m);
        while (true) {
            for (int i = 0; i < m; ++i) t[i] = members[idx[i]];
            ElemSet out = R.f().at(t);
            if (!out.subset_of(S)) {
                for (Element c : out.elements()) {
                    if (!S.contains(c)) {
                        fail({HyperidealWitness::Kind::FClosure, t, c});
                        return rep;
                    }
                }
            }
            int i = m - 1;
            while (i >= 0 && ++idx[i] == k) idx[i--] = 0;
            if (i < 0) break;
        }
    }

    // Solvability of b in f(b_1^{i-1}, x, b_{i+1}^m) with x in S.
    {
        std::vector<int> idx(m - 1, 0);
        std::vector<Element> t(m);
        for (Element b : members) {
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                for (int slot = 0; slot < m; ++slot) {
                    bool solved = false;
                    for (Element x : members) {
                        int w = 0;
                        for (int j = 0; j < m; ++j) t[j] = (j == slot) ? x : members[idx[w++]];
                        if (R.f().at(t).contains(b)) {
                            solved = true;
                            break;
                        }
                    }
                    if (!solved) {
                        std::vector<Element> wt;
                        wt.push_back(b);
                        for (int j = 0; j < m - 1; ++j) wt.push_back(members[idx[j]]);
                        fail({HyperidealWitness::Kind::Solvability, std::move(wt), b});
                        return rep;
                    }
                }
                int i = m - 2;
                while (i >= 0 && ++idx[i] == k) idx[i--] = 0;
                if (i < 0) break;
            }
        }
    }

    // g-absorption in every slot against the whole carrier.
    {
        std::vector<Element> t(n);
        bool done = false;
        for (int slot = 0; slot < n && !done; ++slot) {
            std::vector<Element> outer(n - 1, 0);
            while (!done) {
                for (Element s : members) {
                    int w = 0;
                    for (int j = 0; j < n; ++j) t[j] = (j == slot) ? s : outer[w++];
                    Element out = R.g().at(t);
                    if (!S.contains(out)) {
                        fail({HyperidealWitness::Kind::GAbsorption, t, out});
                        done = true;
                        break;
                    }
                }
                if (done) break;
                int i = n - 2;
                while (i >= 0 && ++outer[i] == R.size()) outer[i--] = 0;
                if (i < 0) break;
            }
        }
    }

    return rep;
}

namespace {

ElemSet close_seed(const KrasnerHyperring& R, ElemSet seed) {
    const int m = R.m();
    const int n = R.n();
    ElemSet T = seed;
    T.insert(R.neutral());
    bool changed = true;
    while (changed) {
        changed = false;
        ElemSet next = T;
        for (Element s : T.elements()) next.insert(R.inverse(s));
        {
            std::vector<Element> members = T.elements();
            std::vector<int> idx(m, 0);
            std::vector<Element> t(m);
            const int k = static_cast<int>(members.size());
            while (true) {
                for (int i = 0; i < m; ++i) t[i] = members[idx[i]];
                next |= R.f().at(t);
                int i = m - 1;
                while (i >= 0 && ++idx[i] == k) idx[i--] = 0;
                if (i < 0) break;
            }
        }
        {
            std::vector<Element> t(n);
            for (int slot = 0; slot < n; ++slot) {
                std::vector<Element> outer(n - 1, 0);
                while (true) {
                    for (Element s : T.elements()) {
                        int w = 0;
                        for (int j = 0; j < n; ++j) t[j] = (j == slot) ? s : outer[w++];
                        next.insert(R.g().at(t));
                    }
                    int i = n - 2;
                    while (i >= 0 && ++outer[i] == R.size()) outer[i--] = 0;
                    if (i < 0) break;
                }
            }
        }
        if (!(next == T)) {
            T = next;
            changed = true;
        }
    }
    return T;
}

} // namespace

IdealEnumeration enumerate_hyperideals(const KrasnerHyperring& R, const EnumerateOptions& opts) {
    if (!R.validated()) throw NotValidated("structure not validated");
    IdealEnumeration out;
    if (R.size() <= opts.exhaustive_cap) {
        const std::uint64_t total = ElemSet::full(R.size()).bits();
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            ElemSet s(mask);
            if (is_hyperideal(R, s).ok) out.ideals.push_back(s);
        }
        out.complete = true;
        return out;
    }
    if (!opts.allow_closure)
        throw CarrierTooLarge("carrier above the enumeration cap and closure mode disabled");
    std::set<std::uint64_t> found;
    for (Element a = 0; a < R.size(); ++a) {
        ElemSet c = close_seed(R, ElemSet::single(a));
        if (is_hyperideal(R, c).ok) found.insert(c.bits());
    }
    // Join pairs of generated ideals once, to catch a few non-principal ones.
    std::vector<std::uint64_t> base(found.begin(), found.end());
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            ElemSet c = close_seed(R, ElemSet(base[i] | base[j]));
            if (is_hyperideal(R, c).ok) found.insert(c.bits());
        }
    }
    found.insert(ElemSet::full(R.size()).bits());
    for (std::uint64_t b : found) out.ideals.push_back(ElemSet(b));
    out.complete = false;
    return out;
}

} // namespace hyperlab
