#ifndef HYPERLAB_HYPERSTRUCTURE_HPP
#define HYPERLAB_HYPERSTRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlab/errors.hpp"

namespace hyperlab {

using Element = int;

/// Subset of a carrier of at most 64 elements, as a bitmask.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

    static ElemSet single(Element e) { return ElemSet(std::uint64_t{1} << e); }
    static ElemSet full(int size) {
        return ElemSet(size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    bool contains(Element e) const { return (bits_ >> e) & 1; }
    void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
    void remove(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
    bool subset_of(const ElemSet& o) const { return (bits_ & ~o.bits_) == 0; }

    ElemSet& operator|=(const ElemSet& o) { bits_ |= o.bits_; return *this; }
    friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
    friend bool operator==(const ElemSet& a, const ElemSet& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const ElemSet& a, const ElemSet& b) { return a.bits_ < b.bits_; }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(__builtin_ctzll(b));
        return out;
    }

    std::string str() const;

private:
    std::uint64_t bits_ = 0;
};

/// Dense m-ary hyperoperation table: every m-tuple maps to a nonempty subset.
class HyperOpTable {
public:
    HyperOpTable() = default;
    HyperOpTable(int arity, int size, std::vector<ElemSet> entries);

    int arity() const { return arity_; }
    int size() const { return size_; }
    std::uint64_t rank(std::span<const Element> args) const;
    ElemSet at(std::span<const Element> args) const { return entries_[rank(args)]; }
    ElemSet at_rank(std::uint64_t r) const { return entries_[r]; }
    std::uint64_t entry_count() const { return entries_.size(); }
    void set_entry(std::uint64_t r, ElemSet value);

private:
    int arity_ = 0;
    int size_ = 0;
    std::vector<ElemSet> entries_;
};

/// Dense n-ary single-valued operation table.
class NaryOpTable {
public:
    NaryOpTable() = default;
    NaryOpTable(int arity, int size, std::vector<Element> entries);

    int arity() const { return arity_; }
    int size() const { return size_; }
    std::uint64_t rank(std::span<const Element> args) const;
    Element at(std::span<const Element> args) const { return entries_[rank(args)]; }
    Element at_rank(std::uint64_t r) const { return entries_[r]; }
    std::uint64_t entry_count() const { return entries_.size(); }
    void set_entry(std::uint64_t r, Element value);

private:
    int arity_ = 0;
    int size_ = 0;
    std::vector<Element> entries_;
};

struct AxiomCheck {
    bool ok = true;
    std::vector<Element> witness; // offending tuple, empty when ok
    std::string note;

    void fail(std::vector<Element> w, std::string n) {
        ok = false;
        witness = std::move(w);
        note = std::move(n);
    }
};

struct AxiomReport {
    AxiomCheck commutativity;
    AxiomCheck f_associativity;
    AxiomCheck scalar_neutral;
    AxiomCheck unique_inverses;
    AxiomCheck reversibility;
    AxiomCheck g_associativity;
    AxiomCheck distributivity;
    AxiomCheck absorbing_zero;

    bool all_ok() const {
        return commutativity.ok && f_associativity.ok && scalar_neutral.ok &&
               unique_inverses.ok && reversibility.ok && g_associativity.ok &&
               distributivity.ok && absorbing_zero.ok;
    }

    std::vector<std::pair<std::string, const AxiomCheck*>> items() const;
};

struct ValidateOptions {
    // Canonical hypergroups are commutative in the standard reading; the flag
    // exists so the commutativity check can be relaxed for exploratory runs.
    bool require_commutative = true;
    std::uint64_t max_atomic = 1'000'000'000ULL;
};

/// Finite Krasner (m,n)-hyperring: carrier {0,...,size-1}, m-ary
/// hyperoperation f, n-ary operation g, designated absorbing zero which must
/// coincide with the scalar neutral of f.
///
/// Immutable after construction; validate() may be called once to run the
/// axiom checks and (on success) record the neutral element and the inverse
/// map. Classifiers require a validated structure.
class KrasnerHyperring {
public:
    KrasnerHyperring(HyperOpTable f, NaryOpTable g, Element zero);

    int m() const { return f_.arity(); }
    int n() const { return g_.arity(); }
    int size() const { return f_.size(); }
    Element zero() const { return zero_; }
    const HyperOpTable& f() const { return f_; }
    const NaryOpTable& g() const { return g_; }

    /// Runs all eight axiom checks exhaustively. Reversibility reads the
    /// canonical condition as: a in f(a_1..a_m) implies each a_i lies in f of
    /// (a, inverses of the other arguments).
    AxiomReport validate(const ValidateOptions& opts = {});

    bool validated() const { return validated_; }
    Element neutral() const;
    Element inverse(Element a) const;

private:
    HyperOpTable f_;
    NaryOpTable g_;
    Element zero_ = 0;
    bool validated_ = false;
    Element neutral_ = -1;
    std::vector<Element> inverses_;
};

/// Union of f over the Cartesian product of m nonempty argument sets.
ElemSet f_ext(const KrasnerHyperring& R, std::span<const ElemSet> sets);

/// The derived t-ary hyperoperation obtained by nesting f l times;
/// args must have length l*(m-1)+1.
ElemSet f_iter(const KrasnerHyperring& R, int l, std::span<const Element> args);

struct HyperidealWitness {
    enum class Kind { Neutral, Inverse, FClosure, Solvability, GAbsorption };
    Kind kind;
    std::vector<Element> tuple;
    Element offending = -1; // element escaping the subset, when applicable
    std::string describe() const;
};

struct HyperidealReport {
    bool ok = true;
    std::optional<HyperidealWitness> witness;
};

/// Decides whether S is a hyperideal: an m-ary subhypergroup of (R,f)
/// (closure, inverses, neutral, in-subset solvability) absorbing under g in
/// every slot against arbitrary outside arguments.
HyperidealReport is_hyperideal(const KrasnerHyperring& R, const ElemSet& S);

struct EnumerateOptions {
    int exhaustive_cap = 16;
    bool allow_closure = true;
};

struct IdealEnumeration {
    std::vector<ElemSet> ideals; // ascending by bitmask
    bool complete = true;
};

/// All hyperideals by brute force over subsets (carrier size within the cap),
/// or by closure generation from singleton seeds above it (flagged incomplete).
IdealEnumeration enumerate_hyperideals(const KrasnerHyperring& R,
                                       const EnumerateOptions& opts = {});

} // namespace hyperlab

#endif
