#ifndef HYPERLAB_IMPLICATION_HPP
#define HYPERLAB_IMPLICATION_HPP

#include "hyperlab/classifiers.hpp"

namespace hyperlab {

/// The seven multi-valued implication operators, identified by their usual
/// short names.
enum class ImplicationOperator {
    EarlyZadeh,        // Im(a,b) = max{1-a, min{a,b}}
    Lukasiewicz,       // Ia(a,b) = min{1, 1-a+b}
    Godel,             // Ig(a,b) = 1 if a<=b else b
    ContrapositionGodel, // Icg(a,b) = 1 if a<=b else 1-a
    GainesRescher,     // Igr(a,b) = 1 if a<=b else 0
    KleeneDienes,      // Ib(a,b) = max{1-a, b}
    Goguen,            // Igg(a,b) = 1 if a<=b else b/a
};

const char* implication_name(ImplicationOperator op);
ImplicationOperator parse_implication(const std::string& name);

/// Exact evaluation of the scalar operator on [0,1] arguments.
Rational imp_scalar(ImplicationOperator op, const Rational& a, const Rational& b);

/// Box image of the operator over two interval truth values. Every listed
/// operator is antitone in its first and monotone in its second argument, so
/// the image of the box is [I(x.hi, y.lo), I(x.lo, y.hi)].
IntervalValue imp_interval(ImplicationOperator op, const IntervalValue& x, const IntervalValue& y);

/// Fuzzifying hyperideal: the three implication conditions hold as full
/// tautologies under the Lukasiewicz operator. Coincides with is_ordinary;
/// asserted by tests rather than assumed.
ClassReport is_fuzzifying(const KrasnerHyperring& R, const IVFuzzySet& A);

/// t-implication-based hyperideal: each condition's implication, evaluated
/// endpointwise on (premise, consequence), reaches the truth degree t in both
/// components.
ClassReport is_t_implication_based(const KrasnerHyperring& R, const IVFuzzySet& A,
                                   ImplicationOperator op, const IntervalValue& t);

} // namespace hyperlab

#endif
