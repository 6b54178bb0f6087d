#include "hyperlab/implication.hpp"

namespace hyperlab {

namespace {

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

const char* implication_name(ImplicationOperator op) {
    switch (op) {
        case ImplicationOperator::EarlyZadeh: return "Im";
        case ImplicationOperator::Lukasiewicz: return "Ia";
        case ImplicationOperator::Godel: return "Ig";
        case ImplicationOperator::ContrapositionGodel: return "Icg";
        case ImplicationOperator::GainesRescher: return "Igr";
        case ImplicationOperator::KleeneDienes: return "Ib";
        case ImplicationOperator::Goguen: return "Igg";
    }
    return "?";
}

ImplicationOperator parse_implication(const std::string& name) {
    if (name == "Im") return ImplicationOperator::EarlyZadeh;
    if (name == "Ia") return ImplicationOperator::Lukasiewicz;
    if (name == "Ig") return ImplicationOperator::Godel;
    if (name == "Icg") return ImplicationOperator::ContrapositionGodel;
    if (name == "Igr") return ImplicationOperator::GainesRescher;
    if (name == "Ib") return ImplicationOperator::KleeneDienes;
    if (name == "Igg") return ImplicationOperator::Goguen;
    throw ParseError("unknown implication operator: " + name);
}

Rational imp_scalar(ImplicationOperator op, const Rational& a, const Rational& b) {
    const Rational one(1);
    switch (op) {
        case ImplicationOperator::EarlyZadeh: {
            Rational inner = a < b ? a : b;
            Rational neg = one - a;
            return neg < inner ? inner : neg;
        }
        case ImplicationOperator::Lukasiewicz: {
            Rational v = one - a + b;
            return v < one ? v : one;
        }
        case ImplicationOperator::Godel:
            return a <= b ? one : b;
        case ImplicationOperator::ContrapositionGodel:
            return a <= b ? one : one - a;
        case ImplicationOperator::GainesRescher:
            return a <= b ? one : Rational(0);
        case ImplicationOperator::KleeneDienes: {
            Rational neg = one - a;
            return neg < b ? b : neg;
        }
        case ImplicationOperator::Goguen:
            return a <= b ? one : b / a;
    }
    return Rational(0);
}

IntervalValue imp_interval(ImplicationOperator op, const IntervalValue& x, const IntervalValue& y) {
    return IntervalValue::make(imp_scalar(op, x.hi(), y.lo()), imp_scalar(op, x.lo(), y.hi()));
}

namespace {

/// Endpointwise t-tautology: I(x.lo, y.lo) >= t.lo and I(x.hi, y.hi) >= t.hi.
/// This is the reading under which the half-point operator equivalences with
/// the threshold forms are exact.
bool holds_at(ImplicationOperator op, const IntervalValue& x, const IntervalValue& y,
              const IntervalValue& t) {
    return imp_scalar(op, x.lo(), y.lo()) >= t.lo() && imp_scalar(op, x.hi(), y.hi()) >= t.hi();
}

ClassReport imp_conditions(const KrasnerHyperring& R, const IVFuzzySet& A, ImplicationOperator op,
                           const IntervalValue& t) {
    if (!R.validated()) throw NotValidated("structure not validated");
    if (A.size() != R.size()) throw CarrierMismatch("fuzzy set carrier mismatch");
    const int m = R.m();
    const int n = R.n();
    ClassReport rep;
    std::vector<IntervalValue> vals;

    for_each_tuple(m, R.size(), [&](std::span<const Element> tu) {
        vals.clear();
        for (Element e : tu) vals.push_back(A.at(e));
        IntervalValue premise = rmin(std::span<const IntervalValue>(vals));
        vals.clear();
        for (Element a : R.f().at(tu).elements()) vals.push_back(A.at(a));
        IntervalValue concl = rinf(std::span<const IntervalValue>(vals));
        if (!holds_at(op, premise, concl, t)) {
            rep.ok = false;
            rep.kind = ConditionKind::Sum;
            rep.condition = "(1)";
            rep.witness = {{tu.begin(), tu.end()},
                           std::nullopt,
                           premise,
                           std::nullopt,
                           std::string(implication_name(op)) + "(" + premise.str() + " -> " +
                               concl.str() + ") below " + t.str()};
            return false;
        }
        return true;
    });
    if (!rep.ok) return rep;

    for (Element b = 0; b < R.size(); ++b) {
        if (!holds_at(op, A.at(b), A.at(R.inverse(b)), t)) {
            rep.ok = false;
            rep.kind = ConditionKind::Negation;
            rep.condition = "(2)";
            rep.witness = {{b},
                           R.inverse(b),
                           A.at(b),
                           std::nullopt,
                           std::string(implication_name(op)) + " on the negative below " + t.str()};
            return rep;
        }
    }

    for_each_tuple(n, R.size(), [&](std::span<const Element> tu) {
        vals.clear();
        for (Element e : tu) vals.push_back(A.at(e));
        IntervalValue premise = rmax(std::span<const IntervalValue>(vals));
        Element gv = R.g().at(tu);
        if (!holds_at(op, premise, A.at(gv), t)) {
            rep.ok = false;
            rep.kind = ConditionKind::Product;
            rep.condition = "(3)";
            rep.witness = {{tu.begin(), tu.end()},
                           gv,
                           premise,
                           std::nullopt,
                           std::string(implication_name(op)) + "(" + premise.str() + " -> mu(g" +
                               tuple_str(tu) + ")) below " + t.str()};
            return false;
        }
        return true;
    });
    return rep;
}

} // namespace

ClassReport is_fuzzifying(const KrasnerHyperring& R, const IVFuzzySet& A) {
    return imp_conditions(R, A, ImplicationOperator::Lukasiewicz, IntervalValue::top());
}

ClassReport is_t_implication_based(const KrasnerHyperring& R, const IVFuzzySet& A,
                                   ImplicationOperator op, const IntervalValue& t) {
    if (t.is_bottom()) throw MalformedThresholds("truth degree t must be nonzero");
    return imp_conditions(R, A, op, t);
}

} // namespace hyperlab
