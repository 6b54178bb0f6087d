#ifndef HYPERLAB_RATIONAL_HPP
#define HYPERLAB_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "hyperlab/errors.hpp"

namespace hyperlab {

/// Exact rational number on int64 with checked arithmetic.
///
/// Always kept reduced with a positive denominator. Intermediate products are
/// computed in 128-bit and must fit back into int64 after reduction; grid
/// endpoints and their sums/differences/quotients stay tiny in practice, so a
/// checked overflow is a bug in the caller, not a rounding concern.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }
    Rational(int num) : num_(num), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num) : num_(num), den_(1) {} // NOLINT

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static Rational parse(const std::string& text);
    std::string str() const;

    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ +
                           static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ -
                           static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("Rational division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_,
                       static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

private:
    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("Rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static Rational from128(__int128 num, __int128 den) {
        if (den == 0) throw Error("Rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr __int128 lim = INT64_MAX;
        if (num > lim || num < -lim || den > lim) throw OverflowError("Rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw ParseError("trailing characters in rational: " + text);
            return Rational(n, 1);
        }
        std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw ParseError("bad numerator in rational: " + text);
        std::string dtext = text.substr(slash + 1);
        std::int64_t d = std::stoll(dtext, &used);
        if (used != dtext.size()) throw ParseError("bad denominator in rational: " + text);
        if (d <= 0) throw ParseError("denominator must be positive: " + text);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: " + text);
    }
}

inline std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace hyperlab

#endif
