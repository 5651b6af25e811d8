#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * Everything downstream is exact: no floating point appears anywhere in the
 * library.  Rationals are kept canonical (gcd-reduced, positive denominator,
 * zero = 0/1) by the underlying multiprecision type.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ellsurf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long n, long long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(n, d);
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e with integer exponent; negative exponents require q != 0.
inline Rational rat_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        return 1 / rat_pow(q, -e);
    }
    Rational r = 1, base = q;
    for (; e != 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

inline std::string rat_str(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Parses "n" or "n/d" with optional sign, arbitrary precision.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("rational with zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace ellsurf
