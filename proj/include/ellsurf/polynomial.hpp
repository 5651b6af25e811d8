#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over the rationals.
 *
 * Coefficients are stored in ascending degree with no trailing zeros; the
 * empty vector is the zero polynomial.  The variable is nameless -- callers
 * decide whether to print it as t, s, m or xi.
 */

#include "ellsurf/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellsurf {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { // NOLINT: implicit constant lift is intended
        if (c != 0) c_.push_back(c);
    }
    Polynomial(long long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    /// The monomial c * t^k.
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1)) {
        if (c == 0) return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    /// Scalar multiple and scalar quotient (exact).
    Polynomial scaled(const Rational& s) const {
        if (s == 0) return {};
        Polynomial r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r{Rational(1)}, base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(v));
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Coefficient reversal: t^deg * p(1/t).  Constant term of the result is
    /// the leading coefficient of p, so it never vanishes for p != 0.
    Polynomial reversed() const {
        std::vector<Rational> v(c_.rbegin(), c_.rend());
        return Polynomial(std::move(v));
    }

    /// Multiply by t^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(std::move(v));
    }

    /// Exponent of the highest power of t dividing p; p must be nonzero.
    std::size_t trailing_zeros() const {
        if (is_zero()) throw std::domain_error("trailing_zeros of zero polynomial");
        std::size_t k = 0;
        while (c_[k] == 0) ++k;
        return k;
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("monic of zero polynomial");
        return scaled(Rational(1) / leading());
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool first = out.empty();
            const Rational a = rat_abs(c);
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (i == 0 || a != 1) out += rat_str(a);
            if (i > 0) {
                if (a != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo;
    const int db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / lb;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

inline bool divides(const Polynomial& d, const Polynomial& p) {
    return (p % d).is_zero();
}

/// Clears denominators and content: returns integer coefficients of
/// lambda * p for the unique rational lambda > 0 making them coprime
/// integers (ascending degree).
inline std::vector<Int> primitive_integer_coeffs(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("primitive part of zero polynomial");
    Int l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, den(c));
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int x = num(c) * (l / den(c));
        g = gcd(g, x);
        v.push_back(std::move(x));
    }
    for (auto& x : v) x /= g;
    return v;
}

namespace detail {

// Integer-polynomial helpers for the primitive polynomial remainder
// sequence.  Coefficients ascending, no trailing zeros.
inline void trim_int_poly(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void make_primitive(std::vector<Int>& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

/// Repeated top-coefficient elimination: a scalar multiple of a mod b,
/// all inside Z[t].
inline std::vector<Int> pseudo_remainder(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        const Int lead = a.back();
        for (auto& c : a) c *= lb;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        trim_int_poly(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace detail

/// Monic gcd via the primitive polynomial remainder sequence (coefficients
/// cleared to integers and re-primitivized each step, which keeps growth
/// under control where plain rational Euclid explodes).  gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> x = primitive_integer_coeffs(a);
    std::vector<Int> y = primitive_integer_coeffs(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Int> r = detail::pseudo_remainder(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs(x.begin(), x.end());
    return Polynomial(std::move(coeffs)).monic();
}

/// Yun's squarefree decomposition: f = unit * prod f_i^i with the f_i monic,
/// squarefree and pairwise coprime.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    if (f.is_constant()) return out;
    Polynomial p = f.monic();
    Polynomial g = gcd(p, p.derivative());
    Polynomial c = p / g;
    Polynomial d = p.derivative() / g - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        Polynomial a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = c / a;
        d = d / a - c.derivative();
    }
    return out;
}

/// Resultant via the Sylvester matrix and exact Gaussian elimination.
inline Rational resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const int m = f.degree(), n = g.degree();
    if (m == 0) return rat_pow(f.leading(), n);
    if (n == 0) return rat_pow(g.leading(), m);
    const std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(static_cast<std::size_t>(m - k));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(static_cast<std::size_t>(n - k));
    Rational det = 1;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t piv = c;
        while (piv < dim && s[piv][c] == 0) ++piv;
        if (piv == dim) return 0;
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (std::size_t r = c + 1; r < dim; ++r) {
            if (s[r][c] == 0) continue;
            const Rational mult = s[r][c] / s[c][c];
            for (std::size_t k = c; k < dim; ++k) s[r][k] -= mult * s[c][k];
        }
    }
    return det;
}

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
inline Rational poly_discriminant(const Polynomial& f) {
    const int n = f.degree();
    if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
    const Rational r = resultant(f, f.derivative());
    const int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return sign * r / f.leading();
}

} // namespace ellsurf
