#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over Q, just large enough to verify
 *        cover maps and coordinate-change identities symbolically.
 *
 * Fractions are formal num/den pairs without gcd reduction; every identity we
 * check ends in "numerator reduces to zero", so reduction is never needed.
 */

#include "ellsurf/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(const Rational& c, int nvars) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }
    static MultiPoly var(int i, int nvars) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return from_term(std::move(e), 1);
    }
    static MultiPoly from_term(Exponents e, const Rational& c) {
        MultiPoly p(static_cast<int>(e.size()));
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            auto& slot = r.terms_[e];
            slot += c;
            if (slot == 0) r.terms_.erase(e);
        }
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + -b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                auto& slot = r.terms_[e];
                slot += ca * cb;
                if (slot == 0) r.terms_.erase(e);
            }
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
        return MultiPoly::constant(s, p.nvars_) * p;
    }
    MultiPoly& operator+=(const MultiPoly& p) { return *this = *this + p; }
    MultiPoly& operator-=(const MultiPoly& p) { return *this = *this - p; }
    MultiPoly& operator*=(const MultiPoly& p) { return *this = *this * p; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(1, nvars_), base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
        return d;
    }

    /// Replace every occurrence of var^2 (for the given variable) by rhs.
    /// Used to reduce modulo a hyperelliptic relation y^2 = S.
    MultiPoly reduce_square(int v, const MultiPoly& rhs) const {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            const int k = e[static_cast<std::size_t>(v)];
            MultiPoly term(nvars_);
            Exponents base = e;
            base[static_cast<std::size_t>(v)] = k % 2;
            term.terms_[base] = c;
            out += term * rhs.pow(static_cast<unsigned>(k / 2));
        }
        return out;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rat_str(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) {
                    out += "*" + names[i];
                    if (e[i] > 1) out += "^" + std::to_string(e[i]);
                }
        }
        return out;
    }

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Formal fraction of multivariate polynomials.
struct MPFraction {
    MultiPoly num;
    MultiPoly den;

    explicit MPFraction(int nvars = 0)
        : num(MultiPoly::constant(0, nvars)), den(MultiPoly::constant(1, nvars)) {}
    MPFraction(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
    }
    static MPFraction of(const MultiPoly& p) { return {p, MultiPoly::constant(1, p.nvars())}; }

    friend MPFraction operator+(const MPFraction& a, const MPFraction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend MPFraction operator-(const MPFraction& a, const MPFraction& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend MPFraction operator*(const MPFraction& a, const MPFraction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    MPFraction pow(unsigned e) const { return {num.pow(e), den.pow(e)}; }
};

/// Evaluate a univariate-style polynomial (coefficients over MultiPoly
/// constants) at a fraction: sum coeff_k * x^k.
inline MPFraction eval_poly_at(const std::vector<MultiPoly>& coeffs, const MPFraction& x) {
    const int nv = x.num.nvars();
    MPFraction acc(nv);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + MPFraction::of(*it);
    return acc;
}

/// Coefficients of p viewed as a polynomial in variable v (ascending degree,
/// with v's exponent cleared).
inline std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, int v) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(p.degree_in(v)) + 1, MultiPoly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents base = e;
        const int k = base[static_cast<std::size_t>(v)];
        base[static_cast<std::size_t>(v)] = 0;
        out[static_cast<std::size_t>(k)] += MultiPoly::from_term(std::move(base), c);
    }
    return out;
}

} // namespace ellsurf
