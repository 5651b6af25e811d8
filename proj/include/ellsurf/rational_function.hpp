#pragma once

/**
 * @file rational_function.hpp
 * @brief Elements of the field Q(t): reduced fractions of polynomials.
 *
 * Invariants: denominator monic and nonzero, gcd(num, den) = 1.
 */

#include "ellsurf/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ellsurf {

class RationalFunction {
public:
    RationalFunction() : den_{Rational(1)} {}
    RationalFunction(const Rational& c) : num_(c), den_{Rational(1)} {} // NOLINT
    RationalFunction(long long c) : num_(c), den_{Rational(1)} {}       // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_{Rational(1)} {} // NOLINT
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    const Polynomial& as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + str());
        return num_;
    }

    RationalFunction operator-() const { return from_reduced(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + -b;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& r) { return *this = *this + r; }
    RationalFunction& operator-=(const RationalFunction& r) { return *this = *this - r; }
    RationalFunction& operator*=(const RationalFunction& r) { return *this = *this * r; }
    RationalFunction& operator/=(const RationalFunction& r) { return *this = *this / r; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("zero rational function to negative power");
            return RationalFunction(den_, num_).pow(-e);
        }
        return from_reduced(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    Rational eval(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    /// f(1/t), expressed again as a reduced fraction in t.
    RationalFunction substitute_inverse() const {
        if (is_zero()) return {};
        const int dn = num_.degree(), dd = den_.degree();
        Polynomial n = num_.reversed(), d = den_.reversed();
        if (dd >= dn)
            n = n.shifted(static_cast<std::size_t>(dd - dn));
        else
            d = d.shifted(static_cast<std::size_t>(dn - dd));
        return RationalFunction(std::move(n), std::move(d));
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    static RationalFunction from_reduced(Polynomial n, Polynomial d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial{Rational(1)};
            return;
        }
        const Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const Rational lc = den_.leading();
        if (lc != 1) {
            num_ = num_.scaled(1 / lc);
            den_ = den_.scaled(1 / lc);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// Spec-facing constructor name: reduce num/den to canonical form.
inline RationalFunction normalize_rf(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

} // namespace ellsurf
