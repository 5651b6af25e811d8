#pragma once

/**
 * @file places.hpp
 * @brief Places of the rational function field and valuations.
 *
 * A finite place is a monic squarefree polynomial (kept whole when it has no
 * rational roots); a degree-d place bundles d conjugate geometric points.
 * The point at infinity is its own place of residue degree 1.
 *
 * place_decompose splits rational roots off as linear places and refines the
 * rest by squarefree/gcd splitting only.  Full irreducible factorization is
 * deliberately not attempted: all roots of one residual factor are conjugate
 * under the splitting we do, which is as fine as the fiber classification
 * needs.
 */

#include "ellsurf/intfactor.hpp"
#include "ellsurf/polynomial.hpp"
#include "ellsurf/rational_function.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

class Place {
public:
    static Place infinity() { return Place(true, {}); }
    static Place finite(Polynomial monic_poly) {
        if (monic_poly.degree() < 1) throw std::domain_error("finite place needs a non-constant polynomial");
        if (!monic_poly.is_monic()) monic_poly = monic_poly.monic();
        return Place(false, std::move(monic_poly));
    }
    /// The place t - root.
    static Place linear(const Rational& root) {
        return finite(Polynomial{-root, Rational(1)});
    }

    bool is_infinity() const { return at_infinity_; }
    const Polynomial& polynomial() const {
        if (at_infinity_) throw std::domain_error("the infinite place has no polynomial");
        return poly_;
    }
    int residue_degree() const { return at_infinity_ ? 1 : poly_.degree(); }

    std::string str(const std::string& var = "t") const {
        return at_infinity_ ? "infinity" : poly_.str(var);
    }

    friend bool operator==(const Place& a, const Place& b) {
        return a.at_infinity_ == b.at_infinity_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    /// Canonical order: finite places by degree, then by coefficients from
    /// the constant term up (absolute value first); infinity sorts last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.at_infinity_ != b.at_infinity_) return b.at_infinity_;
        if (a.at_infinity_) return false;
        if (a.poly_.degree() != b.poly_.degree()) return a.poly_.degree() < b.poly_.degree();
        for (int i = 0; i <= a.poly_.degree(); ++i) {
            const Rational x = a.poly_.coeff(static_cast<std::size_t>(i));
            const Rational y = b.poly_.coeff(static_cast<std::size_t>(i));
            if (x == y) continue;
            const Rational ax = rat_abs(x), ay = rat_abs(y);
            if (ax != ay) return ax < ay;
            return x < y;
        }
        return false;
    }

private:
    Place(bool inf, Polynomial p) : at_infinity_(inf), poly_(std::move(p)) {}

    bool at_infinity_;
    Polynomial poly_;
};

struct PlaceFactor {
    Place place;
    int multiplicity;

    friend bool operator==(const PlaceFactor& a, const PlaceFactor& b) {
        return a.place == b.place && a.multiplicity == b.multiplicity;
    }
};

struct PlaceDecomposition {
    std::vector<PlaceFactor> factors; // finite places only, canonically sorted
    Rational unit;                    // leading constant

    Polynomial expand() const {
        Polynomial p{unit};
        for (const auto& f : factors) p *= f.place.polynomial().pow(static_cast<unsigned>(f.multiplicity));
        return p;
    }

    friend bool operator==(const PlaceDecomposition& a, const PlaceDecomposition& b) {
        return a.unit == b.unit && a.factors == b.factors;
    }
};

namespace detail {

/// All rational roots of a nonzero polynomial, via the rational root theorem
/// on its primitive integer form.
inline std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    Polynomial q = p;
    if (q.trailing_zeros() > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> c(q.coeffs().begin() + static_cast<long>(q.trailing_zeros()), q.coeffs().end());
        q = Polynomial(std::move(c));
    }
    if (q.degree() < 1) return roots;
    const std::vector<Int> ic = primitive_integer_coeffs(q);
    const auto ps = divisors(factorize(ic.front()));
    const auto qs = divisors(factorize(ic.back()));
    for (const Int& a : ps)
        for (const Int& b : qs) {
            if (gcd(a, b) != 1) continue;
            const Rational r(a, b);
            if (q.eval(r) == 0) roots.push_back(r);
            if (q.eval(-r) == 0) roots.push_back(-r);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace detail

inline PlaceDecomposition place_decompose(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("place decomposition of the zero polynomial");
    PlaceDecomposition out;
    out.unit = p.leading();
    Polynomial rest = p.monic();
    for (const Rational& r : detail::rational_roots(rest)) {
        const Polynomial lin{-r, Rational(1)};
        int m = 0;
        while (true) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
            ++m;
        }
        out.factors.push_back({Place::linear(r), m});
    }
    for (const auto& [f, m] : squarefree_decomposition(rest)) out.factors.push_back({Place::finite(f), m});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PlaceFactor& a, const PlaceFactor& b) { return a.place < b.place; });
    return out;
}

/// Order of vanishing of a nonzero polynomial at a place.  At infinity this
/// is -deg(p), matching the valuation of p as a rational function.
inline long valuation(const Polynomial& p, const Place& v) {
    if (p.is_zero()) throw std::domain_error("valuation of zero");
    if (v.is_infinity()) return -p.degree();
    long m = 0;
    Polynomial q = p;
    while (true) {
        auto [quot, rem] = divmod(q, v.polynomial());
        if (!rem.is_zero()) return m;
        q = quot;
        ++m;
    }
}

inline long valuation(const RationalFunction& f, const Place& v) {
    if (f.is_zero()) throw std::domain_error("valuation of zero");
    if (v.is_infinity()) return f.den().degree() - f.num().degree();
    return valuation(f.num(), v) - valuation(f.den(), v);
}

} // namespace ellsurf
