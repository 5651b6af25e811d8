#pragma once

/**
 * @file weierstrass.hpp
 * @brief Long Weierstrass models over Q(t), their invariants and transforms.
 *
 * Coefficients are rational functions so that the generic j-line curve (which
 * has poles at j = 1728) and transforms by non-polynomial u fit in one type;
 * fiber classification works on integral models, where every a_i is a
 * polynomial.
 *
 * Transform convention: transform_model(m, u, r, s, w) multiplies the
 * discriminant by u^12 (the "integral scaling" direction a_i -> u^i a_i when
 * r = s = w = 0), so u-scaling by a polynomial clears denominators.
 */

#include "ellsurf/errors.hpp"
#include "ellsurf/places.hpp"
#include "ellsurf/polynomial.hpp"
#include "ellsurf/rational_function.hpp"

#include <stdexcept>
#include <string>

namespace ellsurf {

enum class Chart { AffineT, InfinityS };

inline std::string chart_name(Chart c) { return c == Chart::AffineT ? "affine-t" : "infinity-s"; }
inline std::string chart_var(Chart c) { return c == Chart::AffineT ? "t" : "s"; }

struct WeierstrassModel {
    RationalFunction a1, a2, a3, a4, a6;
    Chart chart = Chart::AffineT;

    bool is_integral() const {
        return a1.is_polynomial() && a2.is_polynomial() && a3.is_polynomial() &&
               a4.is_polynomial() && a6.is_polynomial();
    }

    friend bool operator==(const WeierstrassModel& x, const WeierstrassModel& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 && x.a4 == y.a4 && x.a6 == y.a6 &&
               x.chart == y.chart;
    }

    std::string str() const {
        const std::string v = chart_var(chart);
        auto term = [&](const RationalFunction& a, const std::string& mon) {
            if (a.is_zero()) return std::string();
            return " + (" + a.str(v) + ")*" + mon;
        };
        return "y^2" + term(a1, "xy") + term(a3, "y") + " = x^3" + term(a2, "x^2") + term(a4, "x") +
               (a6.is_zero() ? "" : " + (" + a6.str(v) + ")");
    }
};

inline WeierstrassModel model_from_polynomials(Polynomial a1, Polynomial a2, Polynomial a3,
                                               Polynomial a4, Polynomial a6,
                                               Chart chart = Chart::AffineT) {
    return {RationalFunction(std::move(a1)), RationalFunction(std::move(a2)),
            RationalFunction(std::move(a3)), RationalFunction(std::move(a4)),
            RationalFunction(std::move(a6)), chart};
}

/// y^2 = x^3 + A x + B.
inline WeierstrassModel short_model(Polynomial a4, Polynomial a6, Chart chart = Chart::AffineT) {
    return model_from_polynomials({}, {}, {}, std::move(a4), std::move(a6), chart);
}

struct ModelInvariants {
    RationalFunction b2, b4, b6, b8, c4, c6, delta;
    RationalFunction j;
};

inline ModelInvariants compute_invariants(const WeierstrassModel& m) {
    ModelInvariants inv;
    const auto &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
    inv.b2 = a1 * a1 + 4 * a2;
    inv.b4 = 2 * a4 + a1 * a3;
    inv.b6 = a3 * a3 + 4 * a6;
    inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
    inv.c6 = -inv.b2.pow(3) + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
    inv.delta = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4.pow(3) - 27 * inv.b6 * inv.b6 +
                9 * inv.b2 * inv.b4 * inv.b6;
    if (inv.delta.is_zero()) throw input_error("not an elliptic surface: discriminant vanishes identically");
    if (4 * inv.b8 != inv.b2 * inv.b6 - inv.b4 * inv.b4)
        throw internal_error("b-invariant identity 4*b8 = b2*b6 - b4^2 failed");
    if (1728 * inv.delta != inv.c4.pow(3) - inv.c6 * inv.c6)
        throw internal_error("c-invariant identity 1728*delta = c4^3 - c6^2 failed");
    inv.j = inv.c4.pow(3) / inv.delta;
    return inv;
}

/// Change of coordinates scaling the discriminant by u^12 and fixing j.
/// With r = s = w = 0 this is a_i -> u^i a_i.
inline WeierstrassModel transform_model(const WeierstrassModel& m, const RationalFunction& u,
                                        const RationalFunction& r = {}, const RationalFunction& s = {},
                                        const RationalFunction& w = {}) {
    if (u.is_zero()) throw std::domain_error("transform with u = 0");
    WeierstrassModel out;
    out.chart = m.chart;
    out.a1 = u * (m.a1 + 2 * s);
    out.a2 = u.pow(2) * (m.a2 - s * m.a1 + 3 * r - s * s);
    out.a3 = u.pow(3) * (m.a3 + r * m.a1 + 2 * w);
    out.a4 = u.pow(4) * (m.a4 - s * m.a3 + 2 * r * m.a2 - (w + r * s) * m.a1 + 3 * r * r - 2 * s * w);
    out.a6 = u.pow(6) * (m.a6 + r * m.a4 + r * r * m.a2 + r.pow(3) - w * m.a3 - w * w - r * w * m.a1);
    return out;
}

/// Substitute t -> 1/s and u-scale by the least power of s that makes every
/// coefficient a polynomial again.  Requires an integral affine-chart model.
inline WeierstrassModel infinity_chart(const WeierstrassModel& m) {
    if (m.chart != Chart::AffineT) throw std::domain_error("infinity_chart expects an affine-t model");
    if (!m.is_integral()) throw std::domain_error("infinity_chart expects an integral model");
    WeierstrassModel flipped{m.a1.substitute_inverse(), m.a2.substitute_inverse(),
                             m.a3.substitute_inverse(), m.a4.substitute_inverse(),
                             m.a6.substitute_inverse(), Chart::InfinityS};
    long k = 0;
    const std::pair<const RationalFunction*, long> weighted[] = {
        {&flipped.a1, 1}, {&flipped.a2, 2}, {&flipped.a3, 3}, {&flipped.a4, 4}, {&flipped.a6, 6}};
    for (const auto& [a, wt] : weighted) {
        if (a->is_zero()) continue;
        const long e = a->den().degree(); // denominator is a power of s here
        k = std::max(k, (e + wt - 1) / wt);
    }
    if (k == 0) return flipped;
    return transform_model(flipped, RationalFunction(Polynomial::monomial(static_cast<std::size_t>(k))));
}

/// Short form y^2 = x^3 + A x + B with A = -c4/48, B = -c6/864; j is
/// unchanged and delta is preserved exactly.
inline WeierstrassModel to_short_form(const WeierstrassModel& m) {
    const ModelInvariants inv = compute_invariants(m);
    WeierstrassModel out;
    out.chart = m.chart;
    out.a4 = -inv.c4 / 48;
    out.a6 = -inv.c6 / 864;
    return out;
}

struct JLineFamily {
    WeierstrassModel generic;  // Eq-(7)-style curve with j = t, poles at t = 1728
    WeierstrassModel integral; // its u = (t - 1728) scaling
};

/// The family with j-invariant exactly t.
inline JLineFamily j_line_family() {
    const Polynomial shift{Rational(-1728), Rational(1)}; // t - 1728
    JLineFamily fam;
    fam.generic.a1 = Rational(1);
    fam.generic.a4 = RationalFunction(Polynomial(Rational(-36)), shift);
    fam.generic.a6 = RationalFunction(Polynomial(Rational(-1)), shift);
    fam.integral = transform_model(fam.generic, RationalFunction(shift));
    if (!fam.integral.is_integral()) throw internal_error("j-line scaling failed to clear denominators");
    return fam;
}

} // namespace ellsurf
