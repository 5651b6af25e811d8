#pragma once

/**
 * @file bielliptic.hpp
 * @brief Genus-2 curves with degree-2 elliptic subcovers: Jacobi splitting,
 *        Legendre-pair reconstruction, the fibered product, the (t, t')
 *        cover normal form, and Weierstrass-point parity.
 *
 * Every identity is checked inside exact rational arithmetic.  The square
 * root appearing in the coordinate-change scale is never extracted: it enters
 * all verified identities only through its square.
 *
 * Genus 2 is certified by a nonzero sextic discriminant (six distinct roots).
 *
 * Symbolic checks run over indeterminates in a fixed four-variable frame:
 * 0 = x (or xi), 1 = y, 2 = t1 (or t), 3 = t2 (or t').
 */

#include "ellsurf/errors.hpp"
#include "ellsurf/multipoly.hpp"
#include "ellsurf/polynomial.hpp"
#include "ellsurf/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

inline constexpr int kCoverVars = 4;
inline constexpr int VX = 0, VY = 1, VT1 = 2, VT2 = 3;

namespace detail {

inline MultiPoly mp_const(const Rational& c) { return MultiPoly::constant(c, kCoverVars); }
inline MultiPoly mp_var(int v) { return MultiPoly::var(v, kCoverVars); }

inline MultiPoly mp_from_poly(const Polynomial& p, int v) {
    MultiPoly out(kCoverVars);
    const MultiPoly x = mp_var(v);
    for (int k = p.degree(); k >= 0; --k) out = out * x + mp_const(p.coeff(static_cast<std::size_t>(k)));
    return out;
}

} // namespace detail

/// The curve y^2 = c0 x^6 + c1 x^4 + c2 x^2 + c3.
struct JacobiSextic {
    Rational c0, c1, c2, c3;

    Polynomial as_polynomial() const {
        return Polynomial{c3, Rational(0), c2, Rational(0), c1, Rational(0), c0};
    }
    /// The cubic resolvent in u = x^2.
    Polynomial resolvent() const { return Polynomial{c3, c2, c1, c0}; }

    Rational discriminant() const { return poly_discriminant(as_polynomial()); }

    void validate() const {
        if (c0 == 0) throw std::domain_error("Jacobi sextic needs c0 != 0");
        if (discriminant() == 0) throw std::domain_error("sextic has repeated roots: not genus 2");
    }

    std::string str() const { return "y^2 = " + as_polynomial().str("x"); }
};

/// y^2 = a x^3 + b x^2 + c x + d.
struct CubicModel {
    Rational a, b, c, d;

    Polynomial rhs() const { return Polynomial{d, c, b, a}; }
    std::string str(const std::string& var = "x") const { return "y^2 = " + rhs().str(var); }

    friend bool operator==(const CubicModel& p, const CubicModel& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
};

/// A double-cover map between hyperelliptic equations y^2 = rhs.
struct CoverMap {
    std::string label;
    MultiPoly source_rhs{kCoverVars}; // in VX (and parameters)
    MultiPoly target_rhs{kCoverVars};
    MPFraction image_x{kCoverVars};
    MPFraction image_y{kCoverVars};
};

/// Substitute the coordinate images into the target equation and reduce
/// modulo the source relation; the map is a cover iff the result vanishes.
inline bool verify_cover(const CoverMap& m) {
    const MPFraction lhs = m.image_y * m.image_y;
    const MPFraction rhs = eval_poly_at(coeffs_in_var(m.target_rhs, VX), m.image_x);
    const MPFraction diff = lhs - rhs;
    const MultiPoly reduced = diff.num.reduce_square(VY, m.source_rhs);
    return reduced.is_zero();
}

struct JacobiSplit {
    CubicModel e1, e2;
    CoverMap pi1, pi2;
};

/// The two elliptic subcovers of a Jacobi sextic: E1 keeps the coefficients,
/// E2 reverses them; pi1 = (x^2, y), pi2 = (1/x^2, y/x^3).
inline JacobiSplit split_jacobi(const JacobiSextic& s) {
    if (s.c3 == 0) throw std::domain_error("c3 = 0: the second subcover degenerates");
    s.validate();
    JacobiSplit out;
    out.e1 = {s.c0, s.c1, s.c2, s.c3};
    out.e2 = {s.c3, s.c2, s.c1, s.c0};
    const MultiPoly S = detail::mp_from_poly(s.as_polynomial(), VX);
    const MultiPoly x = detail::mp_var(VX), y = detail::mp_var(VY);
    const MultiPoly one = detail::mp_const(1);
    out.pi1 = {"pi1", S, detail::mp_from_poly(out.e1.rhs(), VX), MPFraction(x * x, one), MPFraction(y, one)};
    out.pi2 = {"pi2", S, detail::mp_from_poly(out.e2.rhs(), VX), MPFraction(one, x * x), MPFraction(y, x * x * x)};
    return out;
}

/// One-off symbolic confirmation of the splitting maps with indeterminate
/// coefficients (six-variable frame: x, y, c0..c3).
inline bool symbolic_jacobi_split_verifies() {
    const int nv = 6;
    auto var = [&](int i) { return MultiPoly::var(i, nv); };
    const MultiPoly x = var(0), y = var(1);
    const MultiPoly one = MultiPoly::constant(1, nv);
    std::array<MultiPoly, 4> c{var(2), var(3), var(4), var(5)};
    const MultiPoly x2 = x * x;
    const MultiPoly S = c[0] * x2.pow(3) + c[1] * x2.pow(2) + c[2] * x2 + c[3];
    auto cubic = [&](const std::array<MultiPoly, 4>& k, const MPFraction& u) {
        return MPFraction::of(k[0]) * u.pow(3) + MPFraction::of(k[1]) * u.pow(2) +
               MPFraction::of(k[2]) * u + MPFraction::of(k[3]);
    };
    // pi1
    MPFraction d1 = MPFraction(y, one) * MPFraction(y, one) - cubic(c, MPFraction(x2, one));
    if (!d1.num.reduce_square(1, S).is_zero()) return false;
    // pi2
    const std::array<MultiPoly, 4> cr{c[3], c[2], c[1], c[0]};
    MPFraction d2 =
        MPFraction(y, x * x2) * MPFraction(y, x * x2) - cubic(cr, MPFraction(one, x2));
    return d2.num.reduce_square(1, S).is_zero();
}

struct LegendrePair {
    Rational t1, t2;

    void validate() const {
        if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1)
            throw std::domain_error("Legendre parameters must avoid 0 and 1");
        if (t1 == t2) throw std::domain_error("Legendre parameters must be distinct");
    }
};

struct LegendreCurve {
    JacobiSextic sextic;                  // in the xi coordinate
    std::array<Rational, 3> xi_squares;   // r1 = t2/t1, r2 = (1-t2)/(1-t1), r3 = 1
};

/// The genus-2 curve eta^2 = (xi^2 - t2/t1)(xi^2 - (1-t2)/(1-t1))(xi^2 - 1).
inline LegendreCurve curve_from_legendre_pair(const LegendrePair& p) {
    p.validate();
    const Rational r1 = p.t2 / p.t1;
    const Rational r2 = (1 - p.t2) / (1 - p.t1);
    const Rational r3 = 1;
    LegendreCurve out;
    out.xi_squares = {r1, r2, r3};
    out.sextic = {Rational(1), -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3)};
    out.sextic.validate(); // distinct nonzero roots <=> pair invariants
    return out;
}

struct SubcoverData {
    CubicModel e1_tilde; // y~^2 = (x~ - r1)(x~ - r2)(x~ - 1)
    CubicModel e2_tilde; // y~^2 = (1 - r1 x~)(1 - r2 x~)(1 - x~)
    std::array<Rational, 2> scale_squared; // common value (t2 - t1)^3 / (t1 (1 - t1))
    std::array<std::string, 2> change_display;
};

namespace detail {

/// The squared scale (t2 - t1)^3 / (t1 (1 - t1)) that makes the tilde
/// substitution an identity for both subcovers.  (Checking the i = 2 case by
/// hand shows the per-index formula with t_i(1 - t_i) in the denominator
/// works only for i = 1; the identity forces this common value.)
inline MPFraction tilde_scale_squared(const MultiPoly& t1, const MultiPoly& t2, const MultiPoly& one) {
    return {(t2 - t1).pow(3), t1 * (one - t1)};
}

/// Verifies the coordinate-change identity of the Legendre-to-tilde
/// substitution for subcover i (1 or 2): with the scale kept as a square,
/// S(x) K / (x - t_i)^4 equals the tilde cubic at x~_i = (x - t_j)/(x - t_i).
/// It is a rational identity.  Numeric pairs substitute constants; nullopt
/// runs over indeterminate (t1, t2).
inline bool legendre_change_identity(int which, const std::optional<LegendrePair>& numeric) {
    const MultiPoly x = mp_var(VX), one = mp_const(1);
    MultiPoly t1 = mp_var(VT1), t2 = mp_var(VT2);
    if (numeric) {
        numeric->validate();
        t1 = mp_const(numeric->t1);
        t2 = mp_const(numeric->t2);
    }
    const MultiPoly& ti = which == 1 ? t1 : t2;
    const MultiPoly& tj = which == 1 ? t2 : t1;
    // source: y^2 = x (x - 1)(x - t_i)
    const MultiPoly S = x * (x - one) * (x - ti);
    const MPFraction K = tilde_scale_squared(t1, t2, one);
    const MPFraction xt{x - tj, x - ti};
    const MPFraction r1{t2, t1};
    const MPFraction r2{one - t2, one - t1};
    MPFraction target(kCoverVars);
    if (which == 1) {
        target = (xt - r1) * (xt - r2) * (xt - MPFraction::of(one));
    } else {
        const MPFraction onef = MPFraction::of(one);
        target = (onef - r1 * xt) * (onef - r2 * xt) * (onef - xt);
    }
    const MPFraction lhs = MPFraction::of(S) * K * MPFraction{one, (x - ti).pow(4)};
    return (lhs - target).num.is_zero();
}

} // namespace detail

/// The tilde equations of both subcovers plus the displayed coordinate
/// changes; the substitution identity is re-verified for the given pair.
inline SubcoverData subcover_equations(const LegendrePair& p) {
    p.validate();
    const Rational r1 = p.t2 / p.t1, r2 = (1 - p.t2) / (1 - p.t1);
    SubcoverData out;
    // (x - r1)(x - r2)(x - 1)
    out.e1_tilde = {Rational(1), -(r1 + r2 + 1), r1 * r2 + r1 + r2, -(r1 * r2)};
    // (1 - r1 x)(1 - r2 x)(1 - x)
    out.e2_tilde = {-(r1 * r2), r1 * r2 + r1 + r2, -(r1 + r2 + 1), Rational(1)};
    const Rational k = rat_pow(p.t2 - p.t1, 3) / (p.t1 * (1 - p.t1));
    out.scale_squared = {k, k};
    out.change_display = {"x~1 = (x1 - t2)/(x1 - t1), y~1 = y1/(x1 - t1)^2 * sqrt(K1)",
                          "x~2 = (x2 - t1)/(x2 - t2), y~2 = y2/(x2 - t2)^2 * sqrt(K2)"};
    for (int i : {1, 2})
        if (!detail::legendre_change_identity(i, p))
            throw internal_error("coordinate-change identity failed for subcover " + std::to_string(i));
    return out;
}

/// The Proposition-level identity with indeterminate (t1, t2).
inline bool subcover_identity_symbolic() {
    return detail::legendre_change_identity(1, std::nullopt) &&
           detail::legendre_change_identity(2, std::nullopt);
}

struct FiberedProduct {
    CubicModel legs[2];                  // y_i^2 = x (x - 1)(x - t_i)
    std::vector<Rational> finite_nodes;  // {0, 1}
    bool node_at_infinity = true;
    std::array<std::vector<Rational>, 2> finite_branch_loci; // {0, 1, t_i}
    bool branch_at_infinity = true;
};

/// The nodal curve E1 x_P1 E2 with nodes over the common branch points.
inline FiberedProduct fibered_product(const LegendrePair& p) {
    p.validate();
    FiberedProduct out;
    for (int i = 0; i < 2; ++i) {
        const Rational t = i == 0 ? p.t1 : p.t2;
        out.legs[i] = {Rational(1), -(1 + t), t, Rational(0)};
        out.finite_branch_loci[static_cast<std::size_t>(i)] = {Rational(0), Rational(1), t};
    }
    out.finite_nodes = {Rational(0), Rational(1)};
    return out;
}

struct NewSettingCover {
    JacobiSextic curve;        // y^2 = (t' - xi^2)(t' - 1 - xi^2)(t' - t - xi^2)
    CoverMap f;                // (xi, y) -> (t' - xi^2, y) onto y^2 = x(x-1)(x-t)
    Rational y0_squared;       // t'(t' - 1)(t' - t), kept as a square
    Rational branch_x;         // t'
    Rational ramification_xi;  // 0
    bool unramified_at_infinity = true;
    std::array<Rational, 3> xi_square_values;    // t', t'-1, t'-t
    std::array<Rational, 4> eprime_branch;       // 0, 1, t, t' (quartic model roots)
    std::vector<Rational> eprime_ramification;   // 1/t', 1/(t'-1), 1/(t'-t); plus infinity
    Polynomial eprime_quartic;                   // x(x-1)(x-t)(x-t')
};

/// The fixed normal form for a bielliptic curve with subcover data (t, t').
inline NewSettingCover newsetting_cover(const Rational& t, const Rational& tp) {
    LegendrePair{t, tp}.validate();
    NewSettingCover out;
    const Rational s1 = tp + (tp - 1) + (tp - t);
    const Rational s2 = tp * (tp - 1) + tp * (tp - t) + (tp - 1) * (tp - t);
    const Rational s3 = tp * (tp - 1) * (tp - t);
    out.curve = {Rational(-1), s1, -s2, s3};
    out.curve.validate();
    out.xi_square_values = {tp, tp - 1, tp - t};
    out.y0_squared = s3;
    out.branch_x = tp;
    out.ramification_xi = 0;
    out.eprime_branch = {Rational(0), Rational(1), t, tp};
    out.eprime_ramification = {1 / tp, 1 / (tp - 1), 1 / (tp - t)};
    out.eprime_quartic =
        Polynomial{Rational(0), Rational(1)} * Polynomial{Rational(-1), Rational(1)} *
        Polynomial{-t, Rational(1)} * Polynomial{-tp, Rational(1)};
    const MultiPoly x = detail::mp_var(VX), y = detail::mp_var(VY), one = detail::mp_const(1);
    const Polynomial target{Rational(0), t, -(1 + t), Rational(1)}; // x(x-1)(x-t)
    out.f.label = "f";
    out.f.source_rhs = detail::mp_from_poly(out.curve.as_polynomial(), VX);
    out.f.target_rhs = detail::mp_from_poly(target, VX);
    out.f.image_x = MPFraction(detail::mp_const(tp) - x * x, one);
    out.f.image_y = MPFraction(y, one);
    if (!verify_cover(out.f)) throw internal_error("newsetting cover map failed verification");
    return out;
}

struct WeierstrassParityRule {
    int degree = 2;
    int parity = 0; // residue of |phi^{-1}(Q) cap W| mod 2, each Q in E[2]
    std::vector<std::array<int, 4>> admissible_partitions; // count multisets, sum 6
};

/// Parity of Weierstrass-point counts over the four 2-torsion points for a
/// degree-n subcover: odd n forces odd counts, even n even counts; the four
/// counts always sum to 6.
inline WeierstrassParityRule weierstrass_parity(int n) {
    if (n < 2) throw std::domain_error("cover degree must be >= 2");
    WeierstrassParityRule rule;
    rule.degree = n;
    rule.parity = n % 2;
    for (int a = 6; a >= rule.parity; --a)
        for (int b = a; b >= rule.parity; --b) {
            if (b > a) continue;
            for (int c = b; c >= rule.parity; --c)
                for (int d = c; d >= rule.parity; --d) {
                    if (a + b + c + d != 6) continue;
                    if ((a - rule.parity) % 2 || (b - rule.parity) % 2 || (c - rule.parity) % 2 ||
                        (d - rule.parity) % 2)
                        continue;
                    std::array<int, 4> part{a, b, c, d};
                    bool seen = false;
                    for (const auto& q : rule.admissible_partitions) seen = seen || q == part;
                    if (!seen) rule.admissible_partitions.push_back(part);
                }
        }
    return rule;
}

/// Counts of Weierstrass points of C over the 2-torsion x-coordinates
/// {0, 1, t, infinity} of E for a degree-2 newsetting cover.
inline std::array<int, 4> weierstrass_image_counts(const NewSettingCover& cover, const Rational& t) {
    std::array<int, 4> counts{0, 0, 0, 0};
    const std::array<Rational, 3> e2x{Rational(0), Rational(1), t};
    for (const Rational& r : cover.xi_square_values) {
        const Rational image = cover.branch_x - r;
        bool matched = false;
        for (std::size_t k = 0; k < e2x.size(); ++k)
            if (image == e2x[k]) {
                counts[k] += 2; // +sqrt(r) and -sqrt(r)
                matched = true;
            }
        if (!matched) throw internal_error("Weierstrass point maps outside E[2]");
    }
    return counts;
}

} // namespace ellsurf
