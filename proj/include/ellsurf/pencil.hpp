#pragma once

/**
 * @file pencil.hpp
 * @brief The six semistable pencils of cubics, rational base points, and the
 *        conversion of a plane cubic with a rational point to a Weierstrass
 *        model over Q(t).
 *
 * Conversion route: move the base point to (0,0,1) by a unimodular change,
 * project from it (lines of slope m through the point), which exhibits the
 * cubic as the double cover w^2 = D(m) of a quartic, and take the Jacobian
 * of that quartic via its classical invariants I, J:
 *     y^2 = x^3 - 27 I x - 27 J.
 * A rational point exists on the cubic, so the curve is isomorphic to its
 * Jacobian and the fibration is recovered on the nose, not up to twist; the
 * fiber-configuration tests double-check that.
 */

#include "ellsurf/abelian_group.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/lattice.hpp"
#include "ellsurf/mordell_weil.hpp"
#include "ellsurf/polynomial.hpp"
#include "ellsurf/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace ellsurf {

/// Monomial exponents of a ternary cubic, fixed order.
inline constexpr std::array<std::array<int, 3>, 10> kCubicMonomials{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

namespace detail {

/// Tiny trivariate polynomial over Q for building pencil equations.
struct TriPoly {
    std::map<std::array<int, 3>, Rational> terms;

    static TriPoly var(int i) {
        TriPoly p;
        std::array<int, 3> e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        p.terms[e] = 1;
        return p;
    }
    static TriPoly constant(const Rational& c) {
        TriPoly p;
        if (c != 0) p.terms[{0, 0, 0}] = c;
        return p;
    }
    friend TriPoly operator+(const TriPoly& a, const TriPoly& b) {
        TriPoly r = a;
        for (const auto& [e, c] : b.terms) {
            auto& slot = r.terms[e];
            slot += c;
            if (slot == 0) r.terms.erase(e);
        }
        return r;
    }
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b) {
        TriPoly nb = b;
        for (auto& [e, c] : nb.terms) c = -c;
        return a + nb;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                const std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                auto& slot = r.terms[e];
                slot += ca * cb;
                if (slot == 0) r.terms.erase(e);
            }
        return r;
    }

    /// Coefficients in the fixed cubic monomial order (must be homogeneous
    /// of degree 3).
    std::array<Rational, 10> cubic_coefficients() const {
        std::array<Rational, 10> out{};
        for (const auto& [e, c] : terms) {
            bool placed = false;
            for (std::size_t i = 0; i < kCubicMonomials.size(); ++i)
                if (kCubicMonomials[i] == e) {
                    out[i] = c;
                    placed = true;
                }
            if (!placed) throw internal_error("pencil equation is not a homogeneous cubic");
        }
        return out;
    }
};

} // namespace detail

/// Homogeneous cubic with coefficients in Q[t].
struct TernaryCubic {
    std::array<Polynomial, 10> c;

    Polynomial coefficient(int i, int j, int k) const {
        for (std::size_t n = 0; n < kCubicMonomials.size(); ++n)
            if (kCubicMonomials[n] == std::array<int, 3>{i, j, k}) return c[n];
        throw std::domain_error("not a cubic monomial");
    }

    Polynomial eval(const std::array<long, 3>& p) const {
        Polynomial out;
        for (std::size_t n = 0; n < kCubicMonomials.size(); ++n) {
            if (c[n].is_zero()) continue;
            Rational scale = 1;
            for (int v = 0; v < 3; ++v)
                for (int rep = 0; rep < kCubicMonomials[n][static_cast<std::size_t>(v)]; ++rep)
                    scale *= p[static_cast<std::size_t>(v)];
            out += c[n] * scale;
        }
        return out;
    }

    std::array<Polynomial, 3> gradient_at(const std::array<long, 3>& p) const {
        std::array<Polynomial, 3> g;
        for (std::size_t n = 0; n < kCubicMonomials.size(); ++n) {
            if (c[n].is_zero()) continue;
            for (int v = 0; v < 3; ++v) {
                const int e = kCubicMonomials[n][static_cast<std::size_t>(v)];
                if (e == 0) continue;
                Rational scale = e;
                for (int u = 0; u < 3; ++u) {
                    const int f = kCubicMonomials[n][static_cast<std::size_t>(u)] - (u == v ? 1 : 0);
                    for (int rep = 0; rep < f; ++rep) scale *= p[static_cast<std::size_t>(u)];
                }
                g[static_cast<std::size_t>(v)] += c[n] * scale;
            }
        }
        return g;
    }

    /// Substitute (X, Y, Z) = M * (X', Y', Z') for an integer matrix M.
    TernaryCubic linear_change(const IntMatrix& m) const {
        using Terms = std::map<std::array<int, 3>, Polynomial>;
        auto mul = [](const Terms& a, const Terms& b) {
            Terms r;
            for (const auto& [ea, ca] : a)
                for (const auto& [eb, cb] : b) {
                    const std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                    r[e] += ca * cb;
                }
            return r;
        };
        std::array<Terms, 3> lin; // images of X, Y, Z
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 3; ++w) {
                if (m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 0) continue;
                std::array<int, 3> e{0, 0, 0};
                e[static_cast<std::size_t>(w)] = 1;
                lin[static_cast<std::size_t>(v)][e] =
                    Polynomial(Rational(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]));
            }
        Terms total;
        for (std::size_t n = 0; n < kCubicMonomials.size(); ++n) {
            if (c[n].is_zero()) continue;
            Terms acc;
            acc[{0, 0, 0}] = c[n];
            for (int v = 0; v < 3; ++v)
                for (int rep = 0; rep < kCubicMonomials[n][static_cast<std::size_t>(v)]; ++rep)
                    acc = mul(acc, lin[static_cast<std::size_t>(v)]);
            for (const auto& [e, coeff] : acc) total[e] += coeff;
        }
        TernaryCubic out;
        for (const auto& [e, coeff] : total) {
            if (coeff.is_zero()) continue;
            bool placed = false;
            for (std::size_t n = 0; n < kCubicMonomials.size(); ++n)
                if (kCubicMonomials[n] == e) {
                    out.c[n] = coeff;
                    placed = true;
                }
            if (!placed) throw internal_error("linear change left the cubic monomial basis");
        }
        return out;
    }
};

struct PencilEntry {
    std::string label;
    std::string pencil_display;
    std::array<Rational, 10> f; // member cubic is F + t G
    std::array<Rational, 10> g;
    std::array<int, 4> expected_components;
    AbelianGroup expected_group;

    TernaryCubic cubic() const {
        TernaryCubic out;
        for (std::size_t n = 0; n < out.c.size(); ++n)
            out.c[n] = Polynomial{f[n], g[n]}; // f + g t
        return out;
    }
};

/// The six pencils with exactly four singular fibers, in table order.
inline const std::vector<PencilEntry>& catalog() {
    using detail::TriPoly;
    static const std::vector<PencilEntry> entries = [] {
        const TriPoly X = TriPoly::var(0), Y = TriPoly::var(1), Z = TriPoly::var(2);
        const TriPoly two = TriPoly::constant(2);
        std::vector<PencilEntry> out;
        auto add = [&](std::string label, std::string display, const TriPoly& F, const TriPoly& G,
                       std::array<int, 4> comps, AbelianGroup group) {
            PencilEntry e;
            e.label = std::move(label);
            e.pencil_display = std::move(display);
            e.f = F.cubic_coefficients();
            e.g = G.cubic_coefficients();
            e.expected_components = comps;
            e.expected_group = std::move(group);
            out.push_back(std::move(e));
        };
        add("Gamma(3)", "X^3 + Y^3 + Z^3 + t XYZ", X * X * X + Y * Y * Y + Z * Z * Z, X * Y * Z,
            {3, 3, 3, 3}, AbelianGroup{{3, 3}});
        add("Gamma0^0(4)&Gamma(2)", "X(X^2 + Z^2 + 2ZY) + t Z(X^2 - Y^2)",
            X * (X * X + Z * Z + two * Z * Y), Z * (X * X - Y * Y), {4, 4, 2, 2},
            AbelianGroup{{4, 2}});
        add("Gamma0^0(5)", "X(X - Z)(Y - Z) + t ZY(X - Y)", X * (X - Z) * (Y - Z),
            Z * Y * (X - Y), {5, 5, 1, 1}, AbelianGroup{{5}});
        add("Gamma0^0(6)", "(X + Y)(Y + Z)(Z + X) + t XYZ", (X + Y) * (Y + Z) * (Z + X), X * Y * Z,
            {6, 3, 2, 1}, AbelianGroup{{6}});
        add("Gamma0(8)", "(X + Y)(XY - Z^2) + t XYZ", (X + Y) * (X * Y - Z * Z), X * Y * Z,
            {8, 2, 1, 1}, AbelianGroup{{4}});
        add("Gamma0(9)&Gamma0^0(3)", "X^2 Y + Y^2 Z + Z^2 X + t XYZ",
            X * X * Y + Y * Y * Z + Z * Z * X, X * Y * Z, {9, 1, 1, 1}, AbelianGroup{{3}});
        return out;
    }();
    return entries;
}

inline const PencilEntry& catalog_entry(const std::string& label) {
    for (const auto& e : catalog())
        if (e.label == label) return e;
    throw input_error("unknown catalog entry: " + label);
}

inline int base_point_search_bound() {
    if (const char* env = std::getenv("ELLSURF_SEARCH_BOUND")) {
        const int b = std::atoi(env);
        if (b >= 1) return b;
    }
    return 8;
}

/// Smallest-height rational base point of the pencil that is smooth on the
/// generic member.  Deterministic order: height, then more zero coordinates
/// first, then lexicographic.
inline std::array<long, 3> find_base_point(const PencilEntry& e, int bound = base_point_search_bound()) {
    const TernaryCubic F = [&] {
        TernaryCubic c;
        for (std::size_t n = 0; n < c.c.size(); ++n) c.c[n] = Polynomial(e.f[n]);
        return c;
    }();
    const TernaryCubic G = [&] {
        TernaryCubic c;
        for (std::size_t n = 0; n < c.c.size(); ++n) c.c[n] = Polynomial(e.g[n]);
        return c;
    }();
    for (int h = 1; h <= bound; ++h) {
        std::vector<std::array<long, 3>> ring;
        for (long x = -h; x <= h; ++x)
            for (long y = -h; y <= h; ++y)
                for (long z = -h; z <= h; ++z) {
                    if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != h) continue;
                    const long first = x != 0 ? x : (y != 0 ? y : z);
                    if (first <= 0) continue; // canonical sign, skips (0,0,0)
                    if (std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z)) != 1) continue;
                    ring.push_back({x, y, z});
                }
        std::stable_sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) {
            const int za = static_cast<int>(a[0] == 0) + (a[1] == 0) + (a[2] == 0);
            const int zb = static_cast<int>(b[0] == 0) + (b[1] == 0) + (b[2] == 0);
            if (za != zb) return za > zb;
            return a < b;
        });
        for (const auto& p : ring) {
            if (!F.eval(p).is_zero() || !G.eval(p).is_zero()) continue;
            const auto gf = F.gradient_at(p);
            const auto gg = G.gradient_at(p);
            bool smooth = false;
            for (int v = 0; v < 3; ++v)
                smooth = smooth || !gf[static_cast<std::size_t>(v)].is_zero() ||
                         !gg[static_cast<std::size_t>(v)].is_zero();
            if (smooth) return p;
        }
    }
    throw input_error("no smooth rational base point of height <= " + std::to_string(bound) +
                      " for pencil " + e.label);
}

namespace detail {

struct ExtGcd {
    long long g, x, y;
};
inline ExtGcd ext_gcd(long long a, long long b) {
    if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
    const ExtGcd r = ext_gcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

/// Unimodular integer matrix whose third column is the primitive vector p.
inline IntMatrix unimodular_completion(const std::array<long, 3>& p) {
    // Row-reduce p to a unit vector, tracking the operations in U, then invert.
    IntMatrix u = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i) u[i][i] = 1;
    std::array<long long, 3> v{p[0], p[1], p[2]};
    auto apply22 = [&](std::size_t i, std::size_t j, long long a, long long b, long long c, long long d) {
        for (std::size_t k = 0; k < 3; ++k) {
            const Int ri = a * u[i][k] + b * u[j][k];
            const Int rj = c * u[i][k] + d * u[j][k];
            u[i][k] = ri;
            u[j][k] = rj;
        }
        const long long vi = a * v[i] + b * v[j];
        const long long vj = c * v[i] + d * v[j];
        v[i] = vi;
        v[j] = vj;
    };
    while (true) {
        int nonzero = 0;
        std::size_t first = 3, second = 3;
        for (std::size_t i = 0; i < 3; ++i)
            if (v[i] != 0) {
                ++nonzero;
                if (first == 3)
                    first = i;
                else if (second == 3)
                    second = i;
            }
        if (nonzero <= 1) break;
        const ExtGcd eg = ext_gcd(v[first], v[second]);
        apply22(first, second, eg.x, eg.y, -v[second] / eg.g, v[first] / eg.g);
    }
    std::size_t k = 0;
    while (v[k] == 0) ++k;
    if (v[k] < 0) {
        for (std::size_t c = 0; c < 3; ++c) u[k][c] = -u[k][c];
        v[k] = -v[k];
    }
    if (v[k] != 1) throw internal_error("base point is not primitive");
    if (k != 2) std::swap(u[k], u[2]);
    // m = u^{-1} via the adjugate; det(u) = +-1.
    const Int det = determinant(u);
    IntMatrix m = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            const std::size_t c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            m[i][j] = (u[r1][c1] * u[r2][c2] - u[r1][c2] * u[r2][c1]) / det;
        }
    return m;
}

} // namespace detail

/// Weierstrass model of the pencil's generic member, via projection from the
/// base point and the quartic Jacobian invariants.
inline WeierstrassModel pencil_to_weierstrass(const PencilEntry& e, const std::array<long, 3>& p) {
    const IntMatrix m = detail::unimodular_completion(p);
    const TernaryCubic moved = e.cubic().linear_change(m);
    if (!moved.coefficient(0, 0, 3).is_zero())
        throw internal_error("base point is not on the pencil after the coordinate change");
    const Polynomial a = moved.coefficient(1, 0, 2);
    const Polynomial b = moved.coefficient(0, 1, 2);
    if (a.is_zero() && b.is_zero())
        throw input_error("base point is singular on the generic member");
    // polynomials in the slope m (ascending), coefficients in Q[t]
    const std::array<Polynomial, 2> f1{a, b};
    const std::array<Polynomial, 3> f2{moved.coefficient(2, 0, 1), moved.coefficient(1, 1, 1),
                                       moved.coefficient(0, 2, 1)};
    const std::array<Polynomial, 4> f3{moved.coefficient(3, 0, 0), moved.coefficient(2, 1, 0),
                                       moved.coefficient(1, 2, 0), moved.coefficient(0, 3, 0)};
    std::array<Polynomial, 5> d; // discriminant quartic D = f2^2 - 4 f1 f3
    for (std::size_t i = 0; i < f2.size(); ++i)
        for (std::size_t j = 0; j < f2.size(); ++j) d[i + j] += f2[i] * f2[j];
    for (std::size_t i = 0; i < f1.size(); ++i)
        for (std::size_t j = 0; j < f3.size(); ++j) d[i + j] -= 4 * (f1[i] * f3[j]);
    const Polynomial &qa = d[4], &qb = d[3], &qc = d[2], &qd = d[1], &qe = d[0];
    const Polynomial I = 12 * (qa * qe) - 3 * (qb * qd) + qc * qc;
    const Polynomial J = 72 * (qa * qc * qe) - 27 * (qa * qd * qd) - 27 * (qb * qb * qe) +
                         9 * (qb * qc * qd) - 2 * qc.pow(3);
    WeierstrassModel model = short_model(-27 * I, -27 * J);
    compute_invariants(model); // rejects degenerate pencils early
    return model;
}

struct CatalogVerification {
    std::string label;
    std::array<long, 3> base_point{};
    WeierstrassModel model;
    FiberConfiguration configuration;
    std::vector<int> component_tuple;
    bool components_match = false;
    int euler = 0;
    bool euler_ok = false;
    Int trivial_disc = 0;
    bool extremal = false;
    TorsionAssignment torsion;
    bool group_matches = false;
    bool heights_verified = false;
    bool van_geemen_sarti = false;
    AbelianGroup narrow;
    AbelianGroup quotient;
};

/// End-to-end verification of one catalog row against its stated component
/// counts and Mordell-Weil group.
inline CatalogVerification verify_catalog_entry(const PencilEntry& e) {
    CatalogVerification v;
    v.label = e.label;
    v.base_point = find_base_point(e);
    v.model = pencil_to_weierstrass(e, v.base_point);
    v.configuration = fiber_configuration(v.model);
    v.component_tuple = v.configuration.component_tuple();
    std::vector<int> expected(e.expected_components.begin(), e.expected_components.end());
    std::sort(expected.rbegin(), expected.rend());
    v.components_match = v.component_tuple == expected;
    v.euler = euler_number(v.configuration);
    v.euler_ok = v.euler == 12;
    v.trivial_disc = trivial_lattice(v.configuration).disc;
    v.torsion = solve_torsion(v.configuration);
    v.group_matches = v.torsion.group.isomorphic_to(e.expected_group);
    v.heights_verified = verify_assignment_heights(v.configuration, v.torsion);
    v.extremal = extremality_check(v.configuration, v.torsion.group.order());
    for (long d : v.torsion.group.invariant_factors()) v.van_geemen_sarti |= d % 2 == 0;
    auto [narrow, quotient] = narrow_and_quotient(v.torsion);
    v.narrow = narrow;
    v.quotient = quotient;
    return v;
}

struct NamedModel {
    std::string label;
    WeierstrassModel model;
};

/// The explicitly named auxiliary models: S, S', the j-line pair, and the
/// two special curves with extra automorphisms.
inline std::vector<NamedModel> paper_named_models() {
    std::vector<NamedModel> out;
    const Polynomial t = Polynomial::variable();
    out.push_back({"S: y^2 + xy + ty = x^3", model_from_polynomials(1, {}, t, {}, {})});
    out.push_back({"S': y^2 + ty = x^3", model_from_polynomials({}, {}, t, {}, {})});
    const JLineFamily fam = j_line_family();
    out.push_back({"j-line generic", fam.generic});
    out.push_back({"j-line integral", fam.integral});
    out.push_back({"j=0: y^2 + y = x^3", model_from_polynomials({}, {}, 1, {}, {})});
    out.push_back({"j=1728: y^2 = x^3 + x", model_from_polynomials({}, {}, {}, 1, {})});
    return out;
}

/// For a model y^2 + a1 xy + a3 y = x^3 + a2 x^2 with P = (0,0):
/// P is 3-torsion iff a2 = 0 (duplication gives x(2P) = -a2).
inline bool three_torsion_criterion(const WeierstrassModel& m) {
    if (!m.a4.is_zero() || !m.a6.is_zero())
        throw std::domain_error("three-torsion criterion needs a4 = a6 = 0");
    if (m.a3.is_zero()) throw std::domain_error("a3 = 0 makes (0,0) singular");
    return m.a2.is_zero();
}

} // namespace ellsurf
