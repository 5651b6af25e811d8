#pragma once

/**
 * @file kodaira.hpp
 * @brief Kodaira fiber types, classification from valuation data, fiber
 *        configurations and their transformation rules.
 *
 * Classification uses the characteristic-zero valuation table on
 * (v(c4), v(delta)) after local minimalization (rescale while v(c4) >= 4 and
 * v(delta) >= 12).  The II* row also accepts v(delta) = 11: Tate's algorithm
 * terminates at II* there, and no genuine minimal model produces that profile
 * with v(c4) >= 4, so nothing real is misclassified.
 *
 * The wild term delta_v is identically zero in characteristic zero; it is
 * carried so Euler-number reports keep the e(F_v) + delta_v shape.
 */

#include "ellsurf/abelian_group.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/weierstrass.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellsurf {

enum class FiberClass { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

struct KodairaType {
    FiberClass cls = FiberClass::I;
    int n = 0; // index for I_n and I*_n; unused otherwise

    static KodairaType smooth() { return {FiberClass::I, 0}; }
    static KodairaType I(int n) { return {FiberClass::I, n}; }
    static KodairaType Istar(int m) { return {FiberClass::IStar, m}; }
    static KodairaType II() { return {FiberClass::II, 0}; }
    static KodairaType III() { return {FiberClass::III, 0}; }
    static KodairaType IV() { return {FiberClass::IV, 0}; }
    static KodairaType IIstar() { return {FiberClass::IIStar, 0}; }
    static KodairaType IIIstar() { return {FiberClass::IIIStar, 0}; }
    static KodairaType IVstar() { return {FiberClass::IVStar, 0}; }

    bool is_smooth() const { return cls == FiberClass::I && n == 0; }
    bool is_multiplicative() const { return cls == FiberClass::I && n >= 1; }
    bool is_additive() const { return cls != FiberClass::I; }

    /// Number of irreducible components m_v.
    int components() const {
        switch (cls) {
            case FiberClass::I: return n == 0 ? 1 : n;
            case FiberClass::II: return 1;
            case FiberClass::III: return 2;
            case FiberClass::IV: return 3;
            case FiberClass::IStar: return n + 5;
            case FiberClass::IVStar: return 7;
            case FiberClass::IIIStar: return 8;
            case FiberClass::IIStar: return 9;
        }
        throw internal_error("unreachable fiber class");
    }

    /// Local Euler contribution e(F_v): 0 if smooth, m_v if multiplicative,
    /// m_v + 1 if additive.
    int euler() const {
        if (is_smooth()) return 0;
        return is_multiplicative() ? components() : components() + 1;
    }

    int wild_term() const { return 0; } // characteristic zero

    AbelianGroup component_group() const {
        switch (cls) {
            case FiberClass::I: return n <= 1 ? AbelianGroup::trivial() : AbelianGroup::cyclic(n);
            case FiberClass::II:
            case FiberClass::IIStar: return AbelianGroup::trivial();
            case FiberClass::III:
            case FiberClass::IIIStar: return AbelianGroup::cyclic(2);
            case FiberClass::IV:
            case FiberClass::IVStar: return AbelianGroup::cyclic(3);
            case FiberClass::IStar:
                return n % 2 == 1 ? AbelianGroup::cyclic(4) : AbelianGroup{{2, 2}};
        }
        throw internal_error("unreachable fiber class");
    }

    /// Root lattice tag of the non-identity components: ('A'|'D'|'E', rank),
    /// or nullopt for an irreducible fiber.
    std::optional<std::pair<char, int>> root_lattice() const {
        switch (cls) {
            case FiberClass::I: return n >= 2 ? std::make_optional(std::make_pair('A', n - 1)) : std::nullopt;
            case FiberClass::II: return std::nullopt;
            case FiberClass::III: return std::make_pair('A', 1);
            case FiberClass::IV: return std::make_pair('A', 2);
            case FiberClass::IStar: return std::make_pair('D', n + 4);
            case FiberClass::IVStar: return std::make_pair('E', 6);
            case FiberClass::IIIStar: return std::make_pair('E', 7);
            case FiberClass::IIStar: return std::make_pair('E', 8);
        }
        throw internal_error("unreachable fiber class");
    }

    std::string str() const {
        switch (cls) {
            case FiberClass::I: return "I" + std::to_string(n);
            case FiberClass::II: return "II";
            case FiberClass::III: return "III";
            case FiberClass::IV: return "IV";
            case FiberClass::IStar: return "I" + std::to_string(n) + "*";
            case FiberClass::IVStar: return "IV*";
            case FiberClass::IIIStar: return "III*";
            case FiberClass::IIStar: return "II*";
        }
        throw internal_error("unreachable fiber class");
    }

    static KodairaType parse(const std::string& s);

    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.cls == b.cls && a.n == b.n;
    }
    friend bool operator!=(const KodairaType& a, const KodairaType& b) { return !(a == b); }
};

inline KodairaType KodairaType::parse(const std::string& s) {
    const bool star = !s.empty() && s.back() == '*';
    const std::string body = star ? s.substr(0, s.size() - 1) : s;
    if (body == "II") return star ? IIstar() : II();
    if (body == "III") return star ? IIIstar() : III();
    if (body == "IV") return star ? IVstar() : IV();
    if (body.size() > 1 && body[0] == 'I') {
        const int n = std::stoi(body.substr(1));
        if (n < 0) throw std::invalid_argument("bad Kodaira type: " + s);
        return star ? Istar(n) : I(n);
    }
    throw std::invalid_argument("bad Kodaira type: " + s);
}

/// Table lookup on (v(c4), v(delta)); nullopt v(c4) means c4 = 0.
/// Includes the local minimalization loop.
inline KodairaType classify_valuation_profile(std::optional<long> vc4, long vdelta) {
    if (vdelta < 0 || (vc4 && *vc4 < 0)) throw std::domain_error("negative valuation: model not integral at the place");
    while (vdelta >= 12 && (!vc4 || *vc4 >= 4)) {
        vdelta -= 12;
        if (vc4) *vc4 -= 4;
    }
    auto c4_at_least = [&](long k) { return !vc4 || *vc4 >= k; }; // c4 = 0 counts as v = +inf
    if (vdelta == 0) return KodairaType::smooth();
    if (vc4 && *vc4 == 0) return KodairaType::I(static_cast<int>(vdelta));
    if (vdelta == 2) return KodairaType::II();
    if (vdelta == 3 && vc4 && *vc4 == 1) return KodairaType::III();
    if (vdelta == 4 && c4_at_least(2)) return KodairaType::IV();
    if (vdelta == 6 && c4_at_least(2)) return KodairaType::Istar(0);
    if (vc4 && *vc4 == 2 && vdelta >= 7) return KodairaType::Istar(static_cast<int>(vdelta - 6));
    if (vdelta == 8 && c4_at_least(3)) return KodairaType::IVstar();
    if (vdelta == 9 && vc4 && *vc4 == 3) return KodairaType::IIIstar();
    if ((vdelta == 10 || vdelta == 11) && c4_at_least(4)) return KodairaType::IIstar();
    throw internal_error("valuation profile (v(c4), v(delta)) = (" +
                         (vc4 ? std::to_string(*vc4) : std::string("inf")) + ", " +
                         std::to_string(vdelta) + ") is outside the Kodaira table");
}

/// Classify the fiber of an integral model at a place (the infinite place is
/// handled through the infinity chart).
inline KodairaType classify_fiber(const WeierstrassModel& m, const Place& v) {
    if (!m.is_integral()) throw std::domain_error("fiber classification needs an integral model");
    if (v.is_infinity()) {
        if (m.chart != Chart::AffineT) throw std::domain_error("infinite place only exists on the affine chart");
        return classify_fiber(infinity_chart(m), Place::finite(Polynomial::variable()));
    }
    const ModelInvariants inv = compute_invariants(m);
    const Polynomial delta = inv.delta.as_polynomial();
    const Polynomial c4 = inv.c4.as_polynomial();
    std::optional<long> vc4;
    if (!c4.is_zero()) vc4 = valuation(c4, v);
    return classify_valuation_profile(vc4, valuation(delta, v));
}

struct FiberEntry {
    Place place;
    KodairaType type;

    int residue_degree() const { return place.residue_degree(); }
};

struct FiberConfiguration {
    std::vector<FiberEntry> entries; // singular fibers only, canonical place order
    int chi = 1;                     // e(S)/12

    /// Singular fiber types repeated with residue-degree multiplicity.
    std::vector<KodairaType> geometric_fibers() const {
        std::vector<KodairaType> out;
        for (const auto& e : entries)
            for (int i = 0; i < e.residue_degree(); ++i) out.push_back(e.type);
        return out;
    }

    /// Component counts [n_1, n_2, ...] for an all-multiplicative
    /// configuration, descending.
    std::vector<int> component_tuple() const {
        std::vector<int> v;
        for (const auto& t : geometric_fibers()) {
            if (!t.is_multiplicative()) throw std::domain_error("component tuple needs multiplicative fibers");
            v.push_back(t.n);
        }
        std::sort(v.rbegin(), v.rend());
        return v;
    }

    bool all_multiplicative() const {
        for (const auto& e : entries)
            if (!e.type.is_multiplicative()) return false;
        return true;
    }
};

/// Sum of e(F_v) + delta_v over geometric fibers.
inline int euler_number(const FiberConfiguration& c) {
    int e = 0;
    for (const auto& t : c.geometric_fibers()) e += t.euler() + t.wild_term();
    return e;
}

/// A synthetic all-multiplicative configuration [n_1, ..., n_k] at the
/// places t, t-1, t-2, ...  Used by the torsion solver and lattice tests.
inline FiberConfiguration multiplicative_configuration(const std::vector<int>& components) {
    FiberConfiguration cfg;
    long k = 0;
    for (int n : components) {
        if (n < 1) throw std::domain_error("component count must be >= 1");
        cfg.entries.push_back({Place::linear(Rational(k++)), KodairaType::I(n)});
    }
    return cfg;
}

/// Classify every place of the discriminant plus infinity.  The Euler sum
/// must land on a multiple of 12, which fixes chi.
inline FiberConfiguration fiber_configuration(const WeierstrassModel& m) {
    if (!m.is_integral()) throw std::domain_error("fiber configuration needs an integral model");
    if (m.chart != Chart::AffineT) throw std::domain_error("fiber configuration expects the affine chart");
    const ModelInvariants inv = compute_invariants(m);
    FiberConfiguration cfg;
    for (const auto& f : place_decompose(inv.delta.as_polynomial()).factors) {
        const KodairaType t = classify_fiber(m, f.place);
        if (!t.is_smooth()) cfg.entries.push_back({f.place, t});
    }
    const KodairaType at_inf = classify_fiber(m, Place::infinity());
    if (!at_inf.is_smooth()) cfg.entries.push_back({Place::infinity(), at_inf});
    const int e = euler_number(cfg);
    if (e % 12 != 0) throw internal_error("Euler number " + std::to_string(e) + " is not a multiple of 12");
    cfg.chi = e / 12;
    return cfg;
}

/// Base change of a multiplicative or smooth fiber along a point of
/// ramification index d.  Additive inputs are out of scope.
inline KodairaType base_change_fiber(const KodairaType& f, int d) {
    if (d < 1) throw std::domain_error("ramification index must be >= 1");
    if (f.is_additive())
        throw std::domain_error("base change of additive fibers is not supported (Tate table case)");
    return KodairaType::I(f.n * d);
}

/// Fiber of the quotient by a torsion translation of prime order m acting on
/// an I_n fiber: I_{mn} when the section meets the zero component, I_{n/m}
/// otherwise (which forces m | n).
inline KodairaType quotient_fiber_by_translation(const KodairaType& f, int m, bool meets_zero) {
    if (!f.is_multiplicative() && !f.is_smooth())
        throw std::domain_error("quotient rule applies to multiplicative fibers");
    if (m < 2) throw std::domain_error("translation order must be >= 2");
    if (meets_zero) return KodairaType::I(f.n * m);
    if (f.n % m != 0) throw std::domain_error("section off the zero component forces m | n");
    return KodairaType::I(f.n / m);
}

/// Quadratic twist at the place: the star/co-star involution on fiber types.
inline KodairaType quadratic_twist_fiber(const KodairaType& f) {
    switch (f.cls) {
        case FiberClass::I: return KodairaType::Istar(f.n);
        case FiberClass::IStar: return KodairaType::I(f.n);
        case FiberClass::II: return KodairaType::IVstar();
        case FiberClass::IVStar: return KodairaType::II();
        case FiberClass::III: return KodairaType::IIIstar();
        case FiberClass::IIIStar: return KodairaType::III();
        case FiberClass::IV: return KodairaType::IIstar();
        case FiberClass::IIStar: return KodairaType::IV();
    }
    throw internal_error("unreachable fiber class");
}

/// Singular fiber count and fiber genus of the Beauville-style semistable
/// fibration built from a degree-n cover with Card(R) simple ramification
/// points of a genus-gC curve: (Card(R) + 2, n - 1 + 2 gC).
inline std::pair<int, int> semistable_counts(int n, int gC, int cardR) {
    if (n < 2) throw std::domain_error("cover degree must be >= 2");
    if (gC < 0 || cardR < 0) throw std::domain_error("genus and ramification count must be >= 0");
    return {cardR + 2, n - 1 + 2 * gC};
}

} // namespace ellsurf
