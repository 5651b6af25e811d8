#pragma once

/**
 * @file report.hpp
 * @brief The full analysis pipeline behind the CLI: surface reports, the
 *        audited reference tables, and the bielliptic report.
 *
 * The "reference" columns carry the published values this tool audits.  Rows
 * where the computation disagrees are marked, never silently corrected.
 */

#include "ellsurf/json_io.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ellsurf {

struct MordellWeilSection {
    int rank = 0;                       // Shioda-Tate rank at the given rho
    AbelianGroup injection_target;      // prod G(F_v) over reducible fibers
    bool solved = false;                // torsion solver ran (extremal semistable case)
    std::optional<TorsionAssignment> assignment;
    std::optional<AbelianGroup> narrow;
    std::optional<AbelianGroup> quotient;
    bool heights_verified = false;
};

struct SurfaceReport {
    WeierstrassModel model;
    PlaceDecomposition delta_factored;
    RationalFunction j;
    FiberConfiguration configuration;
    int euler = 0;
    int trivial_rank = 2;
    Int trivial_disc = -1;
    int rho = 10;
    MordellWeilSection mw;
    bool extremal = false;
    bool van_geemen_sarti = false;
};

/// Full pipeline on an integral affine-chart model.
inline SurfaceReport analyze(const WeierstrassModel& model, int rho = 10) {
    if (!model.is_integral()) throw input_error("analysis needs an integral model (polynomial coefficients)");
    SurfaceReport rep;
    rep.model = model;
    const ModelInvariants inv = compute_invariants(model);
    rep.delta_factored = place_decompose(inv.delta.as_polynomial());
    rep.j = inv.j;
    rep.configuration = fiber_configuration(model);
    rep.euler = euler_number(rep.configuration);
    const TrivialLatticeReport tl = trivial_lattice(rep.configuration);
    rep.trivial_rank = tl.rank;
    rep.trivial_disc = tl.disc;
    rep.rho = rho;
    rep.mw.rank = shioda_tate_rank(rho, rep.configuration);
    rep.mw.injection_target = torsion_injection_target(rep.configuration);
    const bool semistable = rep.configuration.all_multiplicative();
    if (semistable && rep.mw.rank == 0 && rep.configuration.chi == 1) {
        rep.mw.solved = true;
        rep.mw.assignment = solve_torsion(rep.configuration);
        rep.mw.heights_verified = verify_assignment_heights(rep.configuration, *rep.mw.assignment);
        if (!rep.mw.heights_verified) throw internal_error("solver emitted an assignment with nonzero heights");
        auto [narrow, quotient] = narrow_and_quotient(*rep.mw.assignment);
        rep.mw.narrow = narrow;
        rep.mw.quotient = quotient;
        rep.extremal = extremality_check(rep.configuration, rep.mw.assignment->group.order());
        for (long d : rep.mw.assignment->group.invariant_factors())
            rep.van_geemen_sarti |= d % 2 == 0;
    }
    // re-assert the cross-checks the report promises
    if (rep.euler != 12 * rep.configuration.chi) throw internal_error("Euler sum disagrees with chi");
    if (rep.extremal) {
        const Int order(rep.mw.assignment->group.order());
        if (rep.trivial_disc != -order * order)
            throw internal_error("extremal surface violates disc(T) = -(#E(K))^2");
    }
    return rep;
}

inline Json to_json(const SurfaceReport& r) {
    Json mw{{"rank", r.mw.rank},
            {"torsion_injects_into", to_json(r.mw.injection_target)},
            {"solved", r.mw.solved}};
    if (r.mw.solved) {
        mw["group"] = to_json(r.mw.assignment->group);
        mw["assignment_data"] = to_json(*r.mw.assignment);
        mw["heights_verified"] = r.mw.heights_verified;
        mw["narrow"] = to_json(*r.mw.narrow);
        mw["quotient"] = to_json(*r.mw.quotient);
    }
    return Json{{"model", to_json(r.model)},
                {"delta", to_json(r.delta_factored)},
                {"j", to_json(r.j)},
                {"configuration", to_json(r.configuration)},
                {"euler", r.euler},
                {"trivial_lattice", Json{{"rank", r.trivial_rank}, {"disc", r.trivial_disc.str()}}},
                {"rho", r.rho},
                {"mordell_weil", mw},
                {"extremal", r.extremal},
                {"van_geemen_sarti", r.van_geemen_sarti}};
}

inline SurfaceReport report_from_json(const Json& j) {
    SurfaceReport r;
    r.model = model_from_json(j.at("model"));
    r.delta_factored.unit = rational_from_json(j.at("delta").at("unit"));
    for (const auto& f : j.at("delta").at("factors")) {
        // factor places round-trip through the configuration's machine fields
        r.delta_factored.factors.push_back(
            {Place::finite(polynomial_from_json(f.at("place_coeffs"))), f.at("multiplicity").get<int>()});
    }
    r.j = rational_function_from_json(j.at("j"));
    r.configuration = configuration_from_json(j.at("configuration"));
    r.euler = j.at("euler").get<int>();
    r.trivial_rank = j.at("trivial_lattice").at("rank").get<int>();
    r.trivial_disc = Int(j.at("trivial_lattice").at("disc").get<std::string>());
    r.rho = j.at("rho").get<int>();
    const Json& mw = j.at("mordell_weil");
    r.mw.rank = mw.at("rank").get<int>();
    for (const auto& d : mw.at("torsion_injects_into").at("invariant_factors"))
        r.mw.injection_target.orders.push_back(d.get<long>());
    r.mw.solved = mw.at("solved").get<bool>();
    if (r.mw.solved) {
        r.mw.assignment = torsion_assignment_from_json(mw.at("assignment_data"));
        r.mw.heights_verified = mw.at("heights_verified").get<bool>();
        AbelianGroup narrow, quotient;
        for (const auto& d : mw.at("narrow").at("invariant_factors")) narrow.orders.push_back(d.get<long>());
        for (const auto& d : mw.at("quotient").at("invariant_factors"))
            quotient.orders.push_back(d.get<long>());
        r.mw.narrow = narrow;
        r.mw.quotient = quotient;
    }
    r.extremal = j.at("extremal").get<bool>();
    r.van_geemen_sarti = j.at("van_geemen_sarti").get<bool>();
    return r;
}

inline bool operator==(const MordellWeilSection& a, const MordellWeilSection& b) {
    if (a.rank != b.rank || !(a.injection_target == b.injection_target) || a.solved != b.solved ||
        a.heights_verified != b.heights_verified)
        return false;
    if (a.assignment.has_value() != b.assignment.has_value()) return false;
    if (a.assignment && !(*a.assignment == *b.assignment)) return false;
    if (a.narrow.has_value() != b.narrow.has_value()) return false;
    if (a.narrow && !(*a.narrow == *b.narrow)) return false;
    if (a.quotient.has_value() != b.quotient.has_value()) return false;
    if (a.quotient && !(*a.quotient == *b.quotient)) return false;
    return true;
}

inline bool operator==(const SurfaceReport& a, const SurfaceReport& b) {
    return a.model == b.model && a.delta_factored == b.delta_factored && a.j == b.j &&
           a.configuration == b.configuration && a.euler == b.euler &&
           a.trivial_rank == b.trivial_rank && a.trivial_disc == b.trivial_disc && a.rho == b.rho &&
           a.mw == b.mw && a.extremal == b.extremal && a.van_geemen_sarti == b.van_geemen_sarti;
}

inline std::string render_text(const SurfaceReport& r) {
    std::ostringstream out;
    out << "model: " << r.model.str() << "\n";
    out << "delta: unit " << rat_str(r.delta_factored.unit);
    for (const auto& f : r.delta_factored.factors)
        out << "  (" << f.place.str() << ")^" << f.multiplicity;
    out << "\n";
    out << "j: " << r.j.str() << "\n";
    out << "fibers:";
    for (const auto& e : r.configuration.entries) {
        out << "  " << e.type.str() << "@" << e.place.str();
        if (e.residue_degree() > 1) out << " (x" << e.residue_degree() << ")";
    }
    out << "\n";
    out << "euler: " << r.euler << "  chi: " << r.configuration.chi << "\n";
    out << "trivial lattice: rank " << r.trivial_rank << ", disc " << r.trivial_disc.str() << "\n";
    out << "rho: " << r.rho << "  MW rank: " << r.mw.rank << "\n";
    out << "torsion injects into: " << r.mw.injection_target.str() << "\n";
    if (r.mw.solved) {
        out << "Mordell-Weil group: " << r.mw.assignment->group.str()
            << (r.mw.heights_verified ? "  (heights verified exactly 0)" : "") << "\n";
        out << "narrow torsion: " << r.mw.narrow->str() << "  quotient E(K)/E(K)^0: "
            << r.mw.quotient->str() << "\n";
    }
    out << "extremal: " << (r.extremal ? "yes" : "no")
        << "  van Geemen-Sarti involution: " << (r.van_geemen_sarti ? "yes" : "no") << "\n";
    return out.str();
}

// ---- audited reference tables ---------------------------------------------

struct TableRow {
    std::string tuple;
    std::string computed;
    std::string reference;
    bool agrees = false;
    std::string note;
};

struct Table {
    std::string title;
    std::string computed_header;
    std::string reference_header;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;
};

namespace detail {

struct ReferenceRow {
    std::array<int, 4> tuple;
    const char* mw;        // published Mordell-Weil group
    const char* narrow;    // published E(K)^0 entry
    const char* mwl;       // published Mordell-Weil lattice entry
};

inline const std::array<ReferenceRow, 6>& reference_rows() {
    static const std::array<ReferenceRow, 6> rows{{
        {{3, 3, 3, 3}, "(Z/3)^2", "Z/3", "(Z/3)^2 / (Z/3)"},
        {{4, 4, 2, 2}, "Z/4 x Z/2", "Z/2", "(Z/4 x Z/2) / (Z/2)"},
        {{5, 5, 1, 1}, "Z/5", "Z/5", "{0}"},
        {{6, 3, 2, 1}, "Z/6", "Z/2, Z/3", "(Z/6) / (Z/3)"},
        {{8, 2, 1, 1}, "Z/4", "Z/2", "(Z/4) / (Z/2)"},
        {{9, 1, 1, 1}, "Z/3", "Z/3", "{0}"},
    }};
    return rows;
}

inline std::string tuple_str(const std::array<int, 4>& t) {
    std::string s;
    for (int n : t) s += (s.empty() ? "" : ",") + std::to_string(n);
    return s;
}

} // namespace detail

/// `table mw`: solved Mordell-Weil groups beside the published ones.
inline Table build_mw_table() {
    Table t;
    t.title = "Mordell-Weil groups of the six semistable fibrations";
    t.computed_header = "computed MW";
    t.reference_header = "reference MW";
    for (const auto& row : detail::reference_rows()) {
        const std::vector<int> tuple(row.tuple.begin(), row.tuple.end());
        const auto a = solve_torsion(multiplicative_configuration(tuple));
        TableRow r;
        r.tuple = detail::tuple_str(row.tuple);
        r.computed = a.group.str();
        r.reference = row.mw;
        r.agrees = r.computed == r.reference;
        t.rows.push_back(std::move(r));
    }
    return t;
}

/// `table subgroups`: computed narrow torsion (always trivial, by
/// injectivity) beside the published E(K)^0 column.
inline Table build_subgroups_table() {
    Table t;
    t.title = "Narrow subgroups E(K)^0 (torsion part)";
    t.computed_header = "computed narrow torsion";
    t.reference_header = "reference E(K)^0";
    for (const auto& row : detail::reference_rows()) {
        const std::vector<int> tuple(row.tuple.begin(), row.tuple.end());
        const auto a = solve_torsion(multiplicative_configuration(tuple));
        const auto [narrow, quotient] = narrow_and_quotient(a);
        TableRow r;
        r.tuple = detail::tuple_str(row.tuple);
        r.computed = narrow.str();
        r.reference = row.narrow;
        r.agrees = r.computed == r.reference;
        if (!r.agrees) r.note = "torsion injects into prod G(F_v), so narrow torsion is forced trivial";
        t.rows.push_back(std::move(r));
    }
    t.notes.push_back(
        "the component map is one-to-one on torsion, so every nonzero torsion section misses the "
        "identity component somewhere; nontrivial narrow torsion entries are not reproducible");
    t.notes.push_back(
        "[9,1,1,1] reference height h(P)=2-3.5/9=1/3 flagged: the exact torsion height is 0 "
        "(contribution 3*(9-3)/9 = 2 cancels 2*chi), and a nonzero height would contradict P "
        "being torsion");
    return t;
}

/// `table mwl`: computed quotients E(K)/E(K)^0 and narrow-lattice invariants
/// beside the published Mordell-Weil lattice column.
inline Table build_mwl_table() {
    Table t;
    t.title = "Mordell-Weil lattices of the six semistable fibrations";
    t.computed_header = "computed E(K)/E(K)^0";
    t.reference_header = "reference MWL";
    for (const auto& row : detail::reference_rows()) {
        const std::vector<int> tuple(row.tuple.begin(), row.tuple.end());
        const auto a = solve_torsion(multiplicative_configuration(tuple));
        const auto [narrow, quotient] = narrow_and_quotient(a);
        const MwlInvariants mi = mwl_invariants(GramLattice(), 1, std::nullopt);
        TableRow r;
        r.tuple = detail::tuple_str(row.tuple);
        r.computed = quotient.str() + "  (narrow lattice: rank " + std::to_string(mi.rank) + ", det " +
                     mi.det.str() + ")";
        r.reference = row.mwl;
        r.agrees = false; // quotient notation is audited, not asserted
        r.note = "rank-0 narrow lattice is the zero lattice; the quotient equals the full torsion group";
        t.rows.push_back(std::move(r));
    }
    t.notes.push_back(
        "[9,1,1,1] reference height h(P)=2-3.5/9=1/3 flagged: exact torsion heights vanish, so the "
        "reference MWL normalizations are recorded, not asserted");
    t.notes.push_back("reference det(M) list {8,9,18,25,108,162} recorded verbatim, never asserted");
    return t;
}

inline Table run_table(const std::string& which) {
    if (which == "mw") return build_mw_table();
    if (which == "subgroups") return build_subgroups_table();
    if (which == "mwl") return build_mwl_table();
    throw input_error("unknown table: " + which + " (expected mw, mwl or subgroups)");
}

inline std::string render_text(const Table& t) {
    std::ostringstream out;
    out << t.title << "\n";
    std::size_t w0 = 7, w1 = t.computed_header.size(), w2 = t.reference_header.size();
    for (const auto& r : t.rows) {
        w0 = std::max(w0, r.tuple.size());
        w1 = std::max(w1, r.computed.size());
        w2 = std::max(w2, r.reference.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    out << pad("fibers", w0) << " | " << pad(t.computed_header, w1) << " | "
        << pad(t.reference_header, w2) << " | status\n";
    out << std::string(w0 + w1 + w2 + 16, '-') << "\n";
    for (const auto& r : t.rows) {
        out << pad(r.tuple, w0) << " | " << pad(r.computed, w1) << " | " << pad(r.reference, w2)
            << " | " << (r.agrees ? "agree" : "MISMATCH (documented)");
        if (!r.note.empty()) out << "  -- " << r.note;
        out << "\n";
    }
    for (const auto& n : t.notes) out << "note: " << n << "\n";
    return out.str();
}

inline Json to_json(const Table& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"fibers", r.tuple},
                            {"computed", r.computed},
                            {"reference", r.reference},
                            {"agrees", r.agrees},
                            {"note", r.note}});
    return Json{{"title", t.title}, {"rows", rows}, {"notes", t.notes}};
}

// ---- bielliptic report -----------------------------------------------------

struct BiellipticReport {
    LegendrePair pair;
    LegendreCurve curve;
    SubcoverData subcovers;
    JacobiSplit split;
    bool covers_verified = false;
    bool change_identity_verified = false;
    FiberedProduct product;
    NewSettingCover newsetting;
    std::array<int, 4> weierstrass_counts{};
};

inline BiellipticReport bielliptic_report(const Rational& t1, const Rational& t2) {
    BiellipticReport rep;
    rep.pair = {t1, t2};
    rep.pair.validate();
    rep.curve = curve_from_legendre_pair(rep.pair);
    rep.subcovers = subcover_equations(rep.pair);
    rep.split = split_jacobi(rep.curve.sextic);
    rep.product = fibered_product(rep.pair);
    rep.newsetting = newsetting_cover(t1, t2);
    rep.covers_verified =
        verify_cover(rep.split.pi1) && verify_cover(rep.split.pi2) && verify_cover(rep.newsetting.f);
    rep.change_identity_verified = detail::legendre_change_identity(1, rep.pair) &&
                                   detail::legendre_change_identity(2, rep.pair);
    rep.weierstrass_counts = weierstrass_image_counts(rep.newsetting, t1);
    return rep;
}

inline Json to_json(const BiellipticReport& r) {
    Json counts = Json::array();
    for (int c : r.weierstrass_counts) counts.push_back(c);
    Json nodes = Json::array();
    for (const auto& x : r.product.finite_nodes) nodes.push_back(to_json(x));
    nodes.push_back("infinity");
    return Json{{"t1", to_json(r.pair.t1)},
                {"t2", to_json(r.pair.t2)},
                {"sextic", to_json(r.curve.sextic)},
                {"subcover_E1", to_json(r.split.e1)},
                {"subcover_E2", to_json(r.split.e2)},
                {"tilde_E1", to_json(r.subcovers.e1_tilde)},
                {"tilde_E2", to_json(r.subcovers.e2_tilde)},
                {"scale_squared", to_json(r.subcovers.scale_squared[0])},
                {"covers_verified", r.covers_verified},
                {"change_identity_verified", r.change_identity_verified},
                {"nodes", nodes},
                {"newsetting_y0_squared", to_json(r.newsetting.y0_squared)},
                {"weierstrass_counts", counts}};
}

} // namespace ellsurf
