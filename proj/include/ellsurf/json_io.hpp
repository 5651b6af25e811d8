#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding of every report-level object.
 *
 * Integers and rationals are serialized as decimal strings to avoid any
 * precision loss; polynomials as arrays of [numerator, denominator] pairs in
 * ascending degree.  Everything uses ordered maps so identical inputs give
 * byte-identical output.
 */

#include "ellsurf/bielliptic.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/lattice.hpp"
#include "ellsurf/mordell_weil.hpp"
#include "ellsurf/pencil.hpp"
#include "ellsurf/weierstrass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ellsurf {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return Json::array({num(q).str(), den(q).str()}); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_array() && j.size() == 2) {
        const Int n(j[0].get<std::string>()), d(j[1].get<std::string>());
        if (d == 0) throw input_error("rational with zero denominator");
        return Rational(n, d);
    }
    throw input_error("bad rational encoding: " + j.dump());
}

inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("polynomial must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

inline Json to_json(const RationalFunction& f) {
    if (f.is_polynomial()) return to_json(f.num());
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
    if (j.is_object()) return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
    return RationalFunction(polynomial_from_json(j));
}

inline Json to_json(const WeierstrassModel& m) {
    return Json{{"a1", to_json(m.a1)}, {"a2", to_json(m.a2)}, {"a3", to_json(m.a3)},
                {"a4", to_json(m.a4)}, {"a6", to_json(m.a6)}, {"chart", chart_name(m.chart)}};
}

inline WeierstrassModel model_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("model must be a JSON object");
    WeierstrassModel m;
    auto coeff = [&](const char* key) {
        return j.contains(key) ? rational_function_from_json(j.at(key)) : RationalFunction();
    };
    m.a1 = coeff("a1");
    m.a2 = coeff("a2");
    m.a3 = coeff("a3");
    m.a4 = coeff("a4");
    m.a6 = coeff("a6");
    if (j.contains("chart")) {
        const std::string c = j.at("chart").get<std::string>();
        if (c == "affine-t")
            m.chart = Chart::AffineT;
        else if (c == "infinity-s")
            m.chart = Chart::InfinityS;
        else
            throw input_error("unknown chart: " + c);
    }
    return m;
}

inline Json to_json(const FiberEntry& e, const std::string& var = "t") {
    Json j{{"place", e.place.str(var)},
           {"type", e.type.str()},
           {"m_v", e.type.components()},
           {"e", e.type.euler()},
           {"delta_v", e.type.wild_term()},
           {"residue_degree", e.residue_degree()}};
    if (!e.place.is_infinity()) j["place_coeffs"] = to_json(e.place.polynomial());
    return j;
}

inline FiberEntry fiber_entry_from_json(const Json& j) {
    const KodairaType t = KodairaType::parse(j.at("type").get<std::string>());
    if (j.contains("place_coeffs"))
        return {Place::finite(polynomial_from_json(j.at("place_coeffs"))), t};
    return {Place::infinity(), t};
}

inline Json to_json(const FiberConfiguration& c) {
    Json fibers = Json::array();
    for (const auto& e : c.entries) fibers.push_back(to_json(e));
    return Json{{"fibers", fibers}, {"chi", c.chi}, {"euler", euler_number(c)}};
}

inline FiberConfiguration configuration_from_json(const Json& j) {
    FiberConfiguration c;
    for (const auto& f : j.at("fibers")) c.entries.push_back(fiber_entry_from_json(f));
    c.chi = j.at("chi").get<int>();
    return c;
}

inline bool operator==(const FiberEntry& a, const FiberEntry& b) {
    return a.place == b.place && a.type == b.type;
}

inline bool operator==(const FiberConfiguration& a, const FiberConfiguration& b) {
    return a.entries == b.entries && a.chi == b.chi;
}

inline Json to_json(const PlaceDecomposition& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors)
        factors.push_back(Json{{"place", f.place.str()},
                               {"place_coeffs", to_json(f.place.polynomial())},
                               {"multiplicity", f.multiplicity},
                               {"residue_degree", f.place.residue_degree()}});
    return Json{{"unit", to_json(d.unit)}, {"factors", factors}};
}

inline Json to_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

inline Json to_json(const GramLattice& l) {
    Json gram = Json::array();
    for (const auto& row : l.gram()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        gram.push_back(r);
    }
    return Json{{"gram", gram},
                {"rank", l.rank()},
                {"signature", to_json(l.signature())},
                {"disc", l.discriminant().str()}};
}

inline Json to_json(const AbelianGroup& g) {
    Json inv = Json::array();
    for (long d : g.invariant_factors()) inv.push_back(d);
    return Json{{"invariant_factors", inv}, {"display", g.str()}};
}

inline Json to_json(const TorsionAssignment& a) {
    Json gens = Json::array();
    Json images = Json::array();
    for (const auto& img : a.images) {
        Json m = Json::object();
        Json row = Json::array();
        for (std::size_t k = 0; k < img.size(); ++k) {
            if (k < a.fiber_labels.size()) m[a.fiber_labels[k]] = img[k];
            row.push_back(img[k]);
        }
        gens.push_back(m);
        images.push_back(row);
    }
    Json cfg = Json::array();
    for (int n : a.fiber_orders) cfg.push_back(n);
    Json labels = Json::array();
    for (const auto& l : a.fiber_labels) labels.push_back(l);
    return Json{{"config", cfg},
                {"group", to_json(a.group)},
                {"assignment", gens},
                {"images", images},
                {"fiber_labels", labels}};
}

inline TorsionAssignment torsion_assignment_from_json(const Json& j) {
    TorsionAssignment a;
    for (const auto& n : j.at("config")) a.fiber_orders.push_back(n.get<int>());
    for (const auto& l : j.at("fiber_labels")) a.fiber_labels.push_back(l.get<std::string>());
    for (const auto& d : j.at("group").at("invariant_factors")) a.group.orders.push_back(d.get<long>());
    for (const auto& row : j.at("images")) {
        std::vector<long> img;
        for (const auto& x : row) img.push_back(x.get<long>());
        a.images.push_back(std::move(img));
    }
    return a;
}

inline bool operator==(const TorsionAssignment& a, const TorsionAssignment& b) {
    return a.group == b.group && a.fiber_orders == b.fiber_orders &&
           a.fiber_labels == b.fiber_labels && a.images == b.images;
}

inline Json to_json(const EmbeddingCertificate& c) {
    Json rows = Json::array();
    for (const auto& row : c.coordinates) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(r);
    }
    Json divs = Json::array();
    for (const auto& d : c.elementary_divisors) divs.push_back(d.str());
    return Json{{"n", c.n},
                {"coordinates", rows},
                {"gram_preserved", c.gram_preserved},
                {"elementary_divisors", divs},
                {"primitive", c.primitive}};
}

inline Json to_json(const CatalogVerification& v) {
    Json tuple = Json::array();
    for (int n : v.component_tuple) tuple.push_back(n);
    return Json{{"label", v.label},
                {"base_point", Json::array({v.base_point[0], v.base_point[1], v.base_point[2]})},
                {"model", to_json(v.model)},
                {"configuration", to_json(v.configuration)},
                {"component_tuple", tuple},
                {"components_match", v.components_match},
                {"euler", v.euler},
                {"euler_ok", v.euler_ok},
                {"trivial_lattice_disc", v.trivial_disc.str()},
                {"extremal", v.extremal},
                {"mordell_weil", to_json(v.torsion)},
                {"group_matches", v.group_matches},
                {"heights_verified", v.heights_verified},
                {"narrow", to_json(v.narrow)},
                {"quotient", to_json(v.quotient)},
                {"van_geemen_sarti", v.van_geemen_sarti}};
}

inline Json to_json(const JacobiSextic& s) {
    return Json{{"c0", to_json(s.c0)},
                {"c1", to_json(s.c1)},
                {"c2", to_json(s.c2)},
                {"c3", to_json(s.c3)},
                {"equation", s.str()},
                {"discriminant", to_json(s.discriminant())}};
}

inline Json to_json(const CubicModel& m) {
    return Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)},
                {"equation", m.str()}};
}

} // namespace ellsurf
