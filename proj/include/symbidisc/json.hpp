#pragma once

#include <string>

#include <json.hpp>

#include "symbidisc/distinguished.hpp"
#include "symbidisc/extremal.hpp"
#include "symbidisc/ortho.hpp"

// JSON encoding of library values.  Complex numbers are two-element arrays
// [re, im]; points are {"s": [..], "p": [..]}; doubles round-trip at full
// precision through nlohmann's shortest-representation output.

namespace symbidisc::io {

using nlohmann::json;

inline json to_json(Complex z) { return json::array({std::real(z), std::imag(z)}); }

inline json to_json(const GPoint& g) {
    return json{{"s", to_json(g.s)}, {"p", to_json(g.p)}};
}

inline std::string type_name(GeodesicType t) {
    switch (t) {
        case GeodesicType::Royal: return "royal";
        case GeodesicType::Flat: return "flat";
        case GeodesicType::PurelyBalanced: return "purely_balanced";
        case GeodesicType::Exceptional: return "exceptional";
        default: return "purely_unbalanced";
    }
}

inline std::string direction_name(DirectionClass c) {
    switch (c) {
        case DirectionClass::Flat: return "flat";
        case DirectionClass::SharpBalanced: return "sharp_balanced";
        case DirectionClass::PurelyBalanced: return "purely_balanced";
        case DirectionClass::Exceptional: return "exceptional";
        case DirectionClass::RoyalSharp: return "royal_sharp";
        default: return "purely_unbalanced";
    }
}

inline json to_json(const MoebiusAut& m) {
    return json{{"alpha", to_json(m.alpha)}, {"tau", to_json(m.tau)}};
}

inline json to_json(const Geodesic& g) {
    json j{{"type", type_name(g.type)}};
    if (g.kind == Geodesic::Kind::Flat) {
        j["kind"] = "flat";
        j["beta"] = to_json(g.beta);
    } else {
        j["kind"] = "bm";
        j["alpha"] = to_json(g.m.alpha);
        j["tau"] = to_json(g.m.tau);
    }
    return j;
}

inline json to_json(const ExtremalResult& r) {
    json maximizers = json::array();
    for (const Complex w : r.maximizers) maximizers.push_back(to_json(w));
    json flags = json::array();
    if (r.constant_objective) flags.push_back("constant_objective");
    if (r.degenerate) flags.push_back("degenerate");
    return json{{"value", r.value}, {"maximizers", maximizers}, {"flags", flags}};
}

inline json to_json(const ConnectResult& r) {
    json j{{"type", type_name(r.type)}};
    if (r.geodesic) j["geodesic"] = to_json(*r.geodesic);
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline json to_json(const DirectionInfo& d) {
    json j{{"type", direction_name(d.cls)}};
    if (d.tau) j["tau"] = to_json(*d.tau);
    if (d.sigma) j["sigma"] = *d.sigma;
    return j;
}

inline json to_json(const OrthoLeaf& l) {
    return json{{"beta", to_json(l.beta)},
                {"leaf", to_json(l.geodesic)},
                {"foot", to_json(l.foot)}};
}

inline json to_json(const ChartCoord& c) {
    return json{{"eta1", to_json(c.eta1)},
                {"eta2", to_json(c.eta2)},
                {"t", c.t},
                {"u", c.u}};
}

// ---- parsing ---------------------------------------------------------------

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline GPoint gpoint_from_json(const json& j) {
    if (j.is_array() && j.size() == 2)
        return {complex_from_json(j[0]), complex_from_json(j[1])};
    if (j.is_object() && j.contains("s") && j.contains("p"))
        return {complex_from_json(j["s"]), complex_from_json(j["p"])};
    throw std::invalid_argument("expected a point as [[re,im],[re,im]] or {\"s\":..,\"p\":..}");
}

inline Complex parse_complex(const std::string& text) {
    return complex_from_json(json::parse(text));
}

inline GPoint parse_gpoint(const std::string& text) {
    return gpoint_from_json(json::parse(text));
}

inline std::pair<Complex, Complex> parse_pair(const std::string& text) {
    const json j = json::parse(text);
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a pair as [[re,im],[re,im]]");
    return {complex_from_json(j[0]), complex_from_json(j[1])};
}

} // namespace symbidisc::io
