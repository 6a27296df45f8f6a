#pragma once

// JSON shapes for the data the CLI reads and writes. Kept separate so the
// algorithm headers stay free of the (heavy) json dependency.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "frugalis/bounds.hpp"
#include "frugalis/check.hpp"
#include "frugalis/reduction.hpp"

namespace frugalis {

inline nlohmann::json coloring_to_json(const Coloring& c) {
    return {{"n", c.colors.size()}, {"palette", c.palette}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
    Coloring c;
    c.palette = j.at("palette").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != c.colors.size())
        throw std::invalid_argument("coloring json: n does not match colors length");
    return c;
}

inline nlohmann::json vertex_set_to_json(const VertexSet& s) {
    return {{"members", s.members}};
}

inline VertexSet vertex_set_from_json(const nlohmann::json& j) {
    return VertexSet{j.at("members").get<std::vector<int>>()};
}

inline nlohmann::json x3c_to_json(const X3CInstance& inst) {
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& tr : inst.triples) triples.push_back({tr[0], tr[1], tr[2]});
    return {{"q", inst.q}, {"triples", triples}};
}

inline X3CInstance x3c_from_json(const nlohmann::json& j) {
    X3CInstance inst;
    inst.q = j.at("q").get<int>();
    for (const auto& tr : j.at("triples")) {
        if (!tr.is_array() || tr.size() != 3)
            throw std::invalid_argument("x3c json: each triple needs exactly 3 elements");
        inst.triples.push_back({tr[0].get<int>(), tr[1].get<int>(), tr[2].get<int>()});
    }
    return inst;
}

inline nlohmann::json bound_entry_to_json(const BoundEntry& e) {
    nlohmann::json j{
        {"name", e.name},
        {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
        {"target", e.target == BoundTarget::chi_frugal    ? "chi_frugal"
                   : e.target == BoundTarget::alpha_frugal ? "alpha_frugal"
                                                           : "ng_sum"},
        {"value_num", e.value_num},
        {"value_den", e.value_den},
        {"rounded", e.rounded},
        {"applicable", e.applicable},
        {"inputs_used", e.inputs_used},
    };
    if (!e.applicable) j["reason"] = e.reason;
    return j;
}

inline nlohmann::json bounds_report_to_json(const std::vector<BoundEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) arr.push_back(bound_entry_to_json(e));
    return arr;
}

inline nlohmann::json ng_report_to_json(const NGReport& r) {
    return {
        {"chi_g", r.chi_g},
        {"chi_complement", r.chi_complement},
        {"sum", r.sum},
        {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound},
        {"is_exceptional", r.is_exceptional},
        {"is_upper_extremal", r.is_upper_extremal},
    };
}

}  // namespace frugalis
