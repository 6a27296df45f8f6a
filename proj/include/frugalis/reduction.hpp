#pragma once

// Exact Cover by 3-Sets → t-frugal independent set gadget, plus a
// brute-force cover oracle so the equivalence can be machine-checked on
// small instances.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "frugalis/graph.hpp"

namespace frugalis {

struct X3CInstance {
    int q = 0;                                // universe is [0, 3q)
    std::vector<std::array<int, 3>> triples;
};

namespace detail {

inline void require_x3c(const X3CInstance& inst) {
    if (inst.q < 1) throw std::invalid_argument("x3c: q must be positive");
    for (const auto& tr : inst.triples) {
        for (int x : tr)
            if (x < 0 || x >= 3 * inst.q)
                throw std::invalid_argument("x3c: element out of range");
        if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2])
            throw std::invalid_argument("x3c: triple elements must be distinct");
    }
}

}  // namespace detail

struct ReductionOutput {
    Graph graph;
    int k = 0;                             // cover exists iff α_t^f ≥ k
    std::vector<std::string> vertex_roles;  // id -> role tag
};

// Gadget: one path a_j b_j c_j per triple (ids 3j..3j+2), then one star per
// universe element with center x'_e = 3p + e·t and t−1 leaves after it; the
// center of element e is tied to c_r for every triple r containing e. The
// target is k = p + (3t−2)q.
inline ReductionOutput x3c_to_frugal(const X3CInstance& inst, int t) {
    if (t < 2) throw std::invalid_argument("x3c_to_frugal: construction needs t >= 2");
    detail::require_x3c(inst);
    const int p = static_cast<int>(inst.triples.size());
    const int universe = 3 * inst.q;
    const int n = 3 * p + universe * t;

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < p; ++j) {
        edges.emplace_back(3 * j, 3 * j + 1);
        edges.emplace_back(3 * j + 1, 3 * j + 2);
    }
    for (int e = 0; e < universe; ++e) {
        int center = 3 * p + e * t;
        for (int i = 1; i < t; ++i) edges.emplace_back(center, center + i);
    }
    for (int j = 0; j < p; ++j)
        for (int x : inst.triples[j])
            edges.emplace_back(3 * p + x * t, 3 * j + 2);

    ReductionOutput out;
    out.graph = from_edges(n, edges);
    out.k = p + (3 * t - 2) * inst.q;
    out.vertex_roles.resize(n);
    for (int j = 0; j < p; ++j) {
        out.vertex_roles[3 * j] = "a_" + std::to_string(j);
        out.vertex_roles[3 * j + 1] = "b_" + std::to_string(j);
        out.vertex_roles[3 * j + 2] = "c_" + std::to_string(j);
    }
    for (int e = 0; e < universe; ++e) {
        int center = 3 * p + e * t;
        out.vertex_roles[center] = "x_center_" + std::to_string(e);
        for (int i = 1; i < t; ++i)
            out.vertex_roles[center + i] =
                "x_leaf_" + std::to_string(e) + "_" + std::to_string(i);
    }
    return out;
}

struct X3CCover {
    bool exists = false;
    std::vector<int> chosen;  // triple indices forming the cover
};

// Try every q-subset of the triples; a cover must be pairwise disjoint and
// hit all 3q elements, so a bitmask union test settles each candidate.
inline X3CCover x3c_brute_force(const X3CInstance& inst) {
    detail::require_x3c(inst);
    const int p = static_cast<int>(inst.triples.size());
    const int q = inst.q;
    if (3 * q > 62) throw std::invalid_argument("x3c_brute_force: universe too large");
    X3CCover out;
    if (p < q) return out;
    std::vector<std::uint64_t> mask(p, 0);
    for (int j = 0; j < p; ++j)
        for (int x : inst.triples[j]) mask[j] |= std::uint64_t{1} << x;
    const std::uint64_t full = (std::uint64_t{1} << (3 * q)) - 1;

    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    for (;;) {
        std::uint64_t acc = 0;
        bool disjoint = true;
        for (int i = 0; i < q && disjoint; ++i) {
            if (acc & mask[idx[i]]) disjoint = false;
            acc |= mask[idx[i]];
        }
        if (disjoint && acc == full) {
            out.exists = true;
            out.chosen = idx;
            return out;
        }
        int d = q - 1;
        while (d >= 0 && idx[d] == p - q + d) --d;
        if (d < 0) break;
        ++idx[d];
        for (int i = d + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace frugalis
