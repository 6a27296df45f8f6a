#pragma once

// Trusted validity predicates for colorings and vertex sets.
//
// Everything else in the library is tested against these checks, so they
// stay deliberately simple: one counting pass per vertex with a reusable
// buffer, no cleverness. A coloring assigns every vertex a color in
// [0, palette); vertex sets are sorted and duplicate-free.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "frugalis/graph.hpp"

namespace frugalis {

struct Coloring {
    int palette = 0;          // number of colors k; used colors lie in [0,k)
    std::vector<int> colors;  // one entry per vertex
};

struct VertexSet {
    std::vector<int> members;  // sorted, unique, in [0,n)
};

namespace detail {

inline void require_cover(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n)
        throw std::invalid_argument("coloring size does not match vertex count");
    for (int q : c.colors)
        if (q < 0 || q >= c.palette)
            throw std::invalid_argument("color index outside palette");
}

inline void require_set(const Graph& g, const VertexSet& s) {
    int prev = -1;
    for (int v : s.members) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        if (v <= prev) throw std::invalid_argument("set members must be sorted and unique");
        prev = v;
    }
}

// Partial-coloring frugality core shared with the exact solvers: color -1
// means unassigned and imposes no constraint. `scratch` must hold at least
// `palette` zeros on entry and is left zeroed on return.
inline bool partial_frugal_ok(const Graph& g, const std::vector<int>& colors, int t,
                              std::vector<int>& scratch) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) {
        for (int w : g.adj[v]) {
            int q = colors[w];
            if (q >= 0 && ++scratch[q] > t) { ok = false; break; }
        }
        for (int w : g.adj[v]) {
            int q = colors[w];
            if (q >= 0) scratch[q] = 0;
        }
    }
    return ok;
}

inline bool partial_proper_ok(const Graph& g, const std::vector<int>& colors) {
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (w > v && colors[v] >= 0 && colors[v] == colors[w]) return false;
    return true;
}

}  // namespace detail

inline bool is_proper(const Graph& g, const Coloring& c) {
    detail::require_cover(g, c);
    return detail::partial_proper_ok(g, c.colors);
}

inline bool is_t_frugal_coloring(const Graph& g, const Coloring& c, int t) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    detail::require_cover(g, c);
    if (!detail::partial_proper_ok(g, c.colors)) return false;
    std::vector<int> scratch(c.palette, 0);
    return detail::partial_frugal_ok(g, c.colors, t, scratch);
}

inline bool is_t_frugal_set(const Graph& g, const VertexSet& s, int t) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    detail::require_set(g, s);
    std::vector<char> in_set(g.n, 0);
    for (int v : s.members) in_set[v] = 1;
    for (int v : s.members)
        for (int w : g.adj[v])
            if (in_set[w]) return false;  // not independent
    for (int v = 0; v < g.n; ++v) {
        int hits = 0;
        for (int w : g.adj[v])
            if (in_set[w] && ++hits > t) return false;
    }
    return true;
}

// Distance-2 coloring: proper on the square, i.e. vertices at distance <= 2
// get distinct colors. Checked on an explicitly built square so it stays an
// independent cross-check of the t=1 frugal path.
inline bool is_2_distance_coloring(const Graph& g, const Coloring& c) {
    detail::require_cover(g, c);
    return detail::partial_proper_ok(square(g), c.colors);
}

// Injective coloring: every open neighborhood is rainbow. Adjacent vertices
// may share a color; properness is not part of this notion.
inline bool is_injective_coloring(const Graph& g, const Coloring& c) {
    detail::require_cover(g, c);
    std::vector<int> scratch(c.palette, 0);
    return detail::partial_frugal_ok(g, c.colors, 1, scratch);
}

}  // namespace frugalis
