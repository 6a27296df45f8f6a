#pragma once

// Core graph value type and structural analysis.
//
// Graphs are simple and undirected: dense 0-based vertex ids, per-vertex
// sorted adjacency, no loops, no parallel edges. Values are immutable after
// construction and cheap to share across threads.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frugalis {

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted, symmetric, loop-free

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n == 0) return 0;
        int d = degree(0);
        for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
};

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

inline Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    c.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        auto it = g.adj[u].begin();
        for (int v = 0; v < g.n; ++v) {
            if (it != g.adj[u].end() && *it == v) {
                ++it;
                continue;
            }
            if (v != u) c.adj[u].push_back(v);
        }
    }
    return c;
}

// Square of a graph: adjacency means distance 1 or 2 in the original.
inline Graph square(const Graph& g) {
    Graph s;
    s.n = g.n;
    s.adj.assign(g.n, {});
    std::vector<char> mark(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> hit;
        for (int v : g.adj[u]) {
            if (!mark[v]) { mark[v] = 1; hit.push_back(v); }
            for (int w : g.adj[v]) {
                if (w != u && !mark[w]) { mark[w] = 1; hit.push_back(w); }
            }
        }
        std::sort(hit.begin(), hit.end());
        s.adj[u] = hit;
        for (int v : hit) mark[v] = 0;
    }
    return s;
}

enum class ProductKind { cartesian, strong, direct, lexicographic };

// Product vertex (i, j) is linearized row-major as i*|V(h)| + j.
inline Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    Graph p;
    p.n = g.n * h.n;
    p.adj.assign(p.n, {});
    auto id = [&](int i, int j) { return i * h.n + j; };
    auto add = [&](int a, int b) {
        p.adj[a].push_back(b);
        p.adj[b].push_back(a);
    };
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < h.n; ++j) {
            int a = id(i, j);
            switch (kind) {
                case ProductKind::cartesian:
                    for (int j2 : h.adj[j]) if (j2 > j) add(a, id(i, j2));
                    for (int i2 : g.adj[i]) if (i2 > i) add(a, id(i2, j));
                    break;
                case ProductKind::strong:
                    for (int j2 : h.adj[j]) if (j2 > j) add(a, id(i, j2));
                    for (int i2 : g.adj[i]) if (i2 > i) {
                        add(a, id(i2, j));
                        for (int j2 : h.adj[j]) add(a, id(i2, j2));
                    }
                    break;
                case ProductKind::direct:
                    for (int i2 : g.adj[i]) if (i2 > i)
                        for (int j2 : h.adj[j]) add(a, id(i2, j2));
                    break;
                case ProductKind::lexicographic:
                    for (int j2 : h.adj[j]) if (j2 > j) add(a, id(i, j2));
                    for (int i2 : g.adj[i]) if (i2 > i)
                        for (int j2 = 0; j2 < h.n; ++j2) add(a, id(i2, j2));
                    break;
            }
        }
    }
    for (auto& nb : p.adj) std::sort(nb.begin(), nb.end());
    return p;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.adj[comp[head]])
                if (!seen[w]) { seen[w] = 1; comp.push_back(w); }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && is_connected(g) && g.edge_count() == g.n - 1;
}

inline bool is_triangle_free(const Graph& g) {
    // For each edge uv, look for a common neighbor by merging sorted lists.
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            auto a = g.adj[u].begin(), b = g.adj[v].begin();
            while (a != g.adj[u].end() && b != g.adj[v].end()) {
                if (*a == *b) return false;
                (*a < *b) ? ++a : ++b;
            }
        }
    }
    return true;
}

// Claw-free: no vertex has three pairwise non-adjacent neighbors.
inline bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

inline std::optional<int> regular_degree(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

// Exact clique number by Bron–Kerbosch with pivoting. Exponential worst
// case; intended for desk-scale graphs.
namespace detail {
inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, int& best) {
    if (p.empty() && x.empty()) {
        best = std::max(best, static_cast<int>(r.size()));
        return;
    }
    if (static_cast<int>(r.size() + p.size()) <= best) return;  // can't beat best
    int pivot = -1;
    std::size_t most = 0;
    for (int cand : p) {
        std::size_t cnt = 0;
        for (int w : p)
            if (g.has_edge(cand, w)) ++cnt;
        if (pivot == -1 || cnt > most) { pivot = cand; most = cnt; }
    }
    for (int cand : x) {
        std::size_t cnt = 0;
        for (int w : p)
            if (g.has_edge(cand, w)) ++cnt;
        if (pivot == -1 || cnt > most) { pivot = cand; most = cnt; }
    }
    std::vector<int> candidates;
    for (int v : p)
        if (pivot == -1 || !g.has_edge(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> p2, x2;
        for (int w : p) if (g.has_edge(v, w)) p2.push_back(w);
        for (int w : x) if (g.has_edge(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), best);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}
}  // namespace detail

inline int clique_number(const Graph& g) {
    if (g.n == 0) return 0;
    std::vector<int> r, p(g.n), x;
    for (int v = 0; v < g.n; ++v) p[v] = v;
    int best = 1;
    detail::bron_kerbosch(g, r, std::move(p), std::move(x), best);
    return best;
}

// Blocks (biconnected components) via the classic lowpoint DFS. Bridges
// become 2-vertex blocks; isolated vertices become 1-vertex blocks.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted
    std::vector<int> cut_vertices;         // sorted
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<char> is_cut(g.n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    // Iterative DFS so deep graphs don't overflow the call stack.
    struct Frame { int v; std::size_t idx; };
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] != -1) continue;
        if (g.adj[root].empty()) {
            out.blocks.push_back({root});
            disc[root] = timer++;
            continue;
        }
        int root_children = 0;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back().v;
            if (stack.back().idx < g.adj[v].size()) {
                int w = g.adj[v][stack.back().idx++];
                if (disc[w] == -1) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (p == root) ++root_children;
                if (low[v] >= disc[p]) {
                    // p separates v's subtree: pop the block's edges.
                    std::vector<int> verts;
                    std::pair<int, int> top;
                    do {
                        top = estack.back();
                        estack.pop_back();
                        verts.push_back(top.first);
                        verts.push_back(top.second);
                    } while (top != std::make_pair(p, v));
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    out.blocks.push_back(std::move(verts));
                    if (p != root) is_cut[p] = 1;
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

inline bool is_block_graph(const Graph& g) {
    for (const auto& block : block_decomposition(g).blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) return false;
    }
    return true;
}

struct PendantStats {
    int p = 0;        // pendant (degree-1) vertices
    int s = 0;        // support vertices (≥1 pendant neighbor)
    int s_prime = 0;  // strong supports (≥2 pendant neighbors)
    std::optional<int> delta_star;  // min degree outside pendants ∪ supports
    bool all_pendant_or_support = false;
};

inline PendantStats pendant_stats(const Graph& g) {
    PendantStats st;
    std::vector<char> pend(g.n, 0), supp(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) { pend[v] = 1; ++st.p; }
    for (int v = 0; v < g.n; ++v) {
        int pendant_neighbors = 0;
        for (int w : g.adj[v]) pendant_neighbors += pend[w];
        if (pendant_neighbors >= 1) { supp[v] = 1; ++st.s; }
        if (pendant_neighbors >= 2) ++st.s_prime;
    }
    st.all_pendant_or_support = true;
    for (int v = 0; v < g.n; ++v) {
        if (pend[v] || supp[v]) continue;
        st.all_pendant_or_support = false;
        st.delta_star = st.delta_star ? std::min(*st.delta_star, g.degree(v)) : g.degree(v);
    }
    return st;
}

struct StructuralFlags {
    bool triangle_free = false;
    bool claw_free = false;
    bool connected = false;
    std::optional<int> regular_degree;
    int clique_number = 0;
    BlockDecomposition blocks;
    bool is_block_graph = false;
};

inline StructuralFlags structural_flags(const Graph& g) {
    StructuralFlags f;
    f.triangle_free = is_triangle_free(g);
    f.claw_free = is_claw_free(g);
    f.connected = is_connected(g);
    f.regular_degree = regular_degree(g);
    f.clique_number = clique_number(g);
    f.blocks = block_decomposition(g);
    f.is_block_graph = true;
    for (const auto& block : f.blocks.blocks) {
        for (std::size_t i = 0; i < block.size() && f.is_block_graph; ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) { f.is_block_graph = false; break; }
    }
    return f;
}

// Degeneracy (smallest-last) removal order: repeatedly delete a vertex of
// minimum current degree, lowest id first on ties. Returns the removal
// sequence; reverse it to color the dense core first.
inline std::vector<int> degeneracy_removal_order(const Graph& g) {
    std::vector<int> deg(g.n), order;
    order.reserve(g.n);
    std::vector<char> removed(g.n, 0);
    // Min-heap of (degree, id); stale entries (degree no longer current) are
    // skipped on pop. This makes the lowest-id tie-break exact.
    using Entry = std::pair<int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue;
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.adj[v]) {
            if (removed[w]) continue;
            --deg[w];
            heap.emplace(deg[w], w);
        }
    }
    return order;
}

}  // namespace frugalis
