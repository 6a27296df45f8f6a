#pragma once

// Linear-time maximum t-frugal independent set on trees.
//
// Root at a non-leaf, sweep vertices bottom-to-top (children strictly before
// parents), and greedily add every vertex that keeps the set independent and
// every neighborhood under t members. The greedy choice is safe on trees: a
// skipped vertex can always be exchanged into some optimal set.

#include <stdexcept>
#include <vector>

#include "frugalis/check.hpp"
#include "frugalis/graph.hpp"

namespace frugalis {

struct RootedTree {
    int root = 0;
    std::vector<int> parent;  // root maps to itself
    std::vector<int> order;   // bottom-to-top: children appear before parents
};

inline RootedTree root_at(const Graph& tree, int root) {
    RootedTree rt;
    rt.root = root;
    rt.parent.assign(tree.n, -1);
    rt.parent[root] = root;
    std::vector<int> bfs{root};
    bfs.reserve(tree.n);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        int v = bfs[head];
        for (int w : tree.adj[v])
            if (rt.parent[w] == -1) {
                rt.parent[w] = v;
                bfs.push_back(w);
            }
    }
    // BFS layers come out in nondecreasing distance, so the reverse visits
    // every child before its parent.
    rt.order.assign(bfs.rbegin(), bfs.rend());
    return rt;
}

struct TreeAlphaResult {
    int value = 0;
    VertexSet witness;
};

inline TreeAlphaResult alpha_t_frugal_tree(const Graph& tree, int t) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
    TreeAlphaResult out;
    if (tree.n <= 2) {
        // No non-leaf root exists; a single vertex is optimal either way.
        out.value = 1;
        out.witness.members = {0};
        return out;
    }
    int root = -1;
    for (int v = 0; v < tree.n && root == -1; ++v)
        if (tree.degree(v) >= 2) root = v;
    RootedTree rt = root_at(tree, root);

    std::vector<char> in_set(tree.n, 0);
    std::vector<int> cnt(tree.n, 0);  // members currently in each neighborhood
    for (int u : rt.order) {
        bool ok = true;
        for (int w : tree.adj[u]) {
            if (in_set[w] || cnt[w] >= t) { ok = false; break; }
        }
        if (!ok) continue;
        in_set[u] = 1;
        for (int w : tree.adj[u]) ++cnt[w];
    }
    for (int v = 0; v < tree.n; ++v)
        if (in_set[v]) out.witness.members.push_back(v);
    out.value = static_cast<int>(out.witness.members.size());
    return out;
}

}  // namespace frugalis
