#pragma once

// Constructive coloring procedures. Each builds an explicit coloring, runs
// it through the trusted validity checks, and only then returns it — a
// construction bug surfaces as an exception, never as silently bad output.

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frugalis/check.hpp"
#include "frugalis/exact.hpp"
#include "frugalis/generate.hpp"
#include "frugalis/graph.hpp"

namespace frugalis {

namespace detail {

inline Coloring verified(const Graph& g, Coloring c, int t, const char* what) {
    if (!is_t_frugal_coloring(g, c, t))
        throw std::logic_error(std::string(what) + ": constructed coloring failed validation");
    return c;
}

}  // namespace detail

enum class GreedyOrder { id, degeneracy };

// First-fit greedy: every vertex takes the lowest color that keeps the
// partial coloring proper and t-frugal. Any order stays within
// 1 + Δ(1 + ⌊(Δ−1)/t⌋) colors: a vertex has at most Δ colored neighbors, and
// each neighbor can veto at most ⌊(Δ−1)/t⌋ colors that are already at full
// count around it.
inline Coloring color_greedy(const Graph& g, int t, GreedyOrder order = GreedyOrder::id) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    std::vector<int> seq(g.n);
    for (int v = 0; v < g.n; ++v) seq[v] = v;
    if (order == GreedyOrder::degeneracy) {
        auto removal = degeneracy_removal_order(g);
        seq.assign(removal.rbegin(), removal.rend());
    }
    int delta = g.max_degree();
    int cap = g.n == 0 ? 0 : 1 + delta * (1 + (delta >= 1 ? (delta - 1) / t : 0));
    std::vector<int> color(g.n, -1);
    std::vector<int> full(cap, 0);  // colors at count t around some neighbor
    int used = 0;
    for (int u : seq) {
        // A color is forbidden if a colored neighbor wears it, or if some
        // neighbor already sees it t times.
        std::vector<char> bad(cap, 0);
        for (int w : g.adj[u]) {
            if (color[w] >= 0) bad[color[w]] = 1;
            for (int q = 0; q < cap; ++q) full[q] = 0;
            for (int x : g.adj[w])
                if (color[x] >= 0 && ++full[color[x]] >= t) bad[color[x]] = 1;
        }
        int c = 0;
        while (c < cap && bad[c]) ++c;
        if (c >= cap) throw std::logic_error("color_greedy: ran past the greedy bound");
        color[u] = c;
        used = std::max(used, c + 1);
    }
    Coloring out{used, std::move(color)};
    return detail::verified(g, std::move(out), t, "color_greedy");
}

// ---------------------------------------------------------------------------
// Block graphs: exact coloring with max{ω, ⌈Δ/2⌉+1} colors.
//
// Color the root block rainbow, then descend the block tree. All uncolored
// blocks hanging off a cut vertex x are colored in one step; bookkeeping
// ensures every color appears at most twice in N(x), which is the only
// neighborhood a step can endanger. Two regimes, by which term of the palette
// bound dominates: a "spill" regime when the clique number pays for
// everything, and a "pairing" regime that spends each fresh color on two
// vertices in different blocks, with a local recolor-and-relabel rescue when
// one oversized block is left over.
// ---------------------------------------------------------------------------

namespace detail {

struct BlockColorCtx {
    const Graph& g;
    int palette;
    int omega;
    std::vector<int>& color;
    const std::vector<std::vector<int>>& blocks;
    const std::vector<std::vector<int>>& blocks_of;  // vertex -> block indices
};

// Distinct-color completion used by both regimes: assign each vertex of
// `verts` (in order) a fresh color drawn from `pool` (in order), skipping
// per-vertex exclusions given by `excluded`.
inline void assign_distinct(const std::vector<int>& verts, const std::vector<int>& pool,
                            const std::vector<std::vector<int>>& excluded,
                            std::vector<int>& color, const char* stage) {
    std::vector<char> taken;
    taken.assign(pool.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        bool done = false;
        for (std::size_t p = 0; p < pool.size() && !done; ++p) {
            if (taken[p]) continue;
            int q = pool[p];
            bool ok = true;
            for (int bad : excluded[i])
                if (bad == q) { ok = false; break; }
            if (!ok) continue;
            color[verts[i]] = q;
            taken[p] = 1;
            done = true;
        }
        if (!done)
            throw std::logic_error(std::string("color_block_graph: color pool exhausted in ") + stage);
    }
}

// Pairing procedure shared by the main path and the rescue path. Blocks are
// given as lists of currently uncolored vertices; `fresh` colors are each
// spent on one vertex in each of the two blocks with the most uncolored
// vertices. Afterwards either everything is colored, or the leftovers get
// distinct colors from `base_pool` (colors of the base block minus the cut
// vertex color), which the counting argument guarantees is enough except in
// the one oversized-block case the caller handles separately.
// Returns the index of the single unfinished block, or -1 when done.
inline int run_pairing(std::vector<std::vector<int>>& uncolored, std::vector<int>& fresh,
                       std::vector<int>& color) {
    for (;;) {
        int first = -1, second = -1;
        for (std::size_t j = 0; j < uncolored.size(); ++j) {
            if (uncolored[j].empty()) continue;
            if (first == -1 || uncolored[j].size() > uncolored[first].size()) {
                second = first;
                first = static_cast<int>(j);
            } else if (second == -1 || uncolored[j].size() > uncolored[second].size()) {
                second = static_cast<int>(j);
            }
        }
        if (first == -1) return -1;        // everything colored
        if (second == -1) return first;    // one block left
        if (fresh.empty()) return -2;      // fresh colors exhausted
        int q = fresh.front();
        fresh.erase(fresh.begin());
        for (int j : {first, second}) {
            color[uncolored[j].front()] = q;
            uncolored[j].erase(uncolored[j].begin());
        }
    }
}

inline void color_block_group(BlockColorCtx& ctx, int x, const std::vector<int>& child_blocks,
                              int parent_block);

}  // namespace detail

inline Coloring color_block_graph(const Graph& g) {
    auto decomp = block_decomposition(g);
    for (const auto& block : decomp.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j]))
                    throw std::invalid_argument("color_block_graph: input is not a block graph");
    int omega = 0;
    for (const auto& block : decomp.blocks)
        omega = std::max(omega, static_cast<int>(block.size()));
    int delta = g.max_degree();
    int palette = std::max(omega, (delta + 1) / 2 + 1);
    if (g.n == 0) return Coloring{0, {}};

    std::vector<std::vector<int>> blocks_of(g.n);
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b)
        for (int v : decomp.blocks[b]) blocks_of[v].push_back(static_cast<int>(b));

    std::vector<int> color(g.n, -1);
    detail::BlockColorCtx ctx{g, palette, omega, color, decomp.blocks, blocks_of};

    std::vector<char> block_done(decomp.blocks.size(), 0);
    // Root one block per component: the one holding the component's lowest id.
    std::vector<int> queue;
    for (const auto& comp : connected_components(g)) {
        int b = blocks_of[comp.front()].front();
        const auto& verts = decomp.blocks[b];
        for (std::size_t i = 0; i < verts.size(); ++i) color[verts[i]] = static_cast<int>(i);
        block_done[b] = 1;
        queue.push_back(b);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int b = queue[head];
        for (int x : decomp.blocks[b]) {
            std::vector<int> children;
            for (int cb : blocks_of[x])
                if (!block_done[cb]) children.push_back(cb);
            if (children.empty()) continue;
            detail::color_block_group(ctx, x, children, b);
            for (int cb : children) {
                block_done[cb] = 1;
                queue.push_back(cb);
            }
        }
    }
    Coloring out{palette, std::move(color)};
    return detail::verified(g, std::move(out), 2, "color_block_graph");
}

namespace detail {

inline void color_block_group(BlockColorCtx& ctx, int x, const std::vector<int>& child_blocks,
                              int parent_block) {
    const auto& g = ctx.g;
    const int K = ctx.palette;
    auto& color = ctx.color;
    const std::vector<int>& parent_verts = ctx.blocks[parent_block];

    std::vector<char> in_parent(K, 0);
    for (int v : parent_verts) in_parent[color[v]] = 1;
    int cx = color[x];

    // Uncolored vertices per child block, ascending ids.
    std::vector<std::vector<int>> pending;
    for (int cb : child_blocks) {
        std::vector<int> u;
        for (int v : ctx.blocks[cb])
            if (color[v] == -1) u.push_back(v);
        pending.push_back(std::move(u));
    }

    if (ctx.omega >= K) {
        // Spill regime: hand the colors missing from the parent block to
        // children in order, then finish everyone with globally distinct
        // colors ≠ color(x). The block where the spill ran dry is finished
        // first, since its spilled colors shrink its choices.
        std::vector<int> fresh;
        for (int q = 0; q < K; ++q)
            if (!in_parent[q]) fresh.push_back(q);
        std::size_t boundary = 0;
        std::size_t fi = 0;
        for (std::size_t j = 0; j < pending.size(); ++j) {
            auto& u = pending[j];
            while (!u.empty() && fi < fresh.size()) {
                color[u.front()] = fresh[fi++];
                u.erase(u.begin());
            }
            if (fi == fresh.size()) { boundary = j; break; }
            boundary = j + 1;
        }
        std::vector<int> rest_verts;
        std::vector<std::vector<int>> excl;
        for (std::size_t j = boundary; j < pending.size(); ++j)
            for (int v : pending[j]) {
                rest_verts.push_back(v);
                std::vector<int> bad;
                if (j == boundary) {
                    // Avoid everything already on this block.
                    int cb = child_blocks[j];
                    for (int w : ctx.blocks[cb])
                        if (color[w] != -1) bad.push_back(color[w]);
                }
                excl.push_back(std::move(bad));
            }
        std::vector<int> pool;
        for (int q = 0; q < K; ++q)
            if (q != cx) pool.push_back(q);
        assign_distinct(rest_verts, pool, excl, color, "spill remainder");
        return;
    }

    // Pairing regime (the clique number is not the dominant term).
    if (child_blocks.size() == 1) {
        std::vector<int> pool;
        for (int q = 0; q < K; ++q)
            if (q != cx) pool.push_back(q);
        std::vector<std::vector<int>> excl(pending[0].size());
        assign_distinct(pending[0], pool, excl, color, "single child block");
        return;
    }

    std::vector<int> fresh;
    for (int q = 0; q < K; ++q)
        if (!in_parent[q]) fresh.push_back(q);
    std::vector<std::vector<int>> uncolored = pending;
    int leftover = run_pairing(uncolored, fresh, color);
    if (leftover == -1) return;

    std::vector<int> base_pool;
    for (int v : parent_verts)
        if (color[v] != cx) base_pool.push_back(color[v]);
    std::sort(base_pool.begin(), base_pool.end());

    if (leftover == -2) {
        // Fresh colors exhausted: at most |parent|−1 vertices remain, give
        // them distinct parent colors ≠ color(x).
        std::vector<int> rest;
        for (const auto& u : uncolored) rest.insert(rest.end(), u.begin(), u.end());
        std::vector<std::vector<int>> excl(rest.size());
        assign_distinct(rest, base_pool, excl, color, "pairing remainder");
        return;
    }

    // One unfinished block. If the parent block is big enough, finish with
    // its colors; otherwise recolor the whole group locally, starting from
    // the oversized block, and relabel so the parent block keeps its colors.
    auto& q_left = uncolored[leftover];
    if (base_pool.size() >= q_left.size()) {
        std::vector<std::vector<int>> excl(q_left.size());
        assign_distinct(q_left, base_pool, excl, color, "oversized leftover");
        return;
    }

    // Rescue: local recoloring c' over the group, big block first. The
    // pairing colors handed out above are discarded — the relabeled local
    // coloring replaces them wholesale.
    for (const auto& u : pending)
        for (int v : u) color[v] = -1;
    int big = child_blocks[leftover];
    const auto& big_verts = ctx.blocks[big];
    std::vector<int> cprime(g.n, -1);
    for (std::size_t i = 0; i < big_verts.size(); ++i)
        cprime[big_verts[i]] = static_cast<int>(i);
    std::vector<int> fresh2;
    for (int q = static_cast<int>(big_verts.size()); q < K; ++q) fresh2.push_back(q);

    // Blocks entering the second pairing: the parent block plus every child
    // block except the big one; uncolored = everything but x (and the big
    // block's vertices, which are done).
    std::vector<int> group_blocks{parent_block};
    for (int cb : child_blocks)
        if (cb != big) group_blocks.push_back(cb);
    std::vector<std::vector<int>> uncolored2;
    for (int b : group_blocks) {
        std::vector<int> u;
        for (int v : ctx.blocks[b])
            if (cprime[v] == -1) u.push_back(v);
        uncolored2.push_back(std::move(u));
    }
    int left2 = run_pairing(uncolored2, fresh2, cprime);
    if (left2 != -1) {
        std::vector<int> rest;
        if (left2 == -2) {
            for (const auto& u : uncolored2) rest.insert(rest.end(), u.begin(), u.end());
        } else {
            rest = uncolored2[left2];
        }
        std::vector<int> pool2;
        for (std::size_t i = 0; i < big_verts.size(); ++i)
            if (static_cast<int>(i) != cprime[x]) pool2.push_back(static_cast<int>(i));
        std::vector<std::vector<int>> excl(rest.size());
        assign_distinct(rest, pool2, excl, cprime, "rescue remainder");
    }

    // Relabel c' so the parent block's vertices keep their original colors,
    // then adopt c' for the group's new vertices. A color permutation
    // preserves validity, so the relabeled local coloring still is valid.
    std::vector<int> sigma(K, -1);
    std::vector<char> target_used(K, 0);
    for (int v : parent_verts) {
        sigma[cprime[v]] = color[v];
        target_used[color[v]] = 1;
    }
    int next_target = 0;
    for (int q = 0; q < K; ++q) {
        if (sigma[q] != -1) continue;
        while (target_used[next_target]) ++next_target;
        sigma[q] = next_target;
        target_used[next_target] = 1;
    }
    for (const auto& u : pending)
        for (int v : u) color[v] = sigma[cprime[v]];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcubic graphs: at most five colors.
// ---------------------------------------------------------------------------

namespace detail {

// Lowest color in [0,5) that keeps the partial coloring proper and 2-frugal
// around u; degrees ≤ 3 make the scan trivial.
inline int lowest_feasible_subcubic(const Graph& g, const std::vector<int>& color, int u) {
    for (int c = 0; c < 5; ++c) {
        bool ok = true;
        for (int w : g.adj[u]) {
            if (color[w] == c) { ok = false; break; }
            int cnt = 0;
            for (int v : g.adj[w])
                if (color[v] == c) ++cnt;
            if (cnt >= 2) { ok = false; break; }
        }
        if (ok) return c;
    }
    return -1;
}

// Children-first greedy along a BFS spanning tree rooted at a low-degree
// vertex. At coloring time a vertex has an uncolored parent whose own parent
// is also uncolored, which caps the forbidden colors at four, so five always
// suffice.
inline void subcubic_tree_greedy(const Graph& g, int root, std::vector<int>& color) {
    std::vector<int> bfs{root};
    std::vector<char> seen(g.n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < bfs.size(); ++head)
        for (int w : g.adj[bfs[head]])
            if (!seen[w]) { seen[w] = 1; bfs.push_back(w); }
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        int c = lowest_feasible_subcubic(g, color, *it);
        if (c == -1)
            throw std::logic_error("color_subcubic: greedy ran out of colors");
        color[*it] = c;
    }
}

}  // namespace detail

inline Coloring color_subcubic(const Graph& g, const SolveBudget& budget = {}) {
    if (g.max_degree() > 3)
        throw std::invalid_argument("color_subcubic: maximum degree exceeds 3");
    if (!is_connected(g))
        throw std::invalid_argument("color_subcubic: graph must be connected");
    std::vector<int> color(g.n, -1);
    if (g.n == 0) return Coloring{0, {}};

    int low = -1;
    for (int v = 0; v < g.n && low == -1; ++v)
        if (g.degree(v) <= 2) low = v;

    if (low != -1) {
        detail::subcubic_tree_greedy(g, low, color);
    } else {
        // Cubic: drop one edge so a degree-2 root exists, color the reduced
        // graph (possibly two components), then repair around the seam.
        int u = 0, v = g.adj[0][0];
        std::vector<std::pair<int, int>> edges;
        for (auto e : edge_list(g))
            if (!(e.first == u && e.second == v)) edges.push_back(e);
        Graph reduced = from_edges(g.n, edges);
        detail::subcubic_tree_greedy(reduced, u, color);
        // Dropping a bridge splits the graph; the first sweep only reaches
        // u's side, so sweep again from v if it is still untouched.
        if (color[v] == -1) detail::subcubic_tree_greedy(reduced, v, color);

        Coloring attempt{5, color};
        if (!is_t_frugal_coloring(g, attempt, 2)) {
            // Recolor a few vertices near the dropped edge. Violations sit on
            // that seam, so candidates are the distance-≤2 ball around it;
            // subsets grow from size 1 to 3 and the first fix wins.
            std::vector<int> ball;
            {
                std::vector<int> dist(g.n, -1);
                std::vector<int> bfs{u, v};
                dist[u] = dist[v] = 0;
                for (std::size_t head = 0; head < bfs.size(); ++head) {
                    int a = bfs[head];
                    if (dist[a] == 2) continue;
                    for (int w : g.adj[a])
                        if (dist[w] == -1) { dist[w] = dist[a] + 1; bfs.push_back(w); }
                }
                for (int w = 0; w < g.n; ++w)
                    if (dist[w] != -1) ball.push_back(w);
            }
            // Localized validity test: precompute the currently violated
            // constraints; after a recolor, check those plus everything the
            // changed vertices touch.
            auto violations = [&](const std::vector<int>& col) {
                std::pair<std::vector<std::pair<int, int>>, std::vector<int>> bad;
                for (auto e : edge_list(g))
                    if (col[e.first] == col[e.second]) bad.first.push_back(e);
                for (int w = 0; w < g.n; ++w) {
                    int cnt5[5] = {0, 0, 0, 0, 0};
                    for (int x : g.adj[w])
                        if (++cnt5[col[x]] >= 3) { bad.second.push_back(w); break; }
                }
                return bad;
            };
            auto base_bad = violations(color);
            auto locally_valid = [&](const std::vector<int>& col, const std::vector<int>& changed) {
                for (auto e : base_bad.first)
                    if (col[e.first] == col[e.second]) return false;
                for (int s : changed)
                    for (int w : g.adj[s])
                        if (col[s] == col[w]) return false;
                std::vector<int> verts = base_bad.second;
                for (int s : changed)
                    verts.insert(verts.end(), g.adj[s].begin(), g.adj[s].end());
                for (int w : verts) {
                    int cnt5[5] = {0, 0, 0, 0, 0};
                    for (int x : g.adj[w])
                        if (++cnt5[col[x]] >= 3) return false;
                }
                return true;
            };
            bool fixed = false;
            int b = static_cast<int>(ball.size());
            for (int size = 1; size <= 3 && !fixed; ++size) {
                std::vector<int> idx(size);
                for (int i = 0; i < size; ++i) idx[i] = i;
                while (!fixed) {
                    std::vector<int> subset(size);
                    for (int i = 0; i < size; ++i) subset[i] = ball[idx[i]];
                    std::vector<int> saved(size);
                    for (int i = 0; i < size; ++i) saved[i] = color[subset[i]];
                    std::vector<int> wheel(size, 0);
                    for (;;) {
                        for (int i = 0; i < size; ++i) color[subset[i]] = wheel[i];
                        if (locally_valid(color, subset)) { fixed = true; break; }
                        int d = size - 1;
                        while (d >= 0 && wheel[d] == 4) wheel[d--] = 0;
                        if (d < 0) break;
                        ++wheel[d];
                    }
                    if (fixed) break;
                    for (int i = 0; i < size; ++i) color[subset[i]] = saved[i];
                    int d = size - 1;
                    while (d >= 0 && idx[d] == b - size + d) --d;
                    if (d < 0) break;
                    ++idx[d];
                    for (int i = d + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
                }
            }
            if (!fixed) {
                // Not expected to happen; fall back to an exact 5-coloring so
                // the caller still gets a correct answer.
                std::fprintf(stderr,
                             "color_subcubic: seam repair exhausted, falling back to exact search\n");
                detail::BudgetClock clock(budget);
                detail::ColorSearch search(g, 2, 5, true, clock);
                if (search.run() != 1)
                    throw std::logic_error("color_subcubic: exact fallback found no 5-coloring");
                color = search.color();
            }
        }
    }
    int used = 1 + *std::max_element(color.begin(), color.end());
    Coloring out{used, std::move(color)};
    return detail::verified(g, std::move(out), 2, "color_subcubic");
}

// Connected claw-free cubic graphs other than K_4 are exactly 3-chromatic in
// the 2-frugal sense, and any proper 3-coloring works: three like-colored
// neighbors would form an independent triple in a neighborhood, i.e. a claw.
inline Coloring color_clawfree_cubic(const Graph& g, const SolveBudget& budget = {}) {
    if (!is_connected(g)) throw std::invalid_argument("color_clawfree_cubic: not connected");
    auto reg = regular_degree(g);
    if (!reg || *reg != 3) throw std::invalid_argument("color_clawfree_cubic: not cubic");
    if (!is_claw_free(g)) throw std::invalid_argument("color_clawfree_cubic: has a claw");
    if (g.n == 4) throw std::invalid_argument("color_clawfree_cubic: K_4 is excluded");
    detail::require_budget(budget);
    detail::BudgetClock clock(budget);
    // Proper 3-coloring exists by Brooks' theorem; t=3 makes the frugality
    // counters vacuous, leaving a plain proper-coloring search.
    detail::ColorSearch search(g, 3, 3, true, clock);
    if (search.run() != 1)
        throw std::logic_error("color_clawfree_cubic: no proper 3-coloring found");
    Coloring out{3, search.color()};
    return detail::verified(g, std::move(out), 2, "color_clawfree_cubic");
}

// ---------------------------------------------------------------------------
// Product colorings.
// ---------------------------------------------------------------------------

// Cartesian product: add the factors' 2-distance colorings mod the larger
// palette. Each fiber through a vertex is rainbow, so any color shows up at
// most twice (once per fiber) in a neighborhood.
inline Coloring color_cartesian(const Graph& g, const Graph& h, const Coloring& cg,
                                const Coloring& ch) {
    if (!is_2_distance_coloring(g, cg) || !is_2_distance_coloring(h, ch))
        throw std::invalid_argument("color_cartesian: factor colorings must be 2-distance");
    int k = std::max(cg.palette, ch.palette);
    Coloring out;
    out.palette = k;
    out.colors.resize(static_cast<std::size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.colors[static_cast<std::size_t>(i) * h.n + j] =
                (cg.colors[i] + ch.colors[j]) % k;
    return detail::verified(product(ProductKind::cartesian, g, h), std::move(out), 2,
                            "color_cartesian");
}

inline Coloring color_cartesian(const Graph& g, const Graph& h, const SolveBudget& budget = {}) {
    auto rg = chi2_exact(g, budget), rh = chi2_exact(h, budget);
    if (!rg.value || !rh.value)
        throw std::runtime_error("color_cartesian: 2-distance solve exceeded budget");
    return color_cartesian(g, h, rg.witness, rh.witness);
}

// Strong product: pair a 2-distance coloring of one factor with a 2-frugal
// coloring of the other and flatten. Direct product: an injective coloring
// of the first factor suffices since properness along it is not needed.
inline Coloring color_strong(const Graph& g, const Graph& h, const Coloring& cg,
                             const Coloring& ch) {
    if (!is_2_distance_coloring(g, cg))
        throw std::invalid_argument("color_strong: first coloring must be 2-distance");
    if (!is_t_frugal_coloring(h, ch, 2))
        throw std::invalid_argument("color_strong: second coloring must be 2-frugal");
    Coloring out;
    out.palette = cg.palette * ch.palette;
    out.colors.resize(static_cast<std::size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.colors[static_cast<std::size_t>(i) * h.n + j] =
                cg.colors[i] * ch.palette + ch.colors[j];
    return detail::verified(product(ProductKind::strong, g, h), std::move(out), 2,
                            "color_strong");
}

inline Coloring color_direct(const Graph& g, const Graph& h, const Coloring& cg,
                             const Coloring& ch) {
    if (!is_injective_coloring(g, cg))
        throw std::invalid_argument("color_direct: first coloring must be injective");
    if (!is_t_frugal_coloring(h, ch, 2))
        throw std::invalid_argument("color_direct: second coloring must be 2-frugal");
    Coloring out;
    out.palette = cg.palette * ch.palette;
    out.colors.resize(static_cast<std::size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.colors[static_cast<std::size_t>(i) * h.n + j] =
                cg.colors[i] * ch.palette + ch.colors[j];
    return detail::verified(product(ProductKind::direct, g, h), std::move(out), 2,
                            "color_direct");
}

namespace detail {

// Build the mirrored orientation by hand: distance-style coloring on h,
// frugal coloring on g, flattened onto the same (i,j) vertex numbering.
inline Coloring swapped_pair_coloring(const Graph& g, const Graph& h, const Coloring& dist_h,
                                      const Coloring& frugal_g, ProductKind kind,
                                      const char* what) {
    Coloring out;
    out.palette = dist_h.palette * frugal_g.palette;
    out.colors.resize(static_cast<std::size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.colors[static_cast<std::size_t>(i) * h.n + j] =
                dist_h.colors[j] * frugal_g.palette + frugal_g.colors[i];
    return verified(product(kind, g, h), std::move(out), 2, what);
}

}  // namespace detail

inline Coloring color_strong(const Graph& g, const Graph& h, const SolveBudget& budget = {}) {
    auto dg = chi2_exact(g, budget), dh = chi2_exact(h, budget);
    auto fg = chi_t_frugal_exact(g, 2, budget), fh = chi_t_frugal_exact(h, 2, budget);
    if (!dg.value || !dh.value || !fg.value || !fh.value)
        throw std::runtime_error("color_strong: factor solves exceeded budget");
    Coloring a = color_strong(g, h, dg.witness, fh.witness);
    Coloring b = detail::swapped_pair_coloring(g, h, dh.witness, fg.witness,
                                               ProductKind::strong, "color_strong");
    return b.palette < a.palette ? b : a;
}

inline Coloring color_direct(const Graph& g, const Graph& h, const SolveBudget& budget = {}) {
    auto ig = chi_injective_exact(g, budget), ih = chi_injective_exact(h, budget);
    auto fg = chi_t_frugal_exact(g, 2, budget), fh = chi_t_frugal_exact(h, 2, budget);
    if (!ig.value || !ih.value || !fg.value || !fh.value)
        throw std::runtime_error("color_direct: factor solves exceeded budget");
    Coloring a = color_direct(g, h, ig.witness, fh.witness);
    Coloring b = detail::swapped_pair_coloring(g, h, ih.witness, fg.witness,
                                               ProductKind::direct, "color_direct");
    return b.palette < a.palette ? b : a;
}

// Lexicographic product: each color class of g crossed with a single h-vertex
// forms a class; equivalently color (i,j) by (c_g(i), j).
inline Coloring color_lexicographic(const Graph& g, const Graph& h, const Coloring& cg) {
    if (!is_t_frugal_coloring(g, cg, 2))
        throw std::invalid_argument("color_lexicographic: coloring must be 2-frugal");
    Coloring out;
    out.palette = cg.palette * h.n;
    out.colors.resize(static_cast<std::size_t>(g.n) * h.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < h.n; ++j)
            out.colors[static_cast<std::size_t>(i) * h.n + j] = cg.colors[i] * h.n + j;
    return detail::verified(product(ProductKind::lexicographic, g, h), std::move(out), 2,
                            "color_lexicographic");
}

inline Coloring color_lexicographic(const Graph& g, const Graph& h,
                                    const SolveBudget& budget = {}) {
    auto fg = chi_t_frugal_exact(g, 2, budget);
    if (!fg.value)
        throw std::runtime_error("color_lexicographic: factor solve exceeded budget");
    return color_lexicographic(g, h, fg.witness);
}

// ---------------------------------------------------------------------------
// Tori and lattice power grids.
// ---------------------------------------------------------------------------

using TorusPattern = std::vector<std::array<int, 5>>;

namespace detail {

// Hand-tiled 4-color patterns for tori with a 5-cycle factor; rows advance
// along the other cycle. Entries are 0-based colors.
inline TorusPattern torus_pattern(char name) {
    switch (name) {
        case '2':  // the 3×5 torus
            return {{{1, 3, 0, 3, 2}}, {{2, 1, 2, 0, 3}}, {{3, 0, 1, 2, 0}}};
        case 'A':
            return {{{0, 1, 0, 1, 2}}, {{2, 3, 2, 3, 0}}, {{1, 0, 1, 0, 3}}, {{3, 2, 3, 2, 1}}};
        case 'B':
            return {{{0, 1, 0, 1, 2}}, {{2, 3, 2, 3, 0}}, {{1, 0, 1, 0, 3}},
                    {{0, 3, 2, 1, 2}}, {{1, 2, 3, 0, 3}}};
        case 'C':
            return {{{0, 1, 2, 3, 2}}, {{2, 3, 0, 1, 0}}, {{1, 0, 3, 2, 3}}, {{3, 2, 1, 0, 1}}};
        case 'D':
            return {{{0, 1, 2, 3, 2}}, {{2, 3, 0, 1, 0}}, {{1, 0, 3, 2, 3}},
                    {{3, 2, 1, 0, 1}}, {{2, 0, 3, 2, 0}}, {{1, 3, 0, 1, 3}}};
        case 'E':
            return {{{0, 1, 2, 3, 2}}, {{2, 3, 0, 1, 3}}, {{1, 0, 3, 2, 0}}, {{3, 2, 1, 0, 1}}};
        case 'F':
            return {{{0, 1, 2, 3, 2}}, {{2, 3, 0, 1, 3}}, {{1, 0, 3, 2, 0}}, {{3, 2, 1, 0, 1}},
                    {{2, 1, 0, 2, 3}}, {{1, 3, 2, 3, 0}}, {{3, 0, 1, 0, 1}}};
        default:
            throw std::logic_error("unknown torus pattern");
    }
}

// Stack pattern copies along the m direction for the m×5 torus.
inline TorusPattern torus_5_matrix(int m) {
    if (m == 3) return torus_pattern('2');
    int t = m / 4, j = m % 4;
    TorusPattern out;
    auto append = [&out](const TorusPattern& p) {
        out.insert(out.end(), p.begin(), p.end());
    };
    char body, tail;
    int copies;
    switch (j) {
        case 0: body = 'A'; tail = 0; copies = t; break;
        case 1: body = 'A'; tail = 'B'; copies = t - 1; break;
        case 2: body = 'C'; tail = 'D'; copies = t - 1; break;
        default: body = 'E'; tail = 'F'; copies = t - 1; break;
    }
    for (int i = 0; i < copies; ++i) append(torus_pattern(body));
    if (tail) append(torus_pattern(tail));
    return out;
}

}  // namespace detail

// Optimal 2-frugal coloring of the torus C_m □ C_n: 3 colors when both cycle
// lengths are multiples of 3 (diagonal residue coloring), otherwise 4 —
// either by adding 4-color 2-distance cycle colorings, or, when a factor is
// a 5-cycle, by the hand-tiled patterns.
inline Coloring color_torus(int m, int n, const SolveBudget& budget = {}) {
    if (m < 3 || n < 3) throw std::invalid_argument("color_torus: both cycles need length >= 3");
    Graph torus = make_torus(m, n);
    Coloring out;
    if (m % 3 == 0 && n % 3 == 0) {
        out.palette = 3;
        out.colors.resize(static_cast<std::size_t>(m) * n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                out.colors[static_cast<std::size_t>(i) * n + j] = (i + j) % 3;
        return detail::verified(std::move(torus), std::move(out), 2, "color_torus");
    }
    if (m != 5 && n != 5)
        return color_cartesian(make_cycle(m), make_cycle(n), budget);
    out.palette = 4;
    out.colors.resize(static_cast<std::size_t>(m) * n);
    if (n == 5) {
        auto mat = detail::torus_5_matrix(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < 5; ++j)
                out.colors[static_cast<std::size_t>(i) * 5 + j] = mat[i][j];
    } else {  // m == 5: reuse the n×5 tiling transposed
        auto mat = detail::torus_5_matrix(n);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < n; ++j)
                out.colors[static_cast<std::size_t>(i) * n + j] = mat[j][i];
    }
    return detail::verified(std::move(torus), std::move(out), 2, "color_torus");
}

// Cartesian power of paths: weight coordinate d by d+1 and reduce mod
// (dims+1). Restricting the infinite-lattice coloring to a finite box keeps
// it valid.
inline Coloring color_cartesian_power_grid(const std::vector<int>& sides) {
    if (sides.empty()) throw std::invalid_argument("need at least one side");
    for (int s : sides)
        if (s < 3) throw std::invalid_argument("sides must be >= 3");
    int dims = static_cast<int>(sides.size());
    int k = dims + 1;
    Graph grid = make_grid(sides, ProductKind::cartesian);
    Coloring out;
    out.palette = k;
    out.colors.resize(grid.n);
    for (int v = 0; v < grid.n; ++v) {
        int rest = v, sum = 0;
        for (int d = dims - 1; d >= 0; --d) {
            sum += (d + 1) * (rest % sides[d]);
            rest /= sides[d];
        }
        out.colors[v] = sum % k;
    }
    return detail::verified(std::move(grid), std::move(out), 2, "color_cartesian_power_grid");
}

// Strong power of a path: base-3 digit weighting mod (3^dims+1)/2, again a
// finite window of the lattice coloring.
inline Coloring color_strong_power_grid(int side, int dims) {
    if (side < 3) throw std::invalid_argument("side must be >= 3");
    if (dims < 1 || dims > 12) throw std::invalid_argument("dims out of range");
    long long mod = 1;
    for (int d = 0; d < dims; ++d) mod *= 3;
    mod = (mod + 1) / 2;
    Graph grid = make_grid(std::vector<int>(dims, side), ProductKind::strong);
    Coloring out;
    out.palette = static_cast<int>(mod);
    out.colors.resize(grid.n);
    for (int v = 0; v < grid.n; ++v) {
        int rest = v;
        long long sum = 0, w = 1;
        // Row-major ids keep the last coordinate in the low digits; each
        // dimension just needs its own power of 3, the order is immaterial.
        for (int d = dims - 1; d >= 0; --d) {
            sum += w * (rest % side);
            rest /= side;
            w *= 3;
        }
        out.colors[v] = static_cast<int>(sum % mod);
    }
    return detail::verified(std::move(grid), std::move(out), 2, "color_strong_power_grid");
}

// Signed base-3 value of a {−1,0,1} vector; bijects {−1,0,1}^n onto the
// integer interval [−(3^n−1)/2, (3^n−1)/2].
inline long long eta(const std::vector<int>& v) {
    long long sum = 0, w = 1;
    for (int x : v) {
        if (x < -1 || x > 1) throw std::invalid_argument("eta: entries must be in {-1,0,1}");
        sum += w * x;
        w *= 3;
    }
    return sum;
}

}  // namespace frugalis
