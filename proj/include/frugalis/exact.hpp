#pragma once

// Exact solvers: frugal chromatic number, frugal independence number,
// chromatic number, square chromatic number, injective chromatic number.
//
// These are the ground truth the rest of the library is validated against,
// so they favor certainty over speed: chi searches k = lb, lb+1, ... and each
// "no" answer is a fully exhausted search tree. Budgets turn looming
// non-termination into an explicit "unknown" outcome (empty optional), never
// a wrong number. Search is deterministic: fixed vertex order, no clocks in
// branching decisions.

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frugalis/check.hpp"
#include "frugalis/graph.hpp"

namespace frugalis {

struct SolveBudget {
    long long node_limit = 50'000'000;
    std::optional<double> time_limit_seconds{};  // unset = no wall clock cap
};

struct ChiResult {
    std::optional<int> value;  // empty when the budget ran out
    Coloring witness;          // meaningful only when value is set
    long long nodes = 0;
};

struct AlphaResult {
    std::optional<int> value;
    VertexSet witness;
    long long nodes = 0;
};

namespace detail {

inline void require_budget(const SolveBudget& budget) {
    if (budget.node_limit <= 0)
        throw std::invalid_argument("node limit must be positive");
    if (budget.time_limit_seconds && *budget.time_limit_seconds <= 0)
        throw std::invalid_argument("time limit must be positive");
}

struct BudgetClock {
    long long node_limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    long long nodes = 0;
    bool exhausted = false;

    explicit BudgetClock(const SolveBudget& b) : node_limit(b.node_limit) {
        if (b.time_limit_seconds)
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*b.time_limit_seconds));
    }

    // Returns false once the budget is spent. Time is polled sparsely.
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > node_limit ||
            (deadline && (nodes & 4095) == 0 && std::chrono::steady_clock::now() > *deadline))
            exhausted = true;
        return !exhausted;
    }
};

// Backtracking k-colorability core shared by the frugal and injective
// solvers. Constraints: every vertex keeps each color to at most t of its
// neighbors; when `proper` is set, adjacent vertices also differ. Vertices
// are colored densest-first (reverse degeneracy removal order) and the first
// use of each new color index is forced ascending, which kills color
// permutation symmetry.
class ColorSearch {
public:
    ColorSearch(const Graph& g, int t, int k, bool proper, BudgetClock& clock)
        : g_(g), t_(t), k_(k), proper_(proper), clock_(clock),
          color_(g.n, -1), cnt_(static_cast<std::size_t>(g.n) * k, 0) {
        auto removal = degeneracy_removal_order(g);
        order_.assign(removal.rbegin(), removal.rend());
    }

    // 1 = colorable (color() filled in), 0 = proven impossible, -1 = budget.
    int run() { return dfs(0, -1); }

    const std::vector<int>& color() const { return color_; }

private:
    int& cnt(int v, int c) { return cnt_[static_cast<std::size_t>(v) * k_ + c]; }

    bool legal(int u, int c) {
        for (int w : g_.adj[u]) {
            if (proper_ && color_[w] == c) return false;
            if (cnt(w, c) >= t_) return false;
        }
        return true;
    }

    int dfs(int pos, int used_max) {
        if (pos == g_.n) return 1;
        if (!clock_.tick()) return -1;
        int u = order_[pos];
        int cmax = std::min(used_max + 1, k_ - 1);
        for (int c = 0; c <= cmax; ++c) {
            if (!legal(u, c)) continue;
            color_[u] = c;
            for (int w : g_.adj[u]) ++cnt(w, c);
            int next_used = std::max(used_max, c);
            bool viable = true;
            if (next_used == k_ - 1) {
                // Palette saturated: fresh colors no longer exist, so empty
                // domains become possible. On the saturating assignment every
                // uncolored vertex is checked once; afterwards only vertices
                // this assignment could have constrained.
                if (used_max < k_ - 1) {
                    for (int x = 0; x < g_.n && viable; ++x)
                        if (color_[x] == -1) viable = has_candidate(x);
                } else {
                    for (int w : g_.adj[u]) {
                        if (color_[w] == -1 && !has_candidate(w)) { viable = false; break; }
                        if (cnt(w, c) == t_) {
                            for (int x : g_.adj[w])
                                if (color_[x] == -1 && !has_candidate(x)) { viable = false; break; }
                            if (!viable) break;
                        }
                    }
                }
            }
            int r = viable ? dfs(pos + 1, next_used) : 0;
            if (r == 1) return 1;  // success: leave the assignment in place for color()
            for (int w : g_.adj[u]) --cnt(w, c);
            color_[u] = -1;
            if (r == -1) return -1;
        }
        return 0;
    }

    bool has_candidate(int x) {
        for (int c = 0; c < k_; ++c)
            if (legal(x, c)) return true;
        return false;
    }

    const Graph& g_;
    int t_, k_;
    bool proper_;
    BudgetClock& clock_;
    std::vector<int> color_;
    std::vector<int> cnt_;
    std::vector<int> order_;
};

inline ChiResult ascending_k_search(const Graph& g, int t, bool proper, int lb, int ub,
                                    const SolveBudget& budget) {
    BudgetClock clock(budget);
    ChiResult out;
    for (int k = std::max(lb, 1); k <= ub; ++k) {
        ColorSearch search(g, t, k, proper, clock);
        int r = search.run();
        if (r == 1) {
            out.value = k;
            out.witness.palette = k;
            out.witness.colors = search.color();
            break;
        }
        if (r == -1) break;  // unknown; out.value stays empty
    }
    out.nodes = clock.nodes;
    return out;
}

// Include/exclude branch and bound for maximum t-frugal independent sets.
// cnt[v] tracks |N(v) ∩ S|; a vertex stays "open" while it could still join
// (no neighbor in S, every neighbor's counter below t). Both conditions are
// monotone along a branch, so openness is maintained with an undo trail and
// the count of open undecided vertices is a valid residual bound.
class AlphaSearch {
public:
    AlphaSearch(const Graph& g, int t, BudgetClock& clock)
        : g_(g), t_(t), clock_(clock), cnt_(g.n, 0), decided_(g.n, 0), open_(g.n, 1),
          order_(degeneracy_removal_order(g)), open_count_(g.n) {}

    void run() { dfs(0); }

    int best() const { return best_; }
    const std::vector<int>& best_set() const { return best_set_; }

private:
    void kill(int v, std::vector<int>& trail) {
        if (!decided_[v] && open_[v]) {
            open_[v] = 0;
            --open_count_;
            trail.push_back(v);
        }
    }

    void dfs(int pos) {
        if (!clock_.tick()) return;
        if (pos == g_.n) {
            if (static_cast<int>(cur_.size()) > best_) {
                best_ = static_cast<int>(cur_.size());
                best_set_ = cur_;
            }
            return;
        }
        if (static_cast<int>(cur_.size()) + open_count_ <= best_) return;
        int u = order_[pos];
        if (open_[u]) {
            // Include u first: good sets early make the bound bite sooner.
            decided_[u] = 1;
            open_[u] = 0;
            --open_count_;
            std::vector<int> trail;
            for (int w : g_.adj[u]) {
                ++cnt_[w];
                if (cnt_[w] == 1) kill(w, trail);
                if (cnt_[w] == t_)
                    for (int x : g_.adj[w]) kill(x, trail);
            }
            cur_.push_back(u);
            dfs(pos + 1);
            cur_.pop_back();
            for (int w : g_.adj[u]) --cnt_[w];
            for (int v : trail) { open_[v] = 1; ++open_count_; }
            if (clock_.exhausted) { decided_[u] = 0; open_[u] = 1; ++open_count_; return; }
            // Exclude u: it just leaves the pool.
            dfs(pos + 1);
            decided_[u] = 0;
            open_[u] = 1;
            ++open_count_;
        } else {
            decided_[u] = 1;
            dfs(pos + 1);
            decided_[u] = 0;
        }
    }

    const Graph& g_;
    int t_;
    BudgetClock& clock_;
    std::vector<int> cnt_;
    std::vector<char> decided_, open_;
    std::vector<int> order_;
    int open_count_;
    int best_ = 0;
    std::vector<int> best_set_, cur_;
};

}  // namespace detail

inline ChiResult chi_t_frugal_exact(const Graph& g, int t,
                                    const SolveBudget& budget = {}) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    detail::require_budget(budget);
    if (g.n == 0) return {0, Coloring{}, 0};
    int delta = g.max_degree();
    int lb = std::max(clique_number(g), delta / t + (delta % t != 0) + 1);
    int ub = std::min(g.n, 1 + delta * (1 + (delta >= 1 ? (delta - 1) / t : 0)));
    return detail::ascending_k_search(g, t, /*proper=*/true, lb, ub, budget);
}

inline ChiResult chi_exact(const Graph& g, const SolveBudget& budget = {}) {
    // Properness is t-frugality with t >= Δ: the counters never bind.
    return chi_t_frugal_exact(g, std::max(1, g.max_degree()), budget);
}

inline ChiResult chi2_exact(const Graph& g, const SolveBudget& budget = {}) {
    return chi_exact(square(g), budget);
}

inline ChiResult chi_injective_exact(const Graph& g, const SolveBudget& budget = {}) {
    detail::require_budget(budget);
    if (g.n == 0) return {0, Coloring{}, 0};
    int lb = std::max(1, g.max_degree());  // a rainbow neighborhood needs Δ colors
    return detail::ascending_k_search(g, /*t=*/1, /*proper=*/false, lb, g.n, budget);
}

inline AlphaResult alpha_t_frugal_exact(const Graph& g, int t,
                                        const SolveBudget& budget = {}) {
    if (t < 1) throw std::invalid_argument("frugality parameter must be >= 1");
    detail::require_budget(budget);
    AlphaResult out;
    if (g.n == 0) { out.value = 0; return out; }
    detail::BudgetClock clock(budget);
    detail::AlphaSearch search(g, t, clock);
    search.run();
    out.nodes = clock.nodes;
    if (!clock.exhausted) {
        out.value = search.best();
        out.witness.members = search.best_set();
        std::sort(out.witness.members.begin(), out.witness.members.end());
    }
    return out;
}

}  // namespace frugalis
