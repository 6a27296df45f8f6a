#pragma once
// Shared scaffolding for the suite: deterministic random graphs, tiny
// brute-force reference implementations that lean only on the verifiers,
// a few named fixture graphs, and a popen wrapper for the CLI tests.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frugalis/check.hpp"
#include "frugalis/generate.hpp"
#include "frugalis/graph.hpp"

namespace testutil {

using frugalis::Coloring;
using frugalis::Graph;
using frugalis::VertexSet;

// Deterministic G(n, p) with p in percent. Deliberately avoids
// uniform_int_distribution: its mapping is implementation-defined and seeded
// fixtures must not drift between standard libraries.
inline Graph random_graph(int n, int percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < percent) e.emplace_back(i, j);
    return frugalis::from_edges(n, e);
}

// Smallest palette the coloring verifier accepts, by odometer enumeration of
// all assignments. Exponential — callers keep n around six — but it shares no
// code with the solver it cross-checks.
template <typename Accept>
inline int naive_smallest_palette(const Graph& g, int kmax, Accept accept) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= kmax; ++k) {
        Coloring c;
        c.palette = k;
        c.colors.assign(g.n, 0);
        for (;;) {
            if (accept(g, c)) return k;
            int pos = 0;
            while (pos < g.n && ++c.colors[pos] == k) c.colors[pos++] = 0;
            if (pos == g.n) break;
        }
    }
    return -1;  // no palette within kmax worked; callers treat as a failure
}

inline int naive_chi_frugal(const Graph& g, int t, int kmax) {
    return naive_smallest_palette(g, kmax, [t](const Graph& gg, const Coloring& c) {
        return frugalis::is_t_frugal_coloring(gg, c, t);
    });
}

inline int naive_chi(const Graph& g, int kmax) {
    return naive_smallest_palette(g, kmax, [](const Graph& gg, const Coloring& c) {
        return frugalis::is_proper(gg, c);
    });
}

inline int naive_chi2(const Graph& g, int kmax) {
    return naive_smallest_palette(g, kmax, [](const Graph& gg, const Coloring& c) {
        return frugalis::is_2_distance_coloring(gg, c);
    });
}

inline int naive_chi_injective(const Graph& g, int kmax) {
    return naive_smallest_palette(g, kmax, [](const Graph& gg, const Coloring& c) {
        return frugalis::is_injective_coloring(gg, c);
    });
}

// Maximum t-frugal independent set by subset enumeration; fine up to n ~ 16.
inline int naive_alpha_frugal(const Graph& g, int t) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) s.members.push_back(v);
        if (static_cast<int>(s.members.size()) > best && frugalis::is_t_frugal_set(g, s, t))
            best = static_cast<int>(s.members.size());
    }
    return best;
}

// --- named cubic fixtures ---------------------------------------------------

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return frugalis::from_edges(10, e);
}

inline Graph prism() {
    return frugalis::product(frugalis::ProductKind::cartesian, frugalis::make_cycle(3),
                             frugalis::make_complete(2));
}

// Generalized Petersen GP(8,3).
inline Graph moebius_kantor() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i) {
        e.emplace_back(i, (i + 1) % 8);
        e.emplace_back(i, i + 8);
        e.emplace_back(8 + i, 8 + (i + 3) % 8);
    }
    return frugalis::from_edges(16, e);
}

// K_4 with every vertex expanded into a triangle: cubic, connected, claw-free
// (every vertex lies in a triangle), and not K_4 itself.
inline Graph truncated_k4() {
    auto id = [](int v, int u) { return 3 * v + (u > v ? u - 1 : u); };
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 4; ++v) {
        std::vector<int> corner;
        for (int u = 0; u < 4; ++u)
            if (u != v) corner.push_back(id(v, u));
        e.emplace_back(corner[0], corner[1]);
        e.emplace_back(corner[0], corner[2]);
        e.emplace_back(corner[1], corner[2]);
    }
    for (int v = 0; v < 4; ++v)
        for (int u = v + 1; u < 4; ++u) e.emplace_back(id(v, u), id(u, v));
    return frugalis::from_edges(12, e);
}

// --- CLI plumbing (only compiled where the binary path is injected) ---------

#ifdef FRUGALIS_CLI_PATH

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string scratch_file(const std::string& tag) {
    static int counter = 0;
    std::ostringstream name;
    name << "frugalis_test_" << tag << "_" << ++counter << ".tmp";
    return name.str();  // cwd of the test runner; ctest runs from the build tree
}

// Runs the CLI with `args`, feeding `stdin_data`, capturing stdout. stderr is
// dropped: tests assert on exit codes, not on diagnostic wording.
inline CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string in_file = scratch_file("stdin");
    {
        std::ofstream f(in_file, std::ios::binary);
        f << stdin_data;
    }
    std::string cmd = std::string(FRUGALIS_CLI_PATH) + " " + args + " < " + in_file +
                      " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    std::remove(in_file.c_str());
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

#endif  // FRUGALIS_CLI_PATH

}  // namespace testutil
