#include <catch2/catch_amalgamated.hpp>

#include "frugalis/generate.hpp"
#include "frugalis/graph.hpp"
#include "helpers.hpp"

using namespace frugalis;

TEST_CASE("basic families have the right shape", "[generate]") {
    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_path(6).edge_count() == 5);
    CHECK(make_cycle(6).edge_count() == 6);
    CHECK(regular_degree(make_cycle(6)) == std::optional<int>(2));
    CHECK(make_complete(7).edge_count() == 21);
    CHECK(make_star(9).edge_count() == 8);
    CHECK(make_star(9).degree(0) == 8);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);

    Graph k33 = make_complete_multipartite({3, 3});
    CHECK(k33.edge_count() == 9);
    CHECK(regular_degree(k33) == std::optional<int>(3));
    CHECK(is_triangle_free(k33));

    Graph q3 = make_hypercube(3);
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(regular_degree(q3) == std::optional<int>(3));
    CHECK(make_hypercube(0).n == 1);
}

TEST_CASE("grids are iterated path products", "[generate]") {
    Graph g = make_grid({3, 4}, ProductKind::cartesian);
    CHECK(g.n == 12);
    CHECK(g.edge_count() == 3 * 3 + 4 * 2);  // 17
    Graph s = make_grid({3, 3}, ProductKind::strong);
    CHECK(s.n == 9);
    CHECK(s.max_degree() == 8);  // the center touches everything
    CHECK_THROWS_AS(make_grid({3}, ProductKind::direct), std::invalid_argument);
    CHECK_THROWS_AS(make_grid({}, ProductKind::cartesian), std::invalid_argument);
}

TEST_CASE("torus is the cartesian product of two cycles", "[generate]") {
    Graph t = make_torus(3, 4);
    CHECK(t.n == 12);
    CHECK(regular_degree(t) == std::optional<int>(4));
    CHECK(t.edge_count() == 24);
    CHECK_THROWS_AS(make_torus(2, 5), std::invalid_argument);
}

TEST_CASE("spider and the two eight-vertex fixtures", "[generate]") {
    Graph sp = make_spider(3);
    CHECK(sp.n == 7);
    CHECK(sp.degree(0) == 3);
    auto ps = pendant_stats(sp);
    CHECK(ps.p == 3);
    CHECK(ps.s == 3);
    CHECK(ps.s_prime == 0);

    Graph tw = q3_twisted();
    CHECK(tw.n == 8);
    CHECK(regular_degree(tw) == std::optional<int>(3));
    CHECK(is_connected(tw));

    // the twist breaks bipartiteness: a 2-coloring BFS must hit a conflict
    auto bipartite = [](const Graph& g) {
        std::vector<int> side(g.n, -1);
        std::vector<int> queue{0};
        side[0] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : g.adj[v]) {
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
        return true;
    };
    CHECK_FALSE(bipartite(tw));
    CHECK(bipartite(make_hypercube(3)));

    Graph wagner = c8_antipodal_chords();
    CHECK(wagner.n == 8);
    CHECK(regular_degree(wagner) == std::optional<int>(3));
    CHECK_FALSE(bipartite(wagner));
}

TEST_CASE("random trees are trees and seeds are reproducible", "[generate]") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 1 + static_cast<int>(seed % 18);
        Graph g = random_tree(n, seed);
        CHECK(g.n == n);
        CHECK(is_tree(g));
    }
    CHECK(random_tree(12, 7).adj == random_tree(12, 7).adj);
    CHECK(random_tree(12, 7).adj != random_tree(12, 8).adj);
}

TEST_CASE("random cubic graphs are simple connected cubic", "[generate]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 4 + 2 * static_cast<int>(seed % 7);  // 4..16
        Graph g = random_cubic(n, seed);
        CHECK(g.n == n);
        CHECK(regular_degree(g) == std::optional<int>(3));
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(random_cubic(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cubic(2, 1), std::invalid_argument);
    CHECK(random_cubic(10, 3).adj == random_cubic(10, 3).adj);
}

TEST_CASE("random block graphs pass the recognizer", "[generate]") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = random_block(5, 4, seed);
        CHECK(is_block_graph(g));
        CHECK(is_connected(g));
        CHECK(g.n <= 1 + 5 * 3);
    }
    CHECK(random_block(0, 3, 1).n == 1);
}

TEST_CASE("psi fixture is regular with balanced parts", "[generate]") {
    Graph g = psi_multipartite(2, 3);
    CHECK(g.n == 6);
    CHECK(regular_degree(g) == std::optional<int>(4));
    Graph h = psi_multipartite(3, 2);  // K_{3,3}
    CHECK(h.adj == make_complete_multipartite({3, 3}).adj);
}

TEST_CASE("family dispatcher routes names and validates arity", "[generate]") {
    CHECK(generate({"cycle", {5}}).adj == make_cycle(5).adj);
    CHECK(generate({"torus", {3, 4}}).adj == make_torus(3, 4).adj);
    CHECK(generate({"random_tree", {9, 4}}).adj == random_tree(9, 4).adj);
    CHECK(generate({"grid_strong", {3, 3}}).adj == make_grid({3, 3}, ProductKind::strong).adj);
    CHECK(generate({"spider", {4}}).n == 9);
    CHECK(generate({"q3_twisted", {}}).n == 8);
    CHECK_THROWS_AS(generate({"cycle", {}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"cycle", {4, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"no_such_family", {1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"ng_exceptional", {99}}), std::invalid_argument);
}
