#include <catch2/catch_amalgamated.hpp>

#include "frugalis/exact.hpp"
#include "frugalis/generate.hpp"
#include "frugalis/tree_alpha.hpp"
#include "helpers.hpp"

using namespace frugalis;

TEST_CASE("tree alpha on hand-checked shapes", "[tree]") {
    // single vertex / single edge
    CHECK(alpha_t_frugal_tree(from_edges(1, {}), 2).value == 1);
    CHECK(alpha_t_frugal_tree(make_path(2), 2).value == 1);
    // stars: the center chokes at t like-colored leaves
    CHECK(alpha_t_frugal_tree(make_star(8), 2).value == 2);
    CHECK(alpha_t_frugal_tree(make_star(8), 3).value == 3);
    CHECK(alpha_t_frugal_tree(make_star(8), 1).value == 1);
    // paths
    CHECK(alpha_t_frugal_tree(make_path(5), 2).value == 3);
    CHECK(alpha_t_frugal_tree(make_path(7), 2).value == 4);
    // spider: center, t middles, t leaves
    CHECK(alpha_t_frugal_tree(make_spider(2), 2).value == 3);  // both leaves + center
}

TEST_CASE("tree alpha rejects non-trees", "[tree]") {
    CHECK_THROWS_AS(alpha_t_frugal_tree(make_cycle(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(alpha_t_frugal_tree(from_edges(4, {{0, 1}, {2, 3}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(alpha_t_frugal_tree(make_path(4), 0), std::invalid_argument);
}

TEST_CASE("tree alpha witness is a valid frugal set of the claimed size", "[tree]") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 15);
        Graph g = random_tree(n, seed + 42);
        for (int t : {1, 2, 3}) {
            auto r = alpha_t_frugal_tree(g, t);
            CHECK(static_cast<int>(r.witness.members.size()) == r.value);
            CHECK(is_t_frugal_set(g, r.witness, t));
        }
    }
}

TEST_CASE("tree alpha agrees with the exact solver on random trees", "[tree]") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>((seed * 7919 + 13) % 15);  // 2..16
        Graph g = random_tree(n, seed);
        for (int t : {1, 2, 3}) {
            auto dp = alpha_t_frugal_tree(g, t);
            auto ex = alpha_t_frugal_exact(g, t);
            REQUIRE(ex.value.has_value());
            INFO("seed " << seed << " n " << n << " t " << t);
            CHECK(dp.value == *ex.value);
        }
    }
}

TEST_CASE("rooting a tree gives parents and a children-first order", "[tree]") {
    Graph g = make_path(4);
    auto rt = root_at(g, 0);
    CHECK(rt.root == 0);
    CHECK(rt.parent[0] == 0);  // root maps to itself
    CHECK(rt.parent[1] == 0);
    CHECK(rt.parent[3] == 2);
    REQUIRE(rt.order.size() == 4);
    CHECK(rt.order.back() == 0);
    // every vertex appears before its parent
    std::vector<int> pos(4);
    for (int i = 0; i < 4; ++i) pos[rt.order[i]] = i;
    for (int v = 1; v < 4; ++v) CHECK(pos[v] < pos[rt.parent[v]]);
}
