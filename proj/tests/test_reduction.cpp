#include <catch2/catch_amalgamated.hpp>

#include "frugalis/exact.hpp"
#include "frugalis/reduction.hpp"
#include "helpers.hpp"

using namespace frugalis;

TEST_CASE("cover brute force on hand instances", "[reduction]") {
    // exact partition exists
    X3CInstance yes{1, {{0, 1, 2}}};
    CHECK(x3c_brute_force(yes).exists);

    X3CInstance yes2{2, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}}};
    auto r = x3c_brute_force(yes2);
    CHECK(r.exists);
    REQUIRE(r.chosen.size() == 2);

    // every triple misses element 5
    X3CInstance no{2, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}}};
    CHECK_FALSE(x3c_brute_force(no).exists);

    // overlapping triples cannot partition
    X3CInstance no2{2, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}};
    CHECK_FALSE(x3c_brute_force(no2).exists);
}

TEST_CASE("instance validation", "[reduction]") {
    CHECK_THROWS_AS(x3c_brute_force(X3CInstance{0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(x3c_brute_force(X3CInstance{1, {{0, 1, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(x3c_brute_force(X3CInstance{1, {{0, 0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(x3c_to_frugal(X3CInstance{1, {{0, 1, 2}}}, 1), std::invalid_argument);
}

TEST_CASE("gadget shape matches the counting formulas", "[reduction]") {
    X3CInstance inst{2, {{0, 1, 2}, {3, 4, 5}, {0, 3, 5}, {1, 2, 4}}};
    int p = static_cast<int>(inst.triples.size());
    int q = inst.q;
    for (int t : {2, 3, 4}) {
        auto red = x3c_to_frugal(inst, t);
        INFO("t = " << t);
        CHECK(red.graph.n == 3 * p + 3 * q * t);
        CHECK(red.graph.edge_count() == 5 * p + 3 * q * (t - 1));
        CHECK(red.k == p + (3 * t - 2) * q);
        REQUIRE(static_cast<int>(red.vertex_roles.size()) == red.graph.n);
        // path vertices come first, three per triple
        CHECK(red.vertex_roles[0] == "a_0");
        CHECK(red.vertex_roles[1] == "b_0");
        CHECK(red.vertex_roles[2] == "c_0");
        CHECK(red.vertex_roles[3 * p] == "x_center_0");
        // each element's star center connects to the c-vertex of each triple
        // containing it
        for (int e = 0; e < 3 * q; ++e) {
            int center = 3 * p + e * t;
            int want = 0;
            for (int j = 0; j < p; ++j) {
                bool in = false;
                for (int x : inst.triples[j])
                    if (x == e) in = true;
                if (in) {
                    ++want;
                    CHECK(red.graph.has_edge(center, 3 * j + 2));
                }
            }
            CHECK(red.graph.degree(center) == (t - 1) + want);
        }
    }
}

TEST_CASE("threshold equivalence on a tiny yes/no pair", "[reduction]") {
    X3CInstance yes{1, {{0, 1, 2}}};
    X3CInstance no{2, {{0, 1, 2}, {0, 3, 4}}};  // element 5 uncovered
    for (int t : {2, 3}) {
        auto ry = x3c_to_frugal(yes, t);
        auto ay = alpha_t_frugal_exact(ry.graph, t);
        REQUIRE(ay.value.has_value());
        CHECK(x3c_brute_force(yes).exists == (*ay.value >= ry.k));
        CHECK(x3c_brute_force(yes).exists);

        auto rn = x3c_to_frugal(no, t);
        auto an = alpha_t_frugal_exact(rn.graph, t);
        REQUIRE(an.value.has_value());
        INFO("t = " << t << " alpha " << *an.value << " k " << rn.k);
        CHECK(x3c_brute_force(no).exists == (*an.value >= rn.k));
        CHECK_FALSE(x3c_brute_force(no).exists);
    }
}
