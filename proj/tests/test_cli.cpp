#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "frugalis/check.hpp"
#include "frugalis/generate.hpp"
#include "frugalis/graph.hpp"
#include "frugalis/graph6.hpp"
#include "frugalis/json_io.hpp"
#include "helpers.hpp"

using namespace frugalis;
using testutil::run_cli;
using testutil::scratch_file;
using testutil::slurp;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("cli gen emits graph6", "[cli]") {
    auto c5 = run_cli("gen cycle 5");
    CHECK(c5.exit_code == 0);
    CHECK(c5.out == "Dhc\n");

    CHECK(run_cli("gen complete 3").out == "Bw\n");
    CHECK(run_cli("gen path 2").out == "A_\n");

    // -o redirects the line to a file and leaves stdout empty
    std::string out_file = scratch_file("gen");
    auto r = run_cli("gen star 6 -o " + out_file);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_file) == write_graph6(make_star(6)) + "\n");
    std::remove(out_file.c_str());

    // random families append the --seed value and are reproducible
    auto t1 = run_cli("gen random_tree 8 --seed 5");
    auto t2 = run_cli("gen random_tree 8 --seed 5");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t2.out);
    CHECK(parse_graph6(split_lines(t1.out).at(0)).n == 8);
}

TEST_CASE("cli chi reads stdin and honors -t after the subcommand", "[cli]") {
    auto r = run_cli("chi", "Dhc\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    // -t placed after the subcommand name must still reach the global option
    CHECK(run_cli("chi -t 1", "Dhc\n").out == "5\n");
    CHECK(run_cli("chi -t 3", "Dhc\n").out == "3\n");

    // gen | chi pipeline, spelled as two invocations
    auto k6 = run_cli("gen complete 6");
    CHECK(run_cli("chi", k6.out).out == "6\n");
}

TEST_CASE("cli alpha exact and tree methods", "[cli]") {
    CHECK(run_cli("alpha", "Dhc\n").out == "2\n");

    auto p7 = run_cli("gen path 7");
    auto r = run_cli("alpha --method tree --witness", p7.out);
    REQUIRE(r.exit_code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "4");
    auto j = nlohmann::json::parse(lines[1]);
    auto members = j.at("members").get<std::vector<int>>();
    CHECK(members.size() == 4);
    CHECK(is_t_frugal_set(parse_graph6(split_lines(p7.out).at(0)),
                          VertexSet{members}, 2));

    // the tree method refuses non-trees
    CHECK(run_cli("alpha --method tree", "Dhc\n").exit_code == 2);
}

TEST_CASE("cli color exact round-trips through verify", "[cli]") {
    std::string col_file = scratch_file("coloring");
    auto r = run_cli("color --method exact -o " + col_file, "Dhc\n");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());

    auto j = nlohmann::json::parse(slurp(col_file));
    CHECK(j.at("palette").get<int>() == 3);
    CHECK(j.at("colors").size() == 5);

    CHECK(run_cli("verify --coloring " + col_file, "Dhc\n").exit_code == 0);
    // no 3-palette coloring of this cycle can be 1-frugal
    CHECK(run_cli("verify -t 1 --coloring " + col_file, "Dhc\n").exit_code == 1);
    std::remove(col_file.c_str());

    // an improper all-zero assignment is rejected with exit 1
    std::string bad_file = scratch_file("badcol");
    {
        std::ofstream f(bad_file);
        f << R"({"palette":1,"colors":[0,0,0,0,0]})";
    }
    CHECK(run_cli("verify --coloring " + bad_file, "Dhc\n").exit_code == 1);
    std::remove(bad_file.c_str());
}

TEST_CASE("cli color auto picks a working method", "[cli]") {
    // a star is a block graph; the tight palette for this one is 4
    auto star = run_cli("gen star 6");
    auto r = run_cli("color", star.out);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("palette").get<int>() == 4);

    // cubic input routes through the bounded-degree method (palette <= 5)
    Graph pet = testutil::petersen();
    auto rp = run_cli("color", write_graph6(pet) + "\n");
    REQUIRE(rp.exit_code == 0);
    auto jp = nlohmann::json::parse(rp.out);
    CHECK(jp.at("palette").get<int>() <= 5);
    CHECK(is_t_frugal_coloring(pet, coloring_from_json(jp), 2));

    // explicit method that does not fit the input is a usage error
    CHECK(run_cli("color --method block", "Dhc\n").exit_code == 2);
}

TEST_CASE("cli color torus and grid detectors", "[cli]") {
    auto t33 = run_cli("gen torus 3 3");
    auto r33 = run_cli("color --method torus", t33.out);
    REQUIRE(r33.exit_code == 0);
    CHECK(nlohmann::json::parse(r33.out).at("palette").get<int>() == 3);

    auto t45 = run_cli("gen torus 4 5");
    auto r45 = run_cli("color --method torus", t45.out);
    REQUIRE(r45.exit_code == 0);
    auto j45 = nlohmann::json::parse(r45.out);
    CHECK(j45.at("palette").get<int>() == 4);
    CHECK(is_t_frugal_coloring(make_torus(4, 5), coloring_from_json(j45), 2));

    auto g34 = run_cli("gen grid_cartesian 3 4");
    auto rg = run_cli("color --method grid", g34.out);
    REQUIRE(rg.exit_code == 0);
    auto jg = nlohmann::json::parse(rg.out);
    CHECK(jg.at("palette").get<int>() == 3);
    CHECK(is_t_frugal_coloring(make_grid({3, 4}, ProductKind::cartesian),
                               coloring_from_json(jg), 2));

    // a plain cycle is not a torus in canonical order
    CHECK(run_cli("color --method torus", "Dhc\n").exit_code == 2);
}

TEST_CASE("cli color product methods read two graph6 lines", "[cli]") {
    Graph g = make_cycle(5), h = make_complete(3);
    std::string both = write_graph6(g) + "\n" + write_graph6(h) + "\n";

    auto r = run_cli("color --method cartesian", both);
    REQUIRE(r.exit_code == 0);
    Graph prod = product(ProductKind::cartesian, g, h);
    CHECK(is_t_frugal_coloring(prod, coloring_from_json(nlohmann::json::parse(r.out)), 2));

    auto rl = run_cli("color --method lex", both);
    REQUIRE(rl.exit_code == 0);
    Graph lex = product(ProductKind::lexicographic, g, h);
    CHECK(is_t_frugal_coloring(lex, coloring_from_json(nlohmann::json::parse(rl.out)), 2));

    // one line is not enough for a product
    CHECK(run_cli("color --method cartesian", "Dhc\n").exit_code == 2);
}

TEST_CASE("cli bounds emits a JSON array", "[cli]") {
    auto star = run_cli("gen star 5");
    auto r = run_cli("bounds", star.out);
    REQUIRE(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(!arr.empty());
    for (const auto& e : arr) {
        CHECK(e.contains("name"));
        CHECK(e.contains("kind"));
        CHECK(e.contains("target"));
        CHECK(e.contains("applicable"));
    }
}

TEST_CASE("cli ng reports the complement sum", "[cli]") {
    auto r = run_cli("ng", "Dhc\n");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("chi_g").get<int>() == 3);
    CHECK(j.at("chi_complement").get<int>() == 3);
    CHECK(j.at("sum").get<int>() == 6);
    CHECK(!j.at("is_exceptional").get<bool>());

    // starving the solver turns the report into a hard error (exit 3)
    CHECK(run_cli("--budget-nodes 1 ng", "Dhc\n").exit_code == 3);
}

TEST_CASE("cli reduce-x3c writes gadget, sidecar, and threshold", "[cli]") {
    std::string inst_file = scratch_file("x3c");
    std::string out_file = scratch_file("gadget");
    {
        std::ofstream f(inst_file);
        f << R"({"q":1,"triples":[[0,1,2]]})";
    }
    auto r = run_cli("reduce-x3c " + inst_file + " -o " + out_file);
    REQUIRE(r.exit_code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 1);
    int k = std::stoi(lines[0]);

    Graph gadget = parse_graph6(split_lines(slurp(out_file)).at(0));
    auto sidecar = nlohmann::json::parse(slurp(out_file + ".roles.json"));
    CHECK(sidecar.at("k").get<int>() == k);
    auto roles = sidecar.at("roles").get<std::vector<std::string>>();
    CHECK(static_cast<int>(roles.size()) == gadget.n);
    CHECK(roles.at(0) == "a_0");

    std::remove(inst_file.c_str());
    std::remove(out_file.c_str());
    std::remove((out_file + ".roles.json").c_str());

    // invalid instance (q = 0) is a usage error
    std::string bad_inst = scratch_file("x3cbad");
    {
        std::ofstream f(bad_inst);
        f << R"({"q":0,"triples":[]})";
    }
    CHECK(run_cli("reduce-x3c " + bad_inst + " -o " + out_file).exit_code == 2);
    std::remove(bad_inst.c_str());
}

TEST_CASE("cli batch output is deterministic across job counts", "[cli]") {
    std::string input = "Dhc\nBw\nA_\n";
    auto one = run_cli("batch --ops chi,alpha --jobs 1", input);
    auto four = run_cli("batch --ops chi,alpha --jobs 4", input);
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);

    auto lines = split_lines(one.out);
    REQUIRE(lines.size() == 3);
    std::vector<int> want_chi{3, 3, 2}, want_alpha{2, 1, 1};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto j = nlohmann::json::parse(lines[i]);
        CHECK(j.at("line").get<std::size_t>() == i + 1);
        CHECK(j.at("results").at("chi").get<int>() == want_chi[i]);
        CHECK(j.at("results").at("alpha").get<int>() == want_alpha[i]);
    }

    // a malformed middle line yields an error record, not a dead run
    auto mixed = run_cli("batch --ops chi", "Dhc\nBx\nBw\n");
    REQUIRE(mixed.exit_code == 0);
    auto mixed_lines = split_lines(mixed.out);
    REQUIRE(mixed_lines.size() == 3);
    CHECK(!nlohmann::json::parse(mixed_lines[0]).contains("error"));
    CHECK(nlohmann::json::parse(mixed_lines[1]).contains("error"));
    CHECK(nlohmann::json::parse(mixed_lines[2]).at("results").at("chi").get<int>() == 3);

    CHECK(run_cli("batch --ops bogus", "Dhc\n").exit_code == 2);
    CHECK(run_cli("batch --ops ,", "Dhc\n").exit_code == 2);
}

TEST_CASE("cli strict budget exhaustion exits 3", "[cli]") {
    auto lax = run_cli("--budget-nodes 1 chi", "Dhc\n");
    CHECK(lax.exit_code == 0);
    CHECK(lax.out == "unknown\n");

    auto strict = run_cli("--strict --budget-nodes 1 chi", "Dhc\n");
    CHECK(strict.exit_code == 3);
    CHECK(strict.out == "unknown\n");

    // the environment fallback applies when no flag is given...
    setenv("FRUGALIS_BUDGET_NODES", "1", 1);
    CHECK(run_cli("--strict chi", "Dhc\n").exit_code == 3);
    // ...and the flag overrides it
    auto fl = run_cli("--budget-nodes 100000000 chi", "Dhc\n");
    CHECK(fl.exit_code == 0);
    CHECK(fl.out == "3\n");
    setenv("FRUGALIS_BUDGET_NODES", "junk", 1);
    CHECK(run_cli("chi", "Dhc\n").exit_code == 2);
    unsetenv("FRUGALIS_BUDGET_NODES");
}

TEST_CASE("cli usage errors exit 2", "[cli]") {
    CHECK(run_cli("").exit_code == 2);                    // no subcommand
    CHECK(run_cli("gen nosuchfamily 3").exit_code == 2);  // unknown family
    CHECK(run_cli("gen cycle").exit_code == 2);           // missing parameter
    CHECK(run_cli("chi", "Bx\n").exit_code == 2);         // bad graph6 padding
    CHECK(run_cli("chi", "").exit_code == 2);             // empty input
    CHECK(run_cli("chi -t 0", "Dhc\n").exit_code == 2);   // nonsense frugality
}
