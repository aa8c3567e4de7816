#include <sstream>

#include "battery.hpp"
#include "doctest.h"
#include "pspkit/errors.hpp"
#include "pspkit/psp_io.hpp"

using namespace pspkit;

namespace {

const char* kMinimal = "psp 1\n2 1 1 1\n0 1\n1 0 1\n";

PspInstance path_graph_instance(int n, std::vector<SimplePath> paths, int k = 1) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return PspInstance{Graph(n, edges), std::move(paths), k};
}

int parse_error_line(const std::string& text) {
    try {
        parse_psp_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("graph stores edges canonically and rejects bad input") {
    Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
    CHECK(g.edge(0) == Edge(0, 1));
    CHECK(g.edge(0).u == 0);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.max_degree() == 2);
    CHECK(g.feedback_edge_number() == 0);
    CHECK(g.is_forest());

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);

    Graph cyc(4, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(cyc.component_count() == 2);
    CHECK(cyc.feedback_edge_number() == 1);
}

TEST_CASE("parse minimal instance") {
    const PspInstance inst = parse_psp_string(kMinimal);
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.graph.edge_count() == 1);
    REQUIRE(inst.paths.size() == 1);
    CHECK(inst.paths[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(inst.k == 1);
    CHECK(serialize_psp(inst) == kMinimal);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("psp 1\n2 1 1 1\n0 1\n1 0 0\n") == 4);
    CHECK_THROWS_WITH(parse_psp_string("psp 1\n2 1 1 1\n0 1\n1 0 0\n"), doctest::Contains("self-loop step"));
    CHECK(parse_error_line("psp 2\n") == 1);
    CHECK(parse_error_line("psp 1\n2 1 1 1\n0 5\n1 0 1\n") == 3);
    CHECK(parse_error_line("psp 1\n3 1 1 1\n0 1\n2 0 1 2\n") == 4);
    CHECK_THROWS_WITH(parse_psp_string("psp 1\n3 1 1 1\n0 1\n2 0 1 2\n"), doctest::Contains("not an edge"));
    CHECK_THROWS_WITH(parse_psp_string("psp 1\n3 2 1 1\n0 1\n1 2\n3 0 1 2 1\n"), doctest::Contains("repeats vertex"));
    CHECK(parse_error_line("psp 1\n2 1 2 1\n0 1\n1 0 1\n") == 5);
    CHECK(parse_error_line("psp 1\n2 1 1 1\n0 1\n1 0 1\n0 1\n") == 5);
}

TEST_CASE("comments and blank lines are ignored") {
    const PspInstance inst = parse_psp_string("# header\npsp 1\n\n2 1 1 1\n# edges\n0 1\n1 1 0\n");
    CHECK(inst.paths[0].vertices == std::vector<Vertex>{1, 0});
}

TEST_CASE("serialization is deterministic and round-trips") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const PspInstance inst = testing::fvs_case(seed);
        const std::string text = serialize_psp(inst);
        const PspInstance back = parse_psp_string(text);
        CHECK(back == inst);
        CHECK(serialize_psp(back) == text);
        CHECK(instance_digest(back) == instance_digest(inst));
    }
    const PspInstance empty{Graph(3, {{0, 1}}), {}, 0};
    CHECK(serialize_psp(empty) == "psp 1\n3 1 0 0\n0 1\n");
}

TEST_CASE("validate_psp reports path problems") {
    PspInstance inst = path_graph_instance(4, {SimplePath{{0, 1, 2}}});
    CHECK(validate_psp(inst).empty());

    inst.paths.push_back(SimplePath{{0, 1, 0}});
    inst.paths.push_back(SimplePath{{0, 2}});
    const auto diags = validate_psp(inst);
    REQUIRE(diags.size() == 2);
    CHECK(diags[0].path_index == 1);
    CHECK(diags[0].reason.find("more than once") != std::string::npos);
    CHECK(diags[1].path_index == 2);
    CHECK(diags[1].reason.find("0-2") != std::string::npos);
}

TEST_CASE("paths_edge_disjoint is orientation-insensitive") {
    const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(paths_edge_disjoint(g, SimplePath{{0, 1, 2}}, SimplePath{{1, 2, 3}}));
    CHECK(paths_edge_disjoint(g, SimplePath{{0, 1}}, SimplePath{{2, 3}}));
    CHECK_FALSE(paths_edge_disjoint(g, SimplePath{{0, 1, 2}}, SimplePath{{2, 1, 0}}));
    CHECK_FALSE(paths_edge_disjoint(g, SimplePath{{0, 1}}, SimplePath{{0, 1}}));
    // sharing a vertex is fine
    CHECK(paths_edge_disjoint(g, SimplePath{{0, 1}}, SimplePath{{1, 2}}));
}

TEST_CASE("verify_solution") {
    const PspInstance minimal = parse_psp_string(kMinimal);
    Verdict v = verify_solution(minimal, Solution{{0}});
    CHECK(v.valid);
    CHECK(v.size == 1);
    CHECK(v.meets_k);

    PspInstance twice = minimal;
    twice.paths.push_back(twice.paths[0]);
    v = verify_solution(twice, Solution{{0, 1}});
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("share edge 0-1") != std::string::npos);

    PspInstance none = minimal;
    none.k = 0;
    v = verify_solution(none, Solution{});
    CHECK(v.valid);
    CHECK(v.size == 0);
    CHECK(v.meets_k);

    CHECK_FALSE(verify_solution(minimal, Solution{{3}}).valid);
    CHECK_FALSE(verify_solution(minimal, Solution{{}}).meets_k);
}

TEST_CASE("solution files round-trip") {
    const Solution s{{0, 2, 5}};
    CHECK(serialize_solution(s) == "solution 3\n0 2 5\n");
    CHECK(parse_solution_string(serialize_solution(s)) == s);
    CHECK(parse_solution_string("solution 0\n") == Solution{});
    CHECK_THROWS_AS(parse_solution_string("solution 2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_solution_string("solution 2\n3 1\n"), ParseError);
}

TEST_CASE("random generator is deterministic and controls cycles") {
    RandomParams p;
    p.n = 12;
    p.extra_edges = 2;
    p.seed = 99;
    const PspInstance a = gen_random(p), b = gen_random(p);
    CHECK(a == b);
    CHECK(a.graph.feedback_edge_number() == 2);
    CHECK(validate_psp(a).empty());

    p.extra_edges = 0;
    CHECK(gen_random(p).graph.is_forest());

    p.distinct_paths = true;
    p.n = 3;
    p.path_count = 12;
    const PspInstance small = gen_random(p);
    CHECK(small.paths.size() <= 3);  // a 3-vertex tree has 3 distinct paths
}
