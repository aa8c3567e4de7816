#include <algorithm>
#include <bit>
#include <vector>

#include "battery.hpp"
#include "doctest.h"
#include "pspkit/errors.hpp"
#include "pspkit/oracle.hpp"

using namespace pspkit;

namespace {

// Star K_{1,3}: center 0, leaves 1, 2, 3.
Graph star() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

int exhaustive_optimum(const PspInstance& inst) {
    const int p = static_cast<int>(inst.paths.size());
    const auto edges = all_path_edges(inst);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; j < p && ok; ++j)
                if ((mask >> j & 1) && !sorted_disjoint(edges[i], edges[j])) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("conflict graph edges follow shared graph edges") {
    const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    PspInstance inst{g, {SimplePath{{0, 1, 2}}, SimplePath{{1, 2, 3}}}, 1};
    ConflictGraph h = build_conflict_graph(inst);
    CHECK(h.vertex_count == 2);
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(h.adjacent(1, 0));

    inst.paths = {SimplePath{{0, 1}}, SimplePath{{1, 2}}, SimplePath{{2, 3}}};
    CHECK(build_conflict_graph(inst).edges.empty());

    inst.paths = {SimplePath{{0, 1, 2}}, SimplePath{{1, 2}}, SimplePath{{3, 2, 1}}};
    h = build_conflict_graph(inst);
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(h.adjacency[1] == std::vector<int>{0, 2});
    CHECK(serialize_dimacs(h) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("bruteforce on small shapes") {
    SUBCASE("edgeless conflict graph selects everything") {
        const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
        PspInstance inst{g, {}, 5};
        for (int i = 0; i < 5; ++i) inst.paths.push_back(SimplePath{{i, i + 1}});
        CHECK(solve_bruteforce(inst).path_indices == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("triangle conflict graph") {
        const Graph g(3, {{0, 1}, {1, 2}});
        PspInstance inst{g, {SimplePath{{0, 1}}, SimplePath{{1, 0}}, SimplePath{{0, 1, 2}}}, 1};
        CHECK(solve_bruteforce(inst).size() == 1);
    }
    SUBCASE("three paths through the center of a star") {
        PspInstance inst{star(), {SimplePath{{1, 0, 2}}, SimplePath{{2, 0, 3}}, SimplePath{{1, 0, 3}}}, 1};
        const Solution s = solve_bruteforce(inst);
        CHECK(s.size() == 1);
        CHECK(verify_solution(inst, s).valid);
    }
    SUBCASE("no paths") {
        CHECK(solve_bruteforce(PspInstance{star(), {}, 0}).size() == 0);
    }
}

TEST_CASE("bruteforce budget guard") {
    const Graph g(2, {{0, 1}});
    PspInstance inst{g, std::vector<SimplePath>(31, SimplePath{{0, 1}}), 1};
    CHECK_THROWS_AS(solve_bruteforce(inst), BudgetExceeded);
    CHECK(solve_bruteforce(inst, BruteforceOptions{40}).size() == 1);
}

TEST_CASE("bruteforce matches subset enumeration and is monotone") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        PspInstance inst = testing::fvs_case(seed);
        const Solution s = solve_bruteforce(inst);
        CHECK(verify_solution(inst, s).valid);
        CHECK(s.size() == exhaustive_optimum(inst));
        CHECK(solve_bruteforce(inst) == s);

        if (!inst.paths.empty()) {
            inst.paths.erase(inst.paths.begin() + static_cast<long>(seed % inst.paths.size()));
            CHECK(solve_bruteforce(inst).size() <= s.size());
        }
    }
}

TEST_CASE("max_independent_set on a conflict graph directly") {
    // 5-cycle: alpha = 2
    ConflictGraph c;
    c.vertex_count = 5;
    c.adjacency.resize(5);
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        c.edges.emplace_back(std::min(i, j), std::max(i, j));
        c.adjacency[i].push_back(j);
        c.adjacency[j].push_back(i);
    }
    std::sort(c.edges.begin(), c.edges.end());
    for (auto& a : c.adjacency) std::sort(a.begin(), a.end());
    const auto mis = max_independent_set(c);
    REQUIRE(mis.size() == 2);
    CHECK_FALSE(c.adjacent(mis[0], mis[1]));
}
