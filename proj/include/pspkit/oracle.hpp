#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pspkit/graph.hpp"

namespace pspkit {

// One vertex per path of an instance; i ~ j iff paths i and j share a graph edge.
struct ConflictGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    Graph to_graph() const;
    bool adjacent(int i, int j) const;
};

ConflictGraph build_conflict_graph(const PspInstance& instance);

// "p edge <n> <m>" followed by "e <i+1> <j+1>" lines.
std::string serialize_dimacs(const ConflictGraph& conflict);

struct BruteforceOptions {
    int max_paths = 30;
};

// Exact maximum packing by branch-and-bound over the conflict graph: branch
// on a maximum-degree candidate (include first, then exclude), prune with
// a degree-sum bound. Throws BudgetExceeded above max_paths (hard cap 64).
Solution solve_bruteforce(const PspInstance& instance, const BruteforceOptions& options = {});

// Same search, directly on a conflict graph.
std::vector<int> max_independent_set(const ConflictGraph& conflict, int max_vertices = 30);

}  // namespace pspkit
