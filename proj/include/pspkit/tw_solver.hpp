#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pspkit/graph.hpp"
#include "pspkit/oracle.hpp"
#include "pspkit/tree_decomposition.hpp"

namespace pspkit {

struct TwOptions {
    int max_width = 22;  // guard on the width of the decomposition the DP runs on
};

// Maximum independent set by dynamic programming over a nice version of
// `dec`. Throws std::invalid_argument if `dec` is not a decomposition of the
// conflict graph, BudgetExceeded above the width guard.
std::vector<int> mis_treewidth(const ConflictGraph& conflict, const TreeDecomposition& dec,
                               const TwOptions& options = {});

struct TwResult {
    Solution solution;
    int graph_width = -1;     // width of the decomposition of G
    int conflict_width = -1;  // width after lifting
    std::uint64_t bag_bound = 0;
    int bound_violations = 0; // lifted bags larger than bag_bound
};

// Conflict graph, lift of `dec` (or of the min-fill heuristic decomposition of
// G when absent), then treewidth DP.
TwResult solve_tw_detailed(const PspInstance& instance, const std::optional<TreeDecomposition>& dec = std::nullopt,
                           const TwOptions& options = {});
Solution solve_tw(const PspInstance& instance, const std::optional<TreeDecomposition>& dec = std::nullopt,
                  const TwOptions& options = {});

}  // namespace pspkit
