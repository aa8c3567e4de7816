#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pspkit/graph.hpp"
#include "pspkit/tree_decomposition.hpp"

namespace pspkit {

enum class Algorithm { Auto, Bruteforce, Tree, FvsDelta, TwConflict, StubEmpty };

// "auto", "bruteforce", "tree", "fvs-delta", "tw-conflict"; "stub-empty" always
// answers with the empty packing and exists so bench's cross-check can be exercised.
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm algo);

struct SolveOptions {
    Algorithm algorithm = Algorithm::Auto;
    int bruteforce_max_paths = 30;
    int budget_core_edges = 14;
    int max_width = 22;
    std::optional<TreeDecomposition> decomposition;  // decomposition of G for tw-conflict
};

struct RunReport {
    Algorithm algorithm = Algorithm::Auto;  // resolved, never Auto
    std::string digest;
    Solution solution;
    double wall_ms = 0;
    int lambda = 0;
    int max_degree = 0;
    int max_length = 0;
    int core_edges = -1;      // fvs-delta guard quantity, -1 when not computed
    int width = -1;           // width of the decomposition of G, -1 when not used
    int conflict_width = -1;  // width after lifting

    int optimum() const { return solution.size(); }
};

// Runs the chosen algorithm. Throws BudgetExceeded, Inapplicable, or
// std::invalid_argument for an invalid instance or decomposition. The result
// is not verified here; callers verify before reporting.
RunReport solve_instance(const PspInstance& instance, const SolveOptions& options = {});

}  // namespace pspkit
