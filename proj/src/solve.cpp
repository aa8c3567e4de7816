#include "pspkit/solve.hpp"

#include <chrono>

#include "pspkit/errors.hpp"
#include "pspkit/fvs_solver.hpp"
#include "pspkit/oracle.hpp"
#include "pspkit/psp_io.hpp"
#include "pspkit/tree_solver.hpp"
#include "pspkit/tw_solver.hpp"

namespace pspkit {

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::Auto, "auto"},           {Algorithm::Bruteforce, "bruteforce"}, {Algorithm::Tree, "tree"},
    {Algorithm::FvsDelta, "fvs-delta"},  {Algorithm::TwConflict, "tw-conflict"}, {Algorithm::StubEmpty, "stub-empty"},
};

void run_tw(const PspInstance& instance, const SolveOptions& options, RunReport& report) {
    const TwResult tw = solve_tw_detailed(instance, options.decomposition, TwOptions{options.max_width});
    report.solution = tw.solution;
    report.width = tw.graph_width;
    report.conflict_width = tw.conflict_width;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const auto& [algo, text] : kNames)
        if (text == name) return algo;
    return std::nullopt;
}

std::string algorithm_name(Algorithm algo) {
    for (const auto& [a, text] : kNames)
        if (a == algo) return std::string(text);
    return "unknown";
}

RunReport solve_instance(const PspInstance& instance, const SolveOptions& options) {
    all_path_edges(instance);  // throws on invalid paths
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.digest = instance_digest(instance);
    report.lambda = instance.graph.feedback_edge_number();
    report.max_degree = instance.graph.max_degree();
    report.max_length = instance.max_path_length();
    report.core_edges = max_input_core_edges(instance);

    Algorithm algo = options.algorithm;
    if (algo == Algorithm::Auto) {
        if (instance.graph.is_forest()) {
            algo = Algorithm::Tree;
        } else if (report.core_edges <= options.budget_core_edges) {
            algo = Algorithm::FvsDelta;
        } else {
            const TreeDecomposition base =
                options.decomposition ? *options.decomposition : heuristic_tree_decomposition(instance.graph);
            if (lift_to_conflict(base, instance).width() <= options.max_width)
                algo = Algorithm::TwConflict;
            else if (static_cast<int>(instance.paths.size()) <= options.bruteforce_max_paths)
                algo = Algorithm::Bruteforce;
            else
                throw BudgetExceeded("auto: no algorithm fits the configured budgets (core edges " +
                                     std::to_string(report.core_edges) + ", " + std::to_string(instance.paths.size()) +
                                     " paths)");
        }
    }
    report.algorithm = algo;

    switch (algo) {
        case Algorithm::Auto:
            break;
        case Algorithm::Bruteforce:
            report.solution = solve_bruteforce(instance, BruteforceOptions{options.bruteforce_max_paths});
            break;
        case Algorithm::Tree:
            report.solution = solve_forest(instance.graph, SubgraphRef::whole(instance.graph), instance.paths);
            break;
        case Algorithm::FvsDelta:
            report.solution = solve_fvs_delta(instance, FvsOptions{options.budget_core_edges});
            break;
        case Algorithm::TwConflict:
            run_tw(instance, options, report);
            break;
        case Algorithm::StubEmpty:
            report.solution = Solution{};
            break;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace pspkit
