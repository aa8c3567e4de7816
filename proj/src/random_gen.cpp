#include "pspkit/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pspkit {

namespace {

std::vector<Edge> random_forest(int n, int components, int max_degree, Rng& rng, std::vector<int>& degree) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    const int roots = std::clamp(components, 1, std::max(n, 1));
    std::vector<Edge> edges;
    for (int i = roots; i < n; ++i) {
        std::vector<int> eligible;
        for (int j = 0; j < i; ++j)
            if (max_degree == 0 || degree[order[j]] < max_degree) eligible.push_back(order[j]);
        if (eligible.empty()) continue;
        const int parent = eligible[rng.below(static_cast<int>(eligible.size()))];
        edges.emplace_back(parent, order[i]);
        ++degree[parent];
        ++degree[order[i]];
    }
    return edges;
}

}  // namespace

PspInstance gen_random(const RandomParams& params) {
    if (params.n < 1 || params.path_count < 0 || params.max_len < 1 || params.extra_edges < 0)
        throw std::invalid_argument("gen_random: parameters out of range");
    Rng rng(params.seed);
    const int n = params.n;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges = random_forest(n, params.components, params.max_degree, rng, degree);
    std::set<Edge> present(edges.begin(), edges.end());

    const std::vector<int> label_before = Graph(n, edges).component_labels();
    int added = 0;
    for (int attempt = 0; added < params.extra_edges && attempt < 200 * (params.extra_edges + 1); ++attempt) {
        const int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        // extra edges stay inside a tree so the component count is preserved
        if (label_before[u] != label_before[v]) continue;
        if (params.max_degree && (degree[u] >= params.max_degree || degree[v] >= params.max_degree)) continue;
        if (!present.insert(Edge(u, v)).second) continue;
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
        ++added;
    }

    PspInstance instance{Graph(n, std::move(edges)), {}, params.k};
    const Graph& g = instance.graph;
    if (g.edge_count() == 0) return instance;

    std::vector<int> has_edge;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 0) has_edge.push_back(v);

    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::set<std::vector<Vertex>> seen;
    for (int attempt = 0; static_cast<int>(instance.paths.size()) < params.path_count; ++attempt) {
        if (params.distinct_paths && attempt >= 100 * (params.path_count + 1)) break;
        const int target = rng.between(1, params.max_len);
        std::vector<Vertex> walk{has_edge[rng.below(static_cast<int>(has_edge.size()))]};
        position[walk[0]] = 0;
        for (int step = 0; step < 50 * target && static_cast<int>(walk.size()) - 1 < target; ++step) {
            const auto& inc = g.incident(walk.back());
            const Vertex next = inc[rng.below(static_cast<int>(inc.size()))].neighbor;
            if (position[next] != -1) {
                // erase the loop just closed
                const int keep = position[next] + 1;
                for (std::size_t i = static_cast<std::size_t>(keep); i < walk.size(); ++i) position[walk[i]] = -1;
                walk.resize(static_cast<std::size_t>(keep));
            } else {
                position[next] = static_cast<int>(walk.size());
                walk.push_back(next);
            }
        }
        for (Vertex v : walk) position[v] = -1;
        if (walk.size() < 2) continue;
        if (params.distinct_paths) {
            std::vector<Vertex> key = walk;
            if (key.front() > key.back()) std::reverse(key.begin(), key.end());
            if (!seen.insert(std::move(key)).second) continue;
        }
        instance.paths.push_back(SimplePath{std::move(walk)});
    }
    return instance;
}

}  // namespace pspkit
