#include "pspkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pspkit {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("edge " + to_string(e) + " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
        throw std::invalid_argument("parallel edge " + to_string(*it));

    adjacency_.resize(static_cast<std::size_t>(vertex_count_));
    index_.reserve(edges_.size());
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
        index_.emplace(key(e.u, e.v), id);
    }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    auto it = index_.find(key(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(static_cast<std::size_t>(vertex_count_), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < vertex_count_; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (const auto& inc : incident(x)) {
                auto& l = label[static_cast<std::size_t>(inc.neighbor)];
                if (l == -1) {
                    l = next;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    const auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int Graph::feedback_edge_number() const {
    return edge_count() - vertex_count_ + component_count();
}

std::optional<std::vector<EdgeId>> path_edge_ids(const Graph& g, const SimplePath& p) {
    std::vector<EdgeId> ids;
    if (p.vertices.size() < 2) return std::nullopt;
    ids.reserve(p.vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const Vertex a = p.vertices[i], b = p.vertices[i + 1];
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) return std::nullopt;
        auto id = g.find_edge(a, b);
        if (!id) return std::nullopt;
        ids.push_back(*id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool is_simple(const SimplePath& p) {
    std::vector<Vertex> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int PspInstance::max_path_length() const {
    int r = 0;
    for (const auto& p : paths) r = std::max(r, p.edge_count());
    return r;
}

std::vector<std::vector<EdgeId>> all_path_edges(const PspInstance& instance) {
    std::vector<std::vector<EdgeId>> out;
    out.reserve(instance.paths.size());
    for (std::size_t i = 0; i < instance.paths.size(); ++i) {
        auto ids = path_edge_ids(instance.graph, instance.paths[i]);
        if (!ids) throw std::invalid_argument("path " + std::to_string(i) + " is not a path of the graph");
        if (std::adjacent_find(ids->begin(), ids->end()) != ids->end() ||
            !is_simple(instance.paths[i]))
            throw std::invalid_argument("path " + std::to_string(i) + " repeats a vertex");
        out.push_back(std::move(*ids));
    }
    return out;
}

bool sorted_disjoint(std::span<const EdgeId> a, std::span<const EdgeId> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

bool paths_edge_disjoint(const Graph& g, const SimplePath& p, const SimplePath& q) {
    auto ep = path_edge_ids(g, p);
    auto eq = path_edge_ids(g, q);
    if (!ep || !eq) throw std::invalid_argument("paths_edge_disjoint: path not in graph");
    return sorted_disjoint(*ep, *eq);
}

Verdict verify_solution(const PspInstance& instance, const Solution& solution) {
    Verdict v;
    v.size = solution.size();
    const int path_count = static_cast<int>(instance.paths.size());
    std::vector<int> owner(static_cast<std::size_t>(instance.graph.edge_count()), -1);
    std::vector<int> seen;
    for (int idx : solution.path_indices) {
        if (idx < 0 || idx >= path_count) {
            v.reason = "path index " + std::to_string(idx) + " out of range";
            return v;
        }
        if (std::find(seen.begin(), seen.end(), idx) != seen.end()) {
            v.reason = "path " + std::to_string(idx) + " selected twice";
            return v;
        }
        seen.push_back(idx);
        auto ids = path_edge_ids(instance.graph, instance.paths[static_cast<std::size_t>(idx)]);
        if (!ids) {
            v.reason = "path " + std::to_string(idx) + " is not a path of the graph";
            return v;
        }
        for (EdgeId e : *ids) {
            int& o = owner[static_cast<std::size_t>(e)];
            if (o != -1) {
                v.reason = "paths " + std::to_string(o) + " and " + std::to_string(idx) +
                           " share edge " + to_string(instance.graph.edge(e));
                return v;
            }
            o = idx;
        }
    }
    v.valid = true;
    v.meets_k = v.size >= instance.k;
    return v;
}

}  // namespace pspkit
