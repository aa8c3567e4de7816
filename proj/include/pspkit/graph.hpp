#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pspkit {

using Vertex = int;
using EdgeId = int;

// Unordered vertex pair stored as (min, max).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on dense vertex ids [0, vertex_count).
//
// Edges are kept sorted and canonical; an edge's id is its position in that
// order, so two equal graphs assign equal ids.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, parallel edges or
    // out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

    struct Incidence {
        Vertex neighbor;
        EdgeId edge;
    };
    const std::vector<Incidence>& incident(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    int max_degree() const;
    // Connected component label per vertex, labels dense in first-seen order.
    std::vector<int> component_labels() const;
    int component_count() const;
    // |E| - |V| + #components.
    int feedback_edge_number() const;
    bool is_forest() const { return feedback_edge_number() == 0; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        const Edge e(a, b);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
               static_cast<std::uint32_t>(e.v);
    }

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

struct SimplePath {
    std::vector<Vertex> vertices;

    int edge_count() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

bool is_simple(const SimplePath& p);

// Sorted edge ids of a path; nullopt when some step is not an edge of g.
std::optional<std::vector<EdgeId>> path_edge_ids(const Graph& g, const SimplePath& p);

struct PspInstance {
    Graph graph;
    std::vector<SimplePath> paths;
    int k = 0;

    int max_path_length() const;
    friend bool operator==(const PspInstance&, const PspInstance&) = default;
};

// Edge ids per path, in path order of the instance. Throws std::invalid_argument
// if a path is not valid in the graph.
std::vector<std::vector<EdgeId>> all_path_edges(const PspInstance& instance);

// Indices into PspInstance::paths, ascending.
struct Solution {
    std::vector<int> path_indices;

    int size() const { return static_cast<int>(path_indices.size()); }
    friend bool operator==(const Solution&, const Solution&) = default;
};

bool paths_edge_disjoint(const Graph& g, const SimplePath& p, const SimplePath& q);
bool sorted_disjoint(std::span<const EdgeId> a, std::span<const EdgeId> b);

struct Verdict {
    bool valid = false;
    int size = 0;
    bool meets_k = false;
    std::string reason;  // empty when valid
};

Verdict verify_solution(const PspInstance& instance, const Solution& solution);

}  // namespace pspkit
