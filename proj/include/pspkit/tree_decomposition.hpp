#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pspkit/graph.hpp"
#include "pspkit/oracle.hpp"

namespace pspkit {

struct TreeDecomposition {
    int vertex_count = 0;
    std::vector<std::vector<Vertex>> bags;         // each sorted
    std::vector<std::pair<int, int>> skeleton;     // tree edges between bag indices

    int width() const;  // max bag size - 1 (-1 with no bags)
    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// Min-fill elimination (ties: lower degree, then lower id). Disconnected
// pieces are chained so the skeleton is always a single tree.
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

// Empty when valid, otherwise the first violated property.
std::optional<std::string> decomposition_error(const Graph& g, const TreeDecomposition& dec);
bool validate_decomposition(const Graph& g, const TreeDecomposition& dec);
bool validate_decomposition(const ConflictGraph& conflict, const TreeDecomposition& dec);

// Same skeleton; bag b becomes the paths with at least one vertex in bag b.
TreeDecomposition lift_to_conflict(const TreeDecomposition& dec, const PspInstance& instance);

// (width + 1) * max_degree^max_length, saturating at UINT64_MAX.
std::uint64_t lifted_bag_bound(int width, int max_degree, int max_length);

// PACE td text, 1-based bag ids and vertices:
//   s td <bags> <width+1> <n>
//   b <id> <v...>
//   <id> <id>          (one line per skeleton edge)
// Lines starting with 'c' are comments.
TreeDecomposition parse_decomposition(std::istream& in);
TreeDecomposition parse_decomposition_string(std::string_view text);
std::string serialize_decomposition(const TreeDecomposition& dec);

}  // namespace pspkit
