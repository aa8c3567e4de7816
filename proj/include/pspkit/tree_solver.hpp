#pragma once

#include <span>
#include <vector>

#include "pspkit/graph.hpp"

namespace pspkit {

// A subgraph H of a host graph, identified by its edge ids (sorted). The
// vertex set is implied by the edges plus any explicitly listed vertices.
struct SubgraphRef {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    static SubgraphRef whole(const Graph& g);
    static SubgraphRef from_edges(const Graph& g, std::vector<EdgeId> edges);
    // H minus a set of edges (the residual H - E(P)).
    SubgraphRef without(std::span<const EdgeId> removed) const;
};

// INT(H, paths): indices of the paths whose every edge lies in H.
std::vector<int> internal_paths(const Graph& g, const SubgraphRef& h, const std::vector<SimplePath>& paths);

// Maximum pairwise edge-disjoint subset of INT(H, paths) when H is a forest.
// Throws Inapplicable if H has a cycle.
Solution solve_forest(const Graph& g, const SubgraphRef& h, const std::vector<SimplePath>& paths);

// Core routine: `in_forest` flags the edges of an acyclic subgraph, and every
// path listed in `candidates` must lie inside it. Returns the chosen subset of
// `candidates`, ascending.
std::vector<int> pack_forest_paths(const Graph& g, const std::vector<char>& in_forest,
                                   const std::vector<SimplePath>& paths, std::span<const int> candidates);

}  // namespace pspkit
