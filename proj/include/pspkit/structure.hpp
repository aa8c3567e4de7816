#pragma once

#include <vector>

#include "pspkit/graph.hpp"

namespace pspkit {

struct Augmented {
    Graph graph;
    std::vector<Vertex> added;  // the three new vertices, ids n, n+1, n+2
    Vertex anchor = 0;
};

// Adds three vertices forming a K4 with `anchor`. No existing path can use
// the six new edges, so packing optima are unchanged.
Augmented augment_clique(const Graph& g, Vertex anchor);

// Anchor choice used by the solver: a vertex of maximum degree inside the
// 2-core (smallest id on ties), or vertex 0 when the graph is a tree.
Vertex choose_anchor(const Graph& g);

enum class Role : char { T, S, X };

// Vertex partition obtained by repeatedly peeling degree-1 vertices (T), then
// splitting the remainder into degree >= 3 (X) and degree 2 (S) vertices.
// Components of G[S u T] touching S form the 2-external list, the others the
// 1-external list; external edges are the edges joining a component to X.
struct StructureDecomposition {
    struct Component {
        std::vector<Vertex> vertices;        // sorted
        std::vector<EdgeId> edges;           // internal edges, sorted
        std::vector<EdgeId> external_edges;  // sorted; size 2 (D) or 1 (T)
    };
    // Size counters for one connected component of G[V \ T].
    struct CoreStats {
        int vertices = 0;
        int edges = 0;
        int lambda = 0;            // edges - vertices + 1
        int x_count = 0;
        int s_component_count = 0; // components of the core minus X
    };

    std::vector<Role> role;
    std::vector<EdgeId> core_edges;  // every edge with an endpoint in X, sorted
    std::vector<Component> d_components;
    std::vector<Component> t_components;
    std::vector<CoreStats> cores;
    int lambda_core = 0;  // feedback edge number of G[V \ T]

    int x_count() const;
};

// Throws std::logic_error if a component does not have exactly one or two
// external edges (impossible when every connected component has X != {}).
StructureDecomposition decompose_structure(const Graph& g);

}  // namespace pspkit
