#include "pspkit/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pspkit {

Augmented augment_clique(const Graph& g, Vertex anchor) {
    const int n = g.vertex_count();
    if (anchor < 0 || anchor >= n) throw std::invalid_argument("augment_clique: anchor out of range");
    std::vector<Edge> edges = g.edges();
    const std::vector<Vertex> clique{anchor, n, n + 1, n + 2};
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    return Augmented{Graph(n + 3, std::move(edges)), {n, n + 1, n + 2}, anchor};
}

namespace {

// Degrees after repeatedly deleting degree-1 vertices; peeled vertices get -1.
std::vector<int> peel(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        if (deg[v] != 1) continue;
        deg[v] = -1;
        for (const auto& inc : g.incident(v)) {
            int& d = deg[inc.neighbor];
            if (d > 0 && --d == 1) queue.push_back(inc.neighbor);
        }
    }
    return deg;
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

Vertex choose_anchor(const Graph& g) {
    const auto deg = peel(g);
    Vertex best = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (deg[v] > 0 && (best == -1 || deg[v] > deg[best])) best = v;
    if (best != -1) return best;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (best == -1 || g.degree(v) < g.degree(best)) best = v;
    return std::max(best, 0);
}

int StructureDecomposition::x_count() const {
    return static_cast<int>(std::count(role.begin(), role.end(), Role::X));
}

StructureDecomposition decompose_structure(const Graph& g) {
    const int n = g.vertex_count();
    StructureDecomposition d;
    const auto deg = peel(g);
    d.role.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) d.role[v] = deg[v] < 0 ? Role::T : (deg[v] >= 3 ? Role::X : Role::S);

    UnionFind side(n);   // components of G[S u T]
    UnionFind core(n);   // components of G[V \ T]
    UnionFind s_only(n); // components of G[S]
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Role ru = d.role[ed.u], rv = d.role[ed.v];
        if (ru == Role::X || rv == Role::X) d.core_edges.push_back(e);
        else side.unite(ed.u, ed.v);
        if (ru != Role::T && rv != Role::T) {
            core.unite(ed.u, ed.v);
            d.lambda_core += 1;
        }
        if (ru == Role::S && rv == Role::S) s_only.unite(ed.u, ed.v);
    }

    // group G[S u T] components
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    std::vector<StructureDecomposition::Component> comps;
    std::vector<char> has_s;
    for (Vertex v = 0; v < n; ++v) {
        if (d.role[v] == Role::X) continue;
        const int r = side.find(v);
        if (comp_of[r] == -1) {
            comp_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
            has_s.push_back(0);
        }
        const int c = comp_of[r];
        comp_of[v] = c;
        comps[c].vertices.push_back(v);
        if (d.role[v] == Role::S) has_s[c] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const bool xu = d.role[ed.u] == Role::X, xv = d.role[ed.v] == Role::X;
        if (xu && xv) continue;
        if (!xu && !xv) comps[comp_of[ed.u]].edges.push_back(e);
        else comps[comp_of[xu ? ed.v : ed.u]].external_edges.push_back(e);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t want = has_s[c] ? 2 : 1;
        if (comps[c].external_edges.size() != want)
            throw std::logic_error("decompose_structure: component containing vertex " +
                                   std::to_string(comps[c].vertices.front()) + " has " +
                                   std::to_string(comps[c].external_edges.size()) + " external edges, expected " +
                                   std::to_string(want));
        (has_s[c] ? d.d_components : d.t_components).push_back(std::move(comps[c]));
    }

    // per connected core: vertices, edges, X and S-path counts
    std::vector<int> core_id(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        if (d.role[v] == Role::T) continue;
        const int r = core.find(v);
        if (core_id[r] == -1) {
            core_id[r] = static_cast<int>(d.cores.size());
            d.cores.emplace_back();
        }
        auto& st = d.cores[core_id[r]];
        st.vertices += 1;
        if (d.role[v] == Role::X) st.x_count += 1;
        if (d.role[v] == Role::S && s_only.find(v) == v) st.s_component_count += 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (d.role[ed.u] != Role::T && d.role[ed.v] != Role::T) d.cores[core_id[core.find(ed.u)]].edges += 1;
    }
    int core_vertices = 0;
    for (auto& st : d.cores) {
        st.lambda = st.edges - st.vertices + 1;
        core_vertices += st.vertices;
    }
    d.lambda_core = d.lambda_core - core_vertices + static_cast<int>(d.cores.size());
    return d;
}

}  // namespace pspkit
