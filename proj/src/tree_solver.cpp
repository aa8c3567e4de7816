#include "pspkit/tree_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pspkit/errors.hpp"
#include "pspkit/matching.hpp"

namespace pspkit {

SubgraphRef SubgraphRef::whole(const Graph& g) {
    SubgraphRef h;
    h.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(h.vertices.begin(), h.vertices.end(), 0);
    h.edges.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(h.edges.begin(), h.edges.end(), 0);
    return h;
}

SubgraphRef SubgraphRef::from_edges(const Graph& g, std::vector<EdgeId> edges) {
    SubgraphRef h;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (EdgeId e : edges) {
        h.vertices.push_back(g.edge(e).u);
        h.vertices.push_back(g.edge(e).v);
    }
    std::sort(h.vertices.begin(), h.vertices.end());
    h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
    h.edges = std::move(edges);
    return h;
}

SubgraphRef SubgraphRef::without(std::span<const EdgeId> removed) const {
    SubgraphRef h;
    h.vertices = vertices;
    std::vector<EdgeId> sorted_removed(removed.begin(), removed.end());
    std::sort(sorted_removed.begin(), sorted_removed.end());
    std::set_difference(edges.begin(), edges.end(), sorted_removed.begin(), sorted_removed.end(),
                        std::back_inserter(h.edges));
    return h;
}

std::vector<int> internal_paths(const Graph& g, const SubgraphRef& h, const std::vector<SimplePath>& paths) {
    std::vector<char> in_h(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : h.edges) in_h[static_cast<std::size_t>(e)] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        auto ids = path_edge_ids(g, paths[i]);
        if (!ids) throw std::invalid_argument("internal_paths: path " + std::to_string(i) + " not in graph");
        if (std::all_of(ids->begin(), ids->end(), [&](EdgeId e) { return in_h[static_cast<std::size_t>(e)] != 0; }))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

// Bottom-up packing over a rooted forest.
//
// Every path has a unique topmost vertex (its LCA) and descends from it along
// one or two arms. At most one chosen path can cross the edge above any
// vertex, so each vertex v only has to report, per child edge, whether the
// child's subtree stays optimal when one extra path runs through that edge.
// A child edge c is "avoidable" at v when some maximum matching on v's
// child-edge graph leaves c free. A path is usable at its LCA iff every
// interior step of its arms is avoidable; the chosen set is then rebuilt top
// down, forcing each vertex's matching to avoid the child edge an ancestor's
// path continues through.
class ForestPacker {
public:
    ForestPacker(const Graph& g, const std::vector<char>& in_forest)
        : g_(g), in_forest_(in_forest) {
        root_forest();
    }

    std::vector<int> pack(const std::vector<SimplePath>& paths, std::span<const int> candidates) {
        const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
        by_lca_.assign(n, {});
        shapes_.clear();
        for (int idx : candidates) {
            shapes_.push_back(shape_of(paths[static_cast<std::size_t>(idx)], idx));
            by_lca_[static_cast<std::size_t>(shapes_.back().lca)].push_back(shapes_.size() - 1);
        }

        avoidable_.assign(n, {});
        local_.assign(n, {});
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) build_local(*it);

        std::vector<int> forced(n, -1);
        std::vector<int> chosen;
        for (Vertex v : order_) {
            const auto& loc = local_[static_cast<std::size_t>(v)];
            if (loc.pairs.empty()) continue;
            const int d = child_count(v);
            GeneralMatching m(2 * d);
            for (const auto& pr : loc.pairs) m.add_edge(pr.a, pr.b);
            std::vector<char> excluded(static_cast<std::size_t>(2 * d), 0);
            if (forced[static_cast<std::size_t>(v)] >= 0) excluded[static_cast<std::size_t>(forced[static_cast<std::size_t>(v)])] = 1;
            const int size = m.solve(excluded);
            if (size != loc.matching_size) throw std::logic_error("forest packer: forced edge was not avoidable");
            const auto& mate = m.mate();
            for (const auto& pr : loc.pairs) {
                if (mate[pr.a] != pr.b) continue;
                const Shape& s = shapes_[pr.shape];
                chosen.push_back(s.index);
                for (const auto& arm : s.arms) {
                    for (std::size_t i = 0; i + 1 < arm.size(); ++i) {
                        int& f = forced[static_cast<std::size_t>(arm[i])];
                        if (f != -1) throw std::logic_error("forest packer: two paths forced through one edge");
                        f = child_slot_[static_cast<std::size_t>(arm[i + 1])];
                    }
                }
            }
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

private:
    struct Shape {
        int index;
        Vertex lca;
        std::vector<std::vector<Vertex>> arms;  // each arm starts at a child of lca, descending
    };
    struct Pair {
        int a, b;
        std::size_t shape;
    };
    struct Local {
        std::vector<Pair> pairs;
        int matching_size = 0;
    };

    int child_count(Vertex v) const { return static_cast<int>(children_[static_cast<std::size_t>(v)].size()); }

    void root_forest() {
        const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
        parent_.assign(n, -1);
        depth_.assign(n, -1);
        child_slot_.assign(n, -1);
        children_.assign(n, {});
        for (Vertex root = 0; root < g_.vertex_count(); ++root) {
            if (depth_[static_cast<std::size_t>(root)] != -1) continue;
            depth_[static_cast<std::size_t>(root)] = 0;
            std::size_t head = order_.size();
            order_.push_back(root);
            while (head < order_.size()) {
                const Vertex x = order_[head++];
                for (const auto& inc : g_.incident(x)) {
                    if (!in_forest_[static_cast<std::size_t>(inc.edge)]) continue;
                    const Vertex y = inc.neighbor;
                    if (y == parent_[static_cast<std::size_t>(x)]) continue;
                    if (depth_[static_cast<std::size_t>(y)] != -1)
                        throw Inapplicable("subgraph is not a forest (cycle through " + std::to_string(x) + "-" +
                                           std::to_string(y) + ")");
                    depth_[static_cast<std::size_t>(y)] = depth_[static_cast<std::size_t>(x)] + 1;
                    parent_[static_cast<std::size_t>(y)] = x;
                    child_slot_[static_cast<std::size_t>(y)] = child_count(x);
                    children_[static_cast<std::size_t>(x)].push_back(y);
                    order_.push_back(y);
                }
            }
        }
    }

    Shape shape_of(const SimplePath& p, int index) const {
        const auto& vs = p.vertices;
        std::size_t top = 0;
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (depth_[static_cast<std::size_t>(vs[i])] < depth_[static_cast<std::size_t>(vs[top])]) top = i;
        Shape s{index, vs[top], {}};
        if (top > 0) s.arms.emplace_back(vs.rend() - static_cast<std::ptrdiff_t>(top), vs.rend());
        if (top + 1 < vs.size()) s.arms.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(top) + 1, vs.end());
        for (const auto& arm : s.arms) {
            Vertex up = s.lca;
            for (Vertex x : arm) {
                if (parent_[static_cast<std::size_t>(x)] != up)
                    throw std::invalid_argument("forest packer: path " + std::to_string(index) + " leaves the forest");
                up = x;
            }
        }
        return s;
    }

    bool arm_usable(const std::vector<Vertex>& arm) const {
        for (std::size_t i = 0; i + 1 < arm.size(); ++i) {
            const auto& av = avoidable_[static_cast<std::size_t>(arm[i])];
            if (!av[static_cast<std::size_t>(child_slot_[static_cast<std::size_t>(arm[i + 1])])]) return false;
        }
        return true;
    }

    void build_local(Vertex v) {
        const int d = child_count(v);
        auto& av = avoidable_[static_cast<std::size_t>(v)];
        av.assign(static_cast<std::size_t>(d), 1);
        auto& loc = local_[static_cast<std::size_t>(v)];
        // node j = child edge j; node d + j = private endpoint for paths ending below v on edge j
        std::map<std::pair<int, int>, std::size_t> seen;
        for (std::size_t si : by_lca_[static_cast<std::size_t>(v)]) {
            const Shape& s = shapes_[si];
            if (!std::all_of(s.arms.begin(), s.arms.end(), [&](const auto& arm) { return arm_usable(arm); }))
                continue;
            int a = child_slot_[static_cast<std::size_t>(s.arms[0].front())];
            int b = s.arms.size() == 2 ? child_slot_[static_cast<std::size_t>(s.arms[1].front())] : d + a;
            if (a > b) std::swap(a, b);
            if (seen.emplace(std::make_pair(a, b), si).second) loc.pairs.push_back({a, b, si});
        }
        if (loc.pairs.empty()) return;
        GeneralMatching m(2 * d);
        for (const auto& pr : loc.pairs) m.add_edge(pr.a, pr.b);
        loc.matching_size = m.solve();
        const std::vector<int> mate = m.mate();
        for (int j = 0; j < d; ++j) {
            if (mate[static_cast<std::size_t>(j)] == -1) continue;
            std::vector<char> excluded(static_cast<std::size_t>(2 * d), 0);
            excluded[static_cast<std::size_t>(j)] = 1;
            av[static_cast<std::size_t>(j)] = m.solve(excluded) == loc.matching_size;
        }
    }

    const Graph& g_;
    const std::vector<char>& in_forest_;
    std::vector<Vertex> parent_, order_;
    std::vector<int> depth_, child_slot_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Shape> shapes_;
    std::vector<std::vector<std::size_t>> by_lca_;
    std::vector<std::vector<char>> avoidable_;
    std::vector<Local> local_;
};

}  // namespace

std::vector<int> pack_forest_paths(const Graph& g, const std::vector<char>& in_forest,
                                   const std::vector<SimplePath>& paths, std::span<const int> candidates) {
    ForestPacker packer(g, in_forest);
    return packer.pack(paths, candidates);
}

Solution solve_forest(const Graph& g, const SubgraphRef& h, const std::vector<SimplePath>& paths) {
    std::vector<char> in_forest(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : h.edges) in_forest[static_cast<std::size_t>(e)] = 1;
    const auto candidates = internal_paths(g, h, paths);
    return Solution{pack_forest_paths(g, in_forest, paths, candidates)};
}

}  // namespace pspkit
