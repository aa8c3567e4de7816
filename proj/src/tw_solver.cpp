#include "pspkit/tw_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "pspkit/errors.hpp"

namespace pspkit {

namespace {

using Mask = std::uint32_t;

Mask insert_bit(Mask m, int pos, Mask bit) {
    const Mask low = m & ((Mask{1} << pos) - 1);
    return low | (bit << pos) | ((m >> pos) << (pos + 1));
}

Mask remove_bit(Mask m, int pos) {
    const Mask low = m & ((Mask{1} << pos) - 1);
    return low | ((m >> (pos + 1)) << pos);
}

struct NiceNode {
    enum Kind { Leaf, Introduce, Forget, Join } kind = Leaf;
    std::vector<int> bag;  // sorted
    int vertex = -1;       // introduced or forgotten vertex
    int pos = -1;          // its position in the larger of the two bags
    int left = -1, right = -1;
};

class NiceDp {
public:
    NiceDp(const ConflictGraph& conflict, const TreeDecomposition& dec) : conflict_(conflict) { build(dec); }

    std::vector<int> run() {
        tables_.resize(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) fill(static_cast<int>(i));
        std::vector<int> chosen;
        std::vector<std::pair<int, Mask>> stack{{root_, 0}};
        while (!stack.empty()) {
            const auto [id, state] = stack.back();
            stack.pop_back();
            const NiceNode& nd = nodes_[id];
            switch (nd.kind) {
                case NiceNode::Leaf:
                    break;
                case NiceNode::Introduce:
                    stack.push_back({nd.left, remove_bit(state, nd.pos)});
                    break;
                case NiceNode::Forget: {
                    const int want = tables_[id].at(state);
                    const auto& child = tables_[nd.left];
                    const Mask without = insert_bit(state, nd.pos, 0);
                    // every vertex is forgotten exactly once, so selections are read off here
                    auto it = child.find(without);
                    if (it != child.end() && it->second == want) {
                        stack.push_back({nd.left, without});
                    } else {
                        chosen.push_back(nd.vertex);
                        stack.push_back({nd.left, insert_bit(state, nd.pos, 1)});
                    }
                    break;
                }
                case NiceNode::Join:
                    stack.push_back({nd.left, state});
                    stack.push_back({nd.right, state});
                    break;
            }
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

private:
    int add(NiceNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int introduce(int child, int v) {
        NiceNode nd;
        nd.kind = NiceNode::Introduce;
        nd.bag = nodes_[child].bag;
        nd.bag.insert(std::lower_bound(nd.bag.begin(), nd.bag.end(), v), v);
        nd.vertex = v;
        nd.pos = static_cast<int>(std::lower_bound(nd.bag.begin(), nd.bag.end(), v) - nd.bag.begin());
        nd.left = child;
        return add(std::move(nd));
    }

    int forget(int child, int v) {
        NiceNode nd;
        nd.kind = NiceNode::Forget;
        const auto& cb = nodes_[child].bag;
        nd.pos = static_cast<int>(std::lower_bound(cb.begin(), cb.end(), v) - cb.begin());
        nd.bag = cb;
        nd.bag.erase(nd.bag.begin() + nd.pos);
        nd.vertex = v;
        nd.left = child;
        return add(std::move(nd));
    }

    // Morph node `from` into a node whose bag equals `target`.
    int morph(int from, const std::vector<int>& target) {
        const std::vector<int> have = nodes_[from].bag;
        std::vector<int> drop, gain;
        std::set_difference(have.begin(), have.end(), target.begin(), target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), have.begin(), have.end(), std::back_inserter(gain));
        for (int v : drop) from = forget(from, v);
        for (int v : gain) from = introduce(from, v);
        return from;
    }

    void build(const TreeDecomposition& dec) {
        const int b = static_cast<int>(dec.bags.size());
        if (b == 0) {
            root_ = add(NiceNode{});
            return;
        }
        std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
        for (const auto& [x, y] : dec.skeleton) {
            tree[x].push_back(y);
            tree[y].push_back(x);
        }
        // iterative post-order from bag 0
        std::vector<int> parent(static_cast<std::size_t>(b), -1), order;
        std::vector<int> stack{0};
        parent[0] = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int y : tree[x])
                if (parent[y] < 0) {
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
        std::vector<int> nice_of(static_cast<std::size_t>(b), -1);
        std::vector<std::vector<int>> done(static_cast<std::size_t>(b));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int x = *it;
            std::vector<int> bag = dec.bags[x];
            std::sort(bag.begin(), bag.end());
            int node = -1;
            for (int child : done[x]) {
                const int m = morph(child, bag);
                if (node < 0) {
                    node = m;
                } else {
                    NiceNode j;
                    j.kind = NiceNode::Join;
                    j.bag = bag;
                    j.left = node;
                    j.right = m;
                    node = add(std::move(j));
                }
            }
            if (node < 0) node = morph(add(NiceNode{}), bag);
            nice_of[x] = node;
            if (x != 0) done[parent[x]].push_back(node);
        }
        root_ = morph(nice_of[0], {});
    }

    void fill(int id) {
        const NiceNode& nd = nodes_[id];
        auto& table = tables_[id];
        switch (nd.kind) {
            case NiceNode::Leaf:
                table.emplace(0, 0);
                break;
            case NiceNode::Introduce: {
                // child-bag mask of the neighbours of the introduced vertex
                const auto& cb = nodes_[nd.left].bag;
                Mask nb = 0;
                for (std::size_t i = 0; i < cb.size(); ++i)
                    if (conflict_.adjacent(nd.vertex, cb[i])) nb |= Mask{1} << i;
                for (const auto& [s, value] : tables_[nd.left]) {
                    table.emplace(insert_bit(s, nd.pos, 0), value);
                    if ((s & nb) == 0) table.emplace(insert_bit(s, nd.pos, 1), value + 1);
                }
                break;
            }
            case NiceNode::Forget:
                for (const auto& [s, value] : tables_[nd.left]) {
                    auto [it, fresh] = table.emplace(remove_bit(s, nd.pos), value);
                    if (!fresh) it->second = std::max(it->second, value);
                }
                break;
            case NiceNode::Join: {
                const auto& right = tables_[nd.right];
                for (const auto& [s, value] : tables_[nd.left])
                    if (auto it = right.find(s); it != right.end())
                        table.emplace(s, value + it->second - std::popcount(s));
                break;
            }
        }
    }

    const ConflictGraph& conflict_;
    std::vector<NiceNode> nodes_;
    std::vector<std::unordered_map<Mask, int>> tables_;
    int root_ = 0;
};

}  // namespace

std::vector<int> mis_treewidth(const ConflictGraph& conflict, const TreeDecomposition& dec, const TwOptions& options) {
    if (auto err = decomposition_error(conflict.to_graph(), dec))
        throw std::invalid_argument("mis_treewidth: not a decomposition of the conflict graph: " + *err);
    if (dec.width() > std::min(options.max_width, 30))
        throw BudgetExceeded("tw-conflict: conflict decomposition width " + std::to_string(dec.width()) +
                             " exceeds the limit of " + std::to_string(std::min(options.max_width, 30)));
    if (conflict.vertex_count == 0) return {};
    return NiceDp(conflict, dec).run();
}

TwResult solve_tw_detailed(const PspInstance& instance, const std::optional<TreeDecomposition>& dec,
                           const TwOptions& options) {
    TwResult result;
    TreeDecomposition base = dec ? *dec : heuristic_tree_decomposition(instance.graph);
    if (auto err = decomposition_error(instance.graph, base))
        throw std::invalid_argument("tw-conflict: invalid decomposition of the input graph: " + *err);
    const ConflictGraph conflict = build_conflict_graph(instance);
    const TreeDecomposition lifted = lift_to_conflict(base, instance);

    result.graph_width = base.width();
    result.conflict_width = lifted.width();
    result.bag_bound = lifted_bag_bound(base.width(), instance.graph.max_degree(), instance.max_path_length());
    for (const auto& bag : lifted.bags)
        if (bag.size() > result.bag_bound) ++result.bound_violations;

    result.solution.path_indices = mis_treewidth(conflict, lifted, options);
    return result;
}

Solution solve_tw(const PspInstance& instance, const std::optional<TreeDecomposition>& dec, const TwOptions& options) {
    return solve_tw_detailed(instance, dec, options).solution;
}

}  // namespace pspkit
