#include "pspkit/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <sstream>

#include "pspkit/errors.hpp"

namespace pspkit {

Graph ConflictGraph::to_graph() const {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [i, j] : edges) es.emplace_back(i, j);
    return Graph(vertex_count, std::move(es));
}

bool ConflictGraph::adjacent(int i, int j) const {
    const auto& a = adjacency[static_cast<std::size_t>(i)];
    return std::binary_search(a.begin(), a.end(), j);
}

ConflictGraph build_conflict_graph(const PspInstance& instance) {
    const auto path_edges = all_path_edges(instance);
    const int p = static_cast<int>(path_edges.size());
    ConflictGraph conflict;
    conflict.vertex_count = p;
    conflict.adjacency.resize(static_cast<std::size_t>(p));

    std::vector<std::vector<int>> users(static_cast<std::size_t>(instance.graph.edge_count()));
    for (int i = 0; i < p; ++i)
        for (EdgeId e : path_edges[static_cast<std::size_t>(i)]) users[static_cast<std::size_t>(e)].push_back(i);
    for (const auto& list : users)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) conflict.edges.emplace_back(list[a], list[b]);

    std::sort(conflict.edges.begin(), conflict.edges.end());
    conflict.edges.erase(std::unique(conflict.edges.begin(), conflict.edges.end()), conflict.edges.end());
    for (auto [i, j] : conflict.edges) {
        conflict.adjacency[static_cast<std::size_t>(i)].push_back(j);
        conflict.adjacency[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& a : conflict.adjacency) std::sort(a.begin(), a.end());
    return conflict;
}

std::string serialize_dimacs(const ConflictGraph& conflict) {
    std::ostringstream out;
    out << "p edge " << conflict.vertex_count << ' ' << conflict.edges.size() << '\n';
    for (auto [i, j] : conflict.edges) out << "e " << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

namespace {

using Mask = std::uint64_t;

class MisSearch {
public:
    explicit MisSearch(const ConflictGraph& g) : n_(g.vertex_count), nbr_(static_cast<std::size_t>(n_), 0) {
        for (auto [i, j] : g.edges) {
            nbr_[static_cast<std::size_t>(i)] |= Mask{1} << j;
            nbr_[static_cast<std::size_t>(j)] |= Mask{1} << i;
        }
    }

    Mask run() {
        const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        best_ = greedy(all);
        best_size_ = std::popcount(best_);
        search(all, 0);
        return best_;
    }

private:
    int degree_in(int v, Mask cand) const { return std::popcount(nbr_[static_cast<std::size_t>(v)] & cand); }

    Mask greedy(Mask cand) const {
        Mask chosen = 0;
        while (cand) {
            int pick = -1, pick_deg = 0;
            for (Mask rest = cand; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int d = degree_in(v, cand);
                if (pick == -1 || d < pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            chosen |= Mask{1} << pick;
            cand &= ~(nbr_[static_cast<std::size_t>(pick)] | (Mask{1} << pick));
        }
        return chosen;
    }

    // An independent set S has sum of degrees <= |E|, so |S| is at most the
    // longest prefix of ascending degrees whose sum stays within |E|.
    int degree_bound(Mask cand) const {
        std::array<int, 64> deg{};
        int count = 0, total = 0;
        for (Mask rest = cand; rest; rest &= rest - 1) {
            const int d = degree_in(std::countr_zero(rest), cand);
            deg[static_cast<std::size_t>(count++)] = d;
            total += d;
        }
        std::sort(deg.begin(), deg.begin() + count);
        const int edges = total / 2;
        int t = 0, sum = 0;
        while (t < count && sum + deg[static_cast<std::size_t>(t)] <= edges) sum += deg[static_cast<std::size_t>(t++)];
        return t;
    }

    void search(Mask cand, Mask current) {
        const int size = std::popcount(current);
        if (cand == 0) {
            if (size > best_size_) {
                best_ = current;
                best_size_ = size;
            }
            return;
        }
        if (size + degree_bound(cand) <= best_size_) return;

        int pivot = -1, pivot_deg = -1;
        for (Mask rest = cand; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = degree_in(v, cand);
            if (d > pivot_deg) {
                pivot = v;
                pivot_deg = d;
            }
        }
        if (pivot_deg == 0) {
            search(0, current | cand);
            return;
        }
        const Mask bit = Mask{1} << pivot;
        search(cand & ~(nbr_[static_cast<std::size_t>(pivot)] | bit), current | bit);
        search(cand & ~bit, current);
    }

    int n_;
    std::vector<Mask> nbr_;
    Mask best_ = 0;
    int best_size_ = 0;
};

}  // namespace

std::vector<int> max_independent_set(const ConflictGraph& conflict, int max_vertices) {
    if (conflict.vertex_count > std::min(max_vertices, 64))
        throw BudgetExceeded("bruteforce: " + std::to_string(conflict.vertex_count) +
                             " paths exceeds the limit of " + std::to_string(std::min(max_vertices, 64)));
    Mask chosen = MisSearch(conflict).run();
    std::vector<int> out;
    for (; chosen; chosen &= chosen - 1) out.push_back(std::countr_zero(chosen));
    return out;
}

Solution solve_bruteforce(const PspInstance& instance, const BruteforceOptions& options) {
    if (static_cast<int>(instance.paths.size()) > std::min(options.max_paths, 64))
        throw BudgetExceeded("bruteforce: " + std::to_string(instance.paths.size()) +
                             " paths exceeds the limit of " + std::to_string(std::min(options.max_paths, 64)));
    return Solution{max_independent_set(build_conflict_graph(instance), options.max_paths)};
}

}  // namespace pspkit
