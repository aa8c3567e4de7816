#include "pspkit/matching.hpp"

#include <stdexcept>

namespace pspkit {

GeneralMatching::GeneralMatching(int node_count) : adj_(static_cast<std::size_t>(node_count)) {}

void GeneralMatching::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("matching: self-loop");
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
}

int GeneralMatching::lca(int a, int b) {
    std::vector<char> seen(adj_.size(), 0);
    for (;;) {
        a = base_[a];
        seen[a] = 1;
        if (mate_[a] == -1) break;
        a = parent_[mate_[a]];
    }
    for (;;) {
        b = base_[b];
        if (seen[b]) return b;
        b = parent_[mate_[b]];
    }
}

void GeneralMatching::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

int GeneralMatching::find_augmenting_path(int root) {
    const int n = node_count();
    used_.assign(static_cast<std::size_t>(n), 0);
    parent_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) base_[i] = i;
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const int v = queue_[head];
        for (int to : adj_[static_cast<std::size_t>(v)]) {
            if (excluded_[to]) continue;
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                const int cur = lca(v, to);
                blossom_.assign(static_cast<std::size_t>(n), 0);
                mark_path(v, cur, to);
                mark_path(to, cur, v);
                for (int i = 0; i < n; ++i) {
                    if (blossom_[base_[i]]) {
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (mate_[to] == -1) return to;
                used_[mate_[to]] = 1;
                queue_.push_back(mate_[to]);
            }
        }
    }
    return -1;
}

int GeneralMatching::solve(const std::vector<char>& excluded) {
    const int n = node_count();
    excluded_ = excluded;
    excluded_.resize(static_cast<std::size_t>(n), 0);
    mate_.assign(static_cast<std::size_t>(n), -1);
    base_.assign(static_cast<std::size_t>(n), 0);

    int size = 0;
    // Greedy start in adjacency order.
    for (int v = 0; v < n; ++v) {
        if (excluded_[v] || mate_[v] != -1) continue;
        for (int to : adj_[static_cast<std::size_t>(v)]) {
            if (!excluded_[to] && mate_[to] == -1) {
                mate_[v] = to;
                mate_[to] = v;
                ++size;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (excluded_[v] || mate_[v] != -1) continue;
        int end = find_augmenting_path(v);
        if (end == -1) continue;
        ++size;
        while (end != -1) {
            const int pv = parent_[end];
            const int ppv = mate_[pv];
            mate_[end] = pv;
            mate_[pv] = end;
            end = ppv;
        }
    }
    return size;
}

}  // namespace pspkit
