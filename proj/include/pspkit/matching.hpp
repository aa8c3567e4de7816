#pragma once

#include <utility>
#include <vector>

namespace pspkit {

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm, O(V^3)). Adjacency order decides ties, so equal inputs always
// produce equal matchings.
class GeneralMatching {
public:
    explicit GeneralMatching(int node_count);

    void add_edge(int a, int b);
    int node_count() const noexcept { return static_cast<int>(adj_.size()); }

    // Matching size; mate() is valid afterwards. `excluded` nodes stay unmatched.
    int solve(const std::vector<char>& excluded = {});
    const std::vector<int>& mate() const noexcept { return mate_; }

private:
    int find_augmenting_path(int root);
    int lca(int a, int b);
    void mark_path(int v, int b, int child);

    std::vector<std::vector<int>> adj_;
    std::vector<char> excluded_;
    std::vector<int> mate_, parent_, base_, queue_;
    std::vector<char> used_, blossom_;
};

}  // namespace pspkit
