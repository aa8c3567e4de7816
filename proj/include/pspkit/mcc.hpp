#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pspkit/graph.hpp"

namespace pspkit {

// Multicolored clique input: k groups of n vertices, vertex j of group i has
// id i*n + j. Edges keep their input order; each is stored as (min, max).
struct MccInstance {
    int k = 0;
    int n = 0;
    std::vector<Edge> edges;

    int group(Vertex v) const { return v / n; }
    int index_in_group(Vertex v) const { return v % n; }
    friend bool operator==(const MccInstance&, const MccInstance&) = default;
};

// Throws std::invalid_argument on intra-group, duplicate or out-of-range edges.
void check_mcc(const MccInstance& mcc);

// "mcc 1", then "<k> <n> <m>", then m lines "<u> <v>". '#' starts a comment.
MccInstance parse_mcc(std::istream& in);
MccInstance parse_mcc_string(std::string_view text);
std::string serialize_mcc(const MccInstance& mcc);

// All k*(k-1)/2 * n^2 cross-group pairs, lexicographic.
std::vector<Edge> cross_pairs(int k, int n);
// The instance whose edges are the cross pairs selected by `mask` bit i.
MccInstance mcc_from_mask(int k, int n, std::uint64_t mask);
// Each cross pair kept independently with probability p.
MccInstance random_mcc(int k, int n, double p, std::uint64_t seed);

// One vertex per group, ascending, pairwise adjacent; nullopt when none
// exists. Throws BudgetExceeded when n^k exceeds `budget`.
std::optional<std::vector<Vertex>> solve_mcc_bruteforce(const MccInstance& mcc, std::uint64_t budget = 10'000'000);

}  // namespace pspkit
