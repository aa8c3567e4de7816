#pragma once

#include <map>
#include <string>

#include "pspkit/graph.hpp"
#include "pspkit/mcc.hpp"
#include "pspkit/tree_decomposition.hpp"

namespace pspkit {

struct ReductionOutput {
    PspInstance instance;  // instance.k == target
    int target = 0;
    // Gadget names use 1-based indices, e.g. "c[1,2]" or "long[2,1,3]".
    std::map<std::string, int> vertex_map;
    std::map<std::string, int> path_map;
};

// Vertex-cover-bounded construction. Gadget i holds C_i (k vertices), X_i
// (n-1 vertices, each joined to c[i,1]) and V_{i,1..n} (k vertices each),
// laid out contiguously in that order. Paths: n(n-1) long paths per gadget,
// then one short path per input edge in input order.
// Target: k(n-1) + k(k-1)/2. Requires k >= 2, n >= 2.
ReductionOutput reduce_mcc_vc(const MccInstance& mcc);

// Pathwidth-bounded construction. Gadget i holds the selection path P_i on
// 2k(n+1) vertices, W_i (n vertices), k verification rows of n vertices
// (row-major) and c[i,1..k]. Paths: n long paths per gadget, then one short
// path per input edge. Target: k + k(k-1)/2. Requires k >= 2, n >= 2.
ReductionOutput reduce_mcc_pw(const MccInstance& mcc);

// Path decomposition of reduce_mcc_pw's graph: one bag per edge of every P_i,
// gadgets concatenated, every c vertex in every bag.
TreeDecomposition pw_witness(const MccInstance& mcc);

}  // namespace pspkit
