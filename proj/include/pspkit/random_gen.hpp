#pragma once

#include <cstdint>
#include <random>

#include "pspkit/graph.hpp"

namespace pspkit {

// Seeded source with platform-independent draws (std distributions are not
// specified bit-exactly across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
    // Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

struct RandomParams {
    int n = 8;
    int extra_edges = 0;   // non-tree edges added on top of the spanning forest
    int path_count = 8;
    int max_len = 4;       // max edges per path
    std::uint64_t seed = 1;
    int max_degree = 0;    // 0 = unbounded
    int components = 1;    // trees in the spanning forest
    int k = 1;
    // Reject a path equal to an earlier one up to reversal. Small graphs may
    // then yield fewer than path_count paths.
    bool distinct_paths = false;
};

// Random spanning forest plus extra edges; paths are loop-erased random walks
// truncated at a random length in [1, max_len]. Deterministic in the seed.
// With a degree cap the requested extra edges may not all fit; the graph then
// gets as many as could be placed.
PspInstance gen_random(const RandomParams& params);

}  // namespace pspkit
