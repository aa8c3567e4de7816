#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pspkit/graph.hpp"
#include "pspkit/structure.hpp"

namespace pspkit {

// One guess of the feedback-edge algorithm: a deficit bit per 2-external
// component and a family of disjoint nonempty blocks of core edges. Core edges
// outside every block form the implicit unused block. Blocks are labelled
// 1..l in order of their smallest core-edge position (restricted growth).
struct Guess {
    std::vector<std::uint8_t> deficit;          // indexed like d_components
    std::vector<std::vector<EdgeId>> blocks;    // each sorted

    int block_count() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const Guess&, const Guess&) = default;
};

// Every guess over the decomposition exactly once: 2^|D| deficit maps times
// all restricted-growth labelings of the core edges with a zero block.
// `visit` returns false to stop early. Returns the number visited.
std::uint64_t enumerate_guesses(const StructureDecomposition& decomp, const std::function<bool(const Guess&)>& visit);

// 2^|D| * Bell(|E_X| + 1), saturating at UINT64_MAX.
std::uint64_t guess_space_size(const StructureDecomposition& decomp);

// E(p) intersected with the core edges, sorted.
std::vector<EdgeId> path_type(const Graph& g, const SimplePath& p, const StructureDecomposition& decomp);

// One component of the auxiliary multigraph on blocks, as an ordered walk.
struct TypeSequence {
    std::vector<int> blocks;  // 0-based block indices into Guess::blocks
    bool cyclic = false;
};

struct GuessOutcome {
    Solution solution;   // crossing paths plus maximum residual packings
    int guaranteed_value = 0; // sum OPT(T) + sum (OPT(D) - deficit) + l
};

// Evaluation state for one (augmented, connected) instance and its
// decomposition, all held by value. Residual OPT values are memoised, so the
// methods are not const; one context must not be shared between threads.
class FvsContext {
public:
    FvsContext(const Graph& graph, const std::vector<SimplePath>& paths, StructureDecomposition decomp);

    const StructureDecomposition& decomposition() const noexcept { return decomp_; }
    const std::vector<EdgeId>& type_of(int path) const { return types_[path]; }
    int component_count() const noexcept { return static_cast<int>(comps_.size()); }
    // OPT of component c: D components first, then T components.
    int component_opt(int c) const { return opt_[c]; }

    bool is_compatible(std::span<const int> path_set, const Guess& guess);
    // Cheap screen: false if a block holds exactly one external
    // edge of three or more components, or no singleton-compatible path has
    // the block as its type.
    bool screen_guess(const Guess& guess);
    // Degree-3 vertices in the multigraph raise std::logic_error.
    std::vector<TypeSequence> build_type_sequences(const Guess& guess) const;
    std::optional<std::vector<int>> find_candidate(const TypeSequence& seq, const Guess& guess);
    std::optional<GuessOutcome> evaluate_guess(const Guess& guess);

    // The guesses the solver actually evaluates: partitions whose blocks are
    // all realised as some path's type (every other partition fails the
    // emptiness screen), with deficit bits enumerated only on components
    // that touch a block (an untouched component's bit changes nothing).
    std::uint64_t enumerate_realizable_guesses(const std::function<bool(const Guess&)>& visit) const;

private:
    struct Comp {
        const StructureDecomposition::Component* part;
        bool two_external;
        int d_index;  // index in d_components, -1 for T
    };

    int residual_opt(int comp, std::vector<EdgeId> removed);
    bool blocks_contain_type(const Guess& guess, int path) const;
    bool obs_screen(const Guess& guess) const;
    std::vector<int> pack_component(int comp, std::span<const EdgeId> removed) const;
    int block_of_type(const Guess& guess, int path) const;

    Graph graph_;
    std::vector<SimplePath> paths_;
    StructureDecomposition decomp_;
    std::vector<Comp> comps_;
    std::vector<int> comp_of_edge_;  // -1 for core edges
    std::vector<std::vector<EdgeId>> path_edges_;
    std::vector<std::vector<EdgeId>> types_;
    std::vector<std::vector<int>> comp_internal_;
    std::vector<int> opt_;
    std::map<std::pair<int, std::vector<EdgeId>>, int> residual_cache_;
};

struct FvsOptions {
    // Guard on the core edges of each component, not counting the six
    // clique-augmentation edges (no path can use those).
    int max_core_edges = 14;
};

struct FvsComponentReport {
    int vertices = 0;
    int paths = 0;
    int core_edges = 0;  // includes augmentation edges
    int d_components = 0;
    int t_components = 0;
    std::uint64_t guesses_evaluated = 0;
    int optimum = 0;
    std::vector<StructureDecomposition::CoreStats> cores;
};

struct FvsResult {
    Solution solution;
    std::vector<FvsComponentReport> components;
};

// Exact packing: per connected component, augment, decompose, evaluate every
// realizable guess and keep the largest assembled solution.
FvsResult solve_fvs_delta_detailed(const PspInstance& instance, const FvsOptions& options = {});
Solution solve_fvs_delta(const PspInstance& instance, const FvsOptions& options = {});

// The connected pieces the solver works on: vertex ids relabelled densely,
// each path assigned to the component of its vertices.
struct ComponentInstance {
    PspInstance instance;
    std::vector<Vertex> vertex_ids;  // local -> original
    std::vector<int> path_ids;       // local -> original
};
std::vector<ComponentInstance> split_components(const PspInstance& instance);

// Largest number of core edges (augmentation edges excluded) over the
// components, i.e. the quantity the budget guard limits.
int max_input_core_edges(const PspInstance& instance);

}  // namespace pspkit
