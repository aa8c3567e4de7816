#include <algorithm>
#include <vector>

#include "battery.hpp"
#include "doctest.h"
#include "pspkit/errors.hpp"
#include "pspkit/fvs_solver.hpp"
#include "pspkit/mcc.hpp"
#include "pspkit/oracle.hpp"
#include "pspkit/reductions.hpp"
#include "pspkit/tree_solver.hpp"

using namespace pspkit;

namespace {

// Two triangles sharing vertex 0: X = {0}, D components {1,2} and {3,4}.
Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

EdgeId eid(const Graph& g, Vertex a, Vertex b) { return *g.find_edge(a, b); }

std::vector<EdgeId> sorted_ids(const Graph& g, std::vector<Edge> edges) {
    std::vector<EdgeId> out;
    for (const Edge& e : edges) out.push_back(eid(g, e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

Guess make_guess(std::size_t d, std::vector<std::vector<EdgeId>> blocks, std::vector<std::uint8_t> deficit = {}) {
    Guess g;
    g.deficit = deficit.empty() ? std::vector<std::uint8_t>(d, 0) : std::move(deficit);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    g.blocks = std::move(blocks);
    return g;
}

// Six-cycle 0..5 with subdivided sides and a hub 6 joined to 0, 2, 4.
// X = {0, 2, 4, 6}; D components {1,7}, {3,8}, {5,9}; no T components.
Graph hub_graph() {
    return Graph(10, {{0, 1}, {1, 7}, {7, 2}, {2, 3}, {3, 8}, {8, 4}, {4, 5}, {5, 9}, {9, 0}, {0, 6}, {2, 6}, {4, 6}});
}

StructureDecomposition manual_decomp(int core_edges, int d_components) {
    StructureDecomposition d;
    for (int i = 0; i < core_edges; ++i) d.core_edges.push_back(i);
    d.d_components.resize(static_cast<std::size_t>(d_components));
    return d;
}

}  // namespace

TEST_CASE("guess enumeration counts") {
    auto count = [](const StructureDecomposition& d) {
        return enumerate_guesses(d, [](const Guess&) { return true; });
    };
    CHECK(count(manual_decomp(1, 0)) == 2);
    CHECK(count(manual_decomp(0, 1)) == 2);
    CHECK(count(manual_decomp(2, 0)) == 5);
    CHECK(count(manual_decomp(3, 2)) == 4 * 15);
    CHECK(guess_space_size(manual_decomp(3, 2)) == 60);
    CHECK(guess_space_size(manual_decomp(200, 0)) == UINT64_MAX);

    std::vector<Guess> seen;
    enumerate_guesses(manual_decomp(2, 0), [&](const Guess& g) {
        seen.push_back(g);
        return true;
    });
    CHECK(std::count(seen.begin(), seen.end(), make_guess(0, {{0, 1}})) == 1);
    CHECK(std::count(seen.begin(), seen.end(), make_guess(0, {{0}, {1}})) == 1);
    CHECK(std::count(seen.begin(), seen.end(), make_guess(0, {})) == 1);

    int visited = 0;
    CHECK(enumerate_guesses(manual_decomp(4, 0), [&](const Guess&) { return ++visited < 3; }) == 3);
}

TEST_CASE("path_type keeps only core edges") {
    const Graph g = bowtie();
    const StructureDecomposition d = decompose_structure(g);
    CHECK(path_type(g, SimplePath{{1, 2}}, d).empty());
    CHECK(path_type(g, SimplePath{{0, 1}}, d) == std::vector<EdgeId>{eid(g, 0, 1)});

    const Graph h = hub_graph();
    const StructureDecomposition dh = decompose_structure(h);
    CHECK(path_type(h, SimplePath{{7, 1, 0, 6, 2, 3, 8}}, dh) == sorted_ids(h, {{0, 1}, {0, 6}, {2, 6}, {2, 3}}));
}

TEST_CASE("compatibility") {
    const Graph g = bowtie();
    const std::vector<SimplePath> paths{SimplePath{{1, 0, 3}}, SimplePath{{1, 0, 3}}, SimplePath{{1, 2}}};
    FvsContext ctx(g, paths, decompose_structure(g));
    const Guess guess = make_guess(2, {sorted_ids(g, {{0, 1}, {0, 3}})});

    CHECK(ctx.is_compatible(std::vector<int>{}, guess));
    CHECK(ctx.is_compatible(std::vector<int>{0}, guess));
    CHECK_FALSE(ctx.is_compatible(std::vector<int>{0, 1}, guess));  // identical edge sets
    // an internal path has no block
    CHECK_FALSE(ctx.is_compatible(std::vector<int>{2}, guess));

    SUBCASE("a 1-external component must keep its optimum") {
        // bowtie plus a tail 0-5-6-7; T = {5,6,7} with one internal path on both edges
        const Graph t(8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {6, 7}});
        const std::vector<SimplePath> tp{SimplePath{{5, 6, 7}}, SimplePath{{1, 0, 5, 6}}, SimplePath{{1, 0, 5}}};
        const StructureDecomposition d = decompose_structure(t);
        REQUIRE(d.t_components.size() == 1);
        FvsContext tc(t, tp, d);
        const Guess deep = make_guess(2, {sorted_ids(t, {{0, 1}, {0, 5}})}, {1, 1});
        CHECK_FALSE(tc.is_compatible(std::vector<int>{1}, deep));
        CHECK(tc.is_compatible(std::vector<int>{2}, deep));
    }
    SUBCASE("a 2-external component may lose one when its deficit bit is set") {
        const std::vector<SimplePath> dp{SimplePath{{1, 2}}, SimplePath{{3, 0, 1, 2}}};
        FvsContext dc(g, dp, decompose_structure(g));
        const auto block = sorted_ids(g, {{0, 1}, {0, 3}});
        CHECK_FALSE(dc.is_compatible(std::vector<int>{1}, make_guess(2, {block}, {0, 0})));
        CHECK(dc.is_compatible(std::vector<int>{1}, make_guess(2, {block}, {1, 0})));
    }
}

TEST_CASE("guess screen") {
    SUBCASE("one external edge of three 1-external components") {
        const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
        const Augmented aug = augment_clique(star, 0);
        const std::vector<SimplePath> paths{SimplePath{{1, 0, 2}}};
        const StructureDecomposition d = decompose_structure(aug.graph);
        REQUIRE(d.t_components.size() == 3);
        FvsContext ctx(aug.graph, paths, d);
        CHECK_FALSE(ctx.screen_guess(make_guess(0, {sorted_ids(aug.graph, {{0, 1}, {0, 2}, {0, 3}})})));
        CHECK(ctx.screen_guess(make_guess(0, {sorted_ids(aug.graph, {{0, 1}, {0, 2}})})));
    }
    SUBCASE("both external edges of one 2-external component") {
        const Graph g = bowtie();
        FvsContext ctx(g, {SimplePath{{1, 0, 2}}}, decompose_structure(g));
        CHECK(ctx.screen_guess(make_guess(2, {sorted_ids(g, {{0, 1}, {0, 2}})})));
        // no path has this type
        CHECK_FALSE(ctx.screen_guess(make_guess(2, {sorted_ids(g, {{0, 1}, {0, 3}})})));
    }
}

TEST_CASE("type sequences") {
    const Graph g = bowtie();
    FvsContext ctx(g, {}, decompose_structure(g));
    const EdgeId e01 = eid(g, 0, 1), e02 = eid(g, 0, 2), e03 = eid(g, 0, 3), e04 = eid(g, 0, 4);

    auto seqs = ctx.build_type_sequences(make_guess(2, {{e01}}));
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].blocks == std::vector<int>{0});
    CHECK_FALSE(seqs[0].cyclic);

    seqs = ctx.build_type_sequences(make_guess(2, {{e01}, {e02}}));
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].blocks == std::vector<int>{0, 1});
    CHECK_FALSE(seqs[0].cyclic);

    // both components link the same two blocks
    seqs = ctx.build_type_sequences(make_guess(2, {{e01, e03}, {e02, e04}}));
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].blocks == std::vector<int>{0, 1});
    CHECK(seqs[0].cyclic);

    seqs = ctx.build_type_sequences(make_guess(2, {{e01}, {e03}}));
    CHECK(seqs.size() == 2);
}

TEST_CASE("candidate search over three layers") {
    const Graph h = hub_graph();
    const StructureDecomposition d = decompose_structure(h);
    REQUIRE(d.d_components.size() == 3);
    // layer 1: a; layer 2: b1 (clashes with a on 1-7), b2 (clashes with c on 3-8), b3; layer 3: c
    std::vector<SimplePath> paths{SimplePath{{6, 0, 1, 7}}, SimplePath{{1, 7, 2, 3}}, SimplePath{{7, 2, 3, 8}},
                                  SimplePath{{3, 8, 4, 5}}, SimplePath{{7, 2, 3}}};
    const Guess guess = make_guess(3, {path_type(h, paths[0], d), path_type(h, paths[1], d), path_type(h, paths[3], d)});

    auto brute = [&](FvsContext& ctx, const TypeSequence& seq) {
        std::vector<std::vector<int>> found;
        std::vector<std::vector<int>> layers(seq.blocks.size());
        for (std::size_t j = 0; j < seq.blocks.size(); ++j)
            for (int p = 0; p < static_cast<int>(paths.size()); ++p)
                if (ctx.type_of(p) == guess.blocks[seq.blocks[j]]) layers[j].push_back(p);
        for (int a : layers[0])
            for (int b : layers[1])
                for (int c : layers[2]) {
                    std::vector<int> triple{a, b, c};
                    if (ctx.is_compatible(triple, guess)) found.push_back(triple);
                }
        return found;
    };

    SUBCASE("no triple works") {
        paths.pop_back();
        FvsContext ctx(h, paths, d);
        const auto seqs = ctx.build_type_sequences(guess);
        REQUIRE(seqs.size() == 1);
        REQUIRE(seqs[0].blocks.size() == 3);
        CHECK_FALSE(seqs[0].cyclic);
        CHECK(brute(ctx, seqs[0]).empty());
        CHECK_FALSE(ctx.find_candidate(seqs[0], guess).has_value());
        CHECK_FALSE(ctx.evaluate_guess(guess).has_value());
    }
    SUBCASE("exactly one triple works") {
        FvsContext ctx(h, paths, d);
        const auto seqs = ctx.build_type_sequences(guess);
        REQUIRE(seqs.size() == 1);
        const auto found = brute(ctx, seqs[0]);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == std::vector<int>{0, 4, 3});
        const auto rho = ctx.find_candidate(seqs[0], guess);
        REQUIRE(rho.has_value());
        CHECK(*rho == found[0]);
        const auto outcome = ctx.evaluate_guess(guess);
        REQUIRE(outcome.has_value());
        CHECK(outcome->solution.path_indices == std::vector<int>{0, 3, 4});
        CHECK(outcome->guaranteed_value == 3);
    }
}

TEST_CASE("two-layer candidates") {
    const Graph g = bowtie();
    // every (0,1)-typed path clashes with every (0,2)-typed path on edge 1-2
    const std::vector<SimplePath> paths{SimplePath{{0, 1, 2}}, SimplePath{{0, 2, 1}}};
    FvsContext ctx(g, paths, decompose_structure(g));
    const Guess guess = make_guess(2, {{eid(g, 0, 1)}, {eid(g, 0, 2)}}, {1, 0});
    const auto seqs = ctx.build_type_sequences(guess);
    REQUIRE(seqs.size() == 1);
    CHECK_FALSE(ctx.find_candidate(seqs[0], guess).has_value());
    const auto one = ctx.build_type_sequences(make_guess(2, {{eid(g, 0, 1)}}, {1, 0}));
    CHECK(ctx.find_candidate(one[0], make_guess(2, {{eid(g, 0, 1)}}, {1, 0})) == std::vector<int>{0});
}

TEST_CASE("evaluate_guess") {
    SUBCASE("no blocks gives the sum of component optima") {
        const Graph g = bowtie();
        const std::vector<SimplePath> paths{SimplePath{{1, 2}}, SimplePath{{2, 1}}, SimplePath{{3, 4}}, SimplePath{{1, 0, 3}}};
        FvsContext ctx(g, paths, decompose_structure(g));
        const auto out = ctx.evaluate_guess(make_guess(2, {}));
        REQUIRE(out.has_value());
        int sum = 0;
        for (int c = 0; c < ctx.component_count(); ++c) sum += ctx.component_opt(c);
        CHECK(sum == 2);
        CHECK(out->solution.size() == 2);
        CHECK(out->guaranteed_value == 2);
    }
    SUBCASE("one crossing path paid for by the deficit") {
        const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
        const Augmented aug = augment_clique(g, 0);
        const std::vector<SimplePath> paths{SimplePath{{1, 2}}, SimplePath{{0, 1, 2}}};
        FvsContext ctx(aug.graph, paths, decompose_structure(aug.graph));
        const std::vector<EdgeId> type = ctx.type_of(1);
        CHECK_FALSE(ctx.evaluate_guess(make_guess(1, {type}, {0})).has_value());
        const auto out = ctx.evaluate_guess(make_guess(1, {type}, {1}));
        REQUIRE(out.has_value());
        CHECK(out->solution.path_indices == std::vector<int>{1});
        CHECK(out->guaranteed_value == 1);
        PspInstance inst{aug.graph, paths, 1};
        CHECK(solve_bruteforce(inst).size() == 1);
    }
}

TEST_CASE("realizable guesses reach the same optimum as the full space") {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 300 && compared < 25; ++seed) {
        const PspInstance inst = testing::fvs_case(seed);
        if (inst.graph.component_count() != 1) continue;
        const Augmented aug = augment_clique(inst.graph, choose_anchor(inst.graph));
        const StructureDecomposition d = decompose_structure(aug.graph);
        if (guess_space_size(d) > 200000) continue;
        FvsContext ctx(aug.graph, inst.paths, d);
        int full = 0, pruned = 0;
        enumerate_guesses(d, [&](const Guess& g) {
            if (auto out = ctx.evaluate_guess(g)) full = std::max(full, out->solution.size());
            return true;
        });
        ctx.enumerate_realizable_guesses([&](const Guess& g) {
            if (auto out = ctx.evaluate_guess(g)) pruned = std::max(pruned, out->solution.size());
            return true;
        });
        CHECK(full == pruned);
        CHECK(full == solve_bruteforce(inst).size());
        ++compared;
    }
    CHECK(compared >= 10);
}

TEST_CASE("screened guesses have degree at most two and sound candidates") {
    int long_sequences = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const PspInstance inst = testing::fvs_case(seed);
        for (const auto& piece : split_components(inst)) {
            const Augmented aug = augment_clique(piece.instance.graph, choose_anchor(piece.instance.graph));
            FvsContext ctx(aug.graph, piece.instance.paths, decompose_structure(aug.graph));
            ctx.enumerate_realizable_guesses([&](const Guess& g) {
                if (!ctx.screen_guess(g)) return true;
                std::vector<TypeSequence> seqs;
                CHECK_NOTHROW(seqs = ctx.build_type_sequences(g));
                for (const auto& seq : seqs) {
                    if (seq.blocks.size() >= 3) ++long_sequences;
                    if (auto rho = ctx.find_candidate(seq, g)) CHECK(ctx.is_compatible(*rho, g));
                }
                return true;
            });
        }
    }
    CHECK(long_sequences > 0);
}

TEST_CASE("solve_fvs_delta end to end") {
    SUBCASE("forests") {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const PspInstance inst = testing::forest_case(seed);
            CHECK(solve_fvs_delta(inst).size() == solve_forest(inst.graph, SubgraphRef::whole(inst.graph), inst.paths).size());
        }
    }
    SUBCASE("battery") {
        for (std::uint64_t seed = 1; seed <= 80; ++seed) {
            const PspInstance inst = testing::fvs_case(seed);
            const FvsResult r = solve_fvs_delta_detailed(inst);
            CHECK(verify_solution(inst, r.solution).valid);
            CHECK(r.solution.size() == solve_bruteforce(inst).size());
            CHECK(r.components.size() == static_cast<std::size_t>(inst.graph.component_count()));
        }
    }
    SUBCASE("reduced yes-instance") {
        MccInstance mcc{2, 2, {Edge(0, 2)}};
        const ReductionOutput red = reduce_mcc_vc(mcc);
        CHECK(solve_fvs_delta(red.instance, FvsOptions{40}).size() >= 3);
    }
    SUBCASE("budget guard") {
        const PspInstance inst = testing::fvs_case(3);
        const int core = max_input_core_edges(inst);
        CHECK_THROWS_AS(solve_fvs_delta(inst, FvsOptions{core - 1}), BudgetExceeded);
        CHECK_NOTHROW(solve_fvs_delta(inst, FvsOptions{core}));
    }
}

TEST_CASE("split_components relabels densely") {
    const Graph g(5, {{0, 3}, {1, 2}, {3, 4}});
    const PspInstance inst{g, {SimplePath{{1, 2}}, SimplePath{{0, 3, 4}}}, 1};
    const auto pieces = split_components(inst);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].vertex_ids == std::vector<Vertex>{0, 3, 4});
    CHECK(pieces[0].path_ids == std::vector<int>{1});
    CHECK(pieces[0].instance.paths[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(pieces[1].vertex_ids == std::vector<Vertex>{1, 2});
    CHECK(solve_fvs_delta(inst).path_indices == std::vector<int>{0, 1});
}
