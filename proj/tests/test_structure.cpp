#include <algorithm>
#include <vector>

#include "battery.hpp"
#include "doctest.h"
#include "pspkit/oracle.hpp"
#include "pspkit/structure.hpp"

using namespace pspkit;

namespace {

std::vector<Vertex> with_role(const StructureDecomposition& d, Role r) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < d.role.size(); ++v)
        if (d.role[v] == r) out.push_back(static_cast<Vertex>(v));
    return out;
}

}  // namespace

TEST_CASE("augment_clique adds a K4 on the anchor") {
    const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    const Augmented aug = augment_clique(tri, 0);
    CHECK(aug.graph.vertex_count() == 6);
    CHECK(aug.graph.edge_count() == 9);
    CHECK(aug.added == std::vector<Vertex>{3, 4, 5});
    CHECK(aug.graph.degree(0) == 5);
    CHECK(aug.graph.degree(1) == 2);
    CHECK(aug.graph.degree(2) == 2);
    for (Vertex z : aug.added) CHECK(aug.graph.degree(z) == 3);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const PspInstance inst = testing::fvs_case(seed);
        const Augmented a = augment_clique(inst.graph, choose_anchor(inst.graph));
        CHECK(a.graph.edge_count() == inst.graph.edge_count() + 6);
        const PspInstance lifted{a.graph, inst.paths, inst.k};
        CHECK(solve_bruteforce(lifted).size() == solve_bruteforce(inst).size());
    }
}

TEST_CASE("choose_anchor prefers high degree inside the 2-core") {
    // Star center 0 has degree 3 but is not on the cycle 3-4-5.
    const Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(choose_anchor(g) == 3);
    CHECK(choose_anchor(Graph(3, {{0, 1}, {1, 2}})) == 0);
}

TEST_CASE("two triangles sharing one vertex") {
    const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    const StructureDecomposition d = decompose_structure(g);
    CHECK(with_role(d, Role::T).empty());
    CHECK(with_role(d, Role::X) == std::vector<Vertex>{0});
    CHECK(with_role(d, Role::S) == std::vector<Vertex>{1, 2, 3, 4});
    REQUIRE(d.d_components.size() == 2);
    CHECK(d.t_components.empty());
    CHECK(d.d_components[0].vertices == std::vector<Vertex>{1, 2});
    CHECK(d.d_components[1].vertices == std::vector<Vertex>{3, 4});
    for (const auto& c : d.d_components) {
        CHECK(c.edges.size() == 1);
        REQUIRE(c.external_edges.size() == 2);
        for (EdgeId e : c.external_edges) CHECK((g.edge(e).u == 0 || g.edge(e).v == 0));
    }
    CHECK(d.core_edges.size() == 4);
    CHECK(d.lambda_core == 2);
}

TEST_CASE("triangle with a pendant leaf after augmentation") {
    const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    const Augmented aug = augment_clique(g, 0);
    const StructureDecomposition d = decompose_structure(aug.graph);
    CHECK(with_role(d, Role::T) == std::vector<Vertex>{3});
    CHECK(with_role(d, Role::X) == std::vector<Vertex>{0, 4, 5, 6});
    CHECK(with_role(d, Role::S) == std::vector<Vertex>{1, 2});
    REQUIRE(d.d_components.size() == 1);
    CHECK(d.d_components[0].vertices == std::vector<Vertex>{1, 2});
    REQUIRE(d.t_components.size() == 1);
    CHECK(d.t_components[0].vertices == std::vector<Vertex>{3});
    REQUIRE(d.t_components[0].external_edges.size() == 1);
    CHECK(aug.graph.edge(d.t_components[0].external_edges[0]) == Edge(0, 3));
}

TEST_CASE("a tree after augmentation peels down to the clique") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const PspInstance inst = testing::forest_case(seed);
        if (inst.graph.component_count() != 1) continue;
        const Vertex anchor = choose_anchor(inst.graph);
        const Augmented aug = augment_clique(inst.graph, anchor);
        const StructureDecomposition d = decompose_structure(aug.graph);
        CHECK(with_role(d, Role::S).empty());
        for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
            CHECK(d.role[v] == (v == anchor ? Role::X : Role::T));
        CHECK(d.x_count() == 4);
        CHECK(d.d_components.empty());
    }
}

TEST_CASE("core size bounds on augmented battery graphs") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PspInstance inst = testing::fvs_case(seed);
        const Augmented aug = augment_clique(inst.graph, choose_anchor(inst.graph));
        const StructureDecomposition d = decompose_structure(aug.graph);
        REQUIRE_FALSE(d.cores.empty());
        for (const auto& core : d.cores) {
            CHECK(core.lambda == core.edges - core.vertices + 1);
            CHECK(core.x_count <= 2 * core.lambda - 2);
            CHECK(core.s_component_count <= core.lambda + core.x_count - 1);
        }
        for (const auto& c : d.d_components) CHECK(c.external_edges.size() == 2);
        for (const auto& c : d.t_components) CHECK(c.external_edges.size() == 1);
        CHECK(std::is_sorted(d.core_edges.begin(), d.core_edges.end()));
    }
}

TEST_CASE("decomposition fails without a degree-three vertex") {
    const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(decompose_structure(cycle), std::logic_error);
}
