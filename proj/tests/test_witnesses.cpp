#include "doctest.h"

#include <set>

#include "kdcc/closed_forms.hpp"
#include "kdcc/witnesses.hpp"

using namespace kdcc;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> l) { return l; }

// Restoring any single vertex or edge of the witness must bring back a k-pair.
bool is_minimal(const Graph& g, const Witness& w) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        Witness smaller = w;
        smaller.vertices.erase(smaller.vertices.begin() + static_cast<std::ptrdiff_t>(i));
        if (verify_witness(g, smaller))
            return false;
    }
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        Witness smaller = w;
        smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(i));
        if (verify_witness(g, smaller))
            return false;
    }
    return true;
}

std::vector<FamilySpec> small_instances() {
    std::vector<FamilySpec> specs;
    for (std::uint64_t n = 1; n <= 12; ++n)
        specs.push_back(PathSpec{n});
    for (std::uint64_t n = 3; n <= 12; ++n)
        specs.push_back(CycleSpec{n});
    for (std::uint64_t n = 1; n <= 8; ++n)
        specs.push_back(CompleteSpec{n});
    for (std::uint64_t a = 1; a <= 5; ++a)
        for (std::uint64_t b = 1; b <= 5; ++b)
            specs.push_back(CompleteBipartiteSpec{a, b});
    specs.push_back(PerfectTreeSpec{2, 1});
    specs.push_back(PerfectTreeSpec{2, 2});
    specs.push_back(PerfectTreeSpec{3, 1});
    specs.push_back(PerfectTreeSpec{1, 5});
    return specs;
}

}  // namespace

TEST_CASE("path vertex witness") {
    CHECK(path_vertex_witness(7, 2).vertices == ids({2, 5}));  // labels 3, 6
    CHECK(path_vertex_witness(2, 2).vertices.empty());
    CHECK(path_vertex_witness(12, 3).vertices == ids({3, 7, 11}));  // labels 4, 8, 12
    CHECK(path_vertex_witness(7, 2).edges.empty());
}

TEST_CASE("cycle vertex witness") {
    CHECK(cycle_vertex_witness(7, 2).vertices.size() == 3);
    CHECK(cycle_vertex_witness(7, 2).vertices.front() == 0);
    CHECK(cycle_vertex_witness(5, 3).vertices.empty());
    CHECK(cycle_vertex_witness(12, 3).vertices.size() == 3);
}

TEST_CASE("bipartite vertex witness") {
    CHECK(bipartite_vertex_witness(3, 4, 2).vertices == ids({0, 1, 2}));
    CHECK(bipartite_vertex_witness(4, 3, 2).vertices == ids({4, 5, 6}));
    CHECK(bipartite_vertex_witness(1, 1, 2).vertices.empty());
    CHECK(bipartite_vertex_witness(2, 5, 4).vertices.empty());
}

TEST_CASE("tree vertex witness") {
    const PerfectTreeSpec t23{2, 3};
    const Witness levels24 = tree_vertex_witness(2, 3, 2);
    CHECK(levels24.vertices.size() == 5);
    for (VertexId v : levels24.vertices) {
        const auto level = tree_coordinate(t23, v).level;
        CHECK((level == 2 || level == 4));
    }
    const Witness level3 = tree_vertex_witness(2, 3, 4);
    CHECK(level3.vertices == ids({1, 2}));
    CHECK(verify_witness(build(t23), level3));
    CHECK(tree_vertex_witness(3, 1, 6).vertices.empty());
    CHECK_THROWS_AS(tree_vertex_witness(1, 3, 2), std::invalid_argument);
}

TEST_CASE("path mixed witness") {
    const Witness w1 = path_mixed_witness(7, 2, 1);
    CHECK(w1.vertices == ids({2}));
    CHECK(w1.edges.size() == 1);
    CHECK(w1.edges.front() == Edge{4, 5});  // trailing P_4 on ids 3..6 cut after two vertices

    const Witness w2 = path_mixed_witness(7, 2, 2);
    CHECK(w2.vertices == ids({2, 5}));
    CHECK(w2.edges.empty());

    const Witness w3 = path_mixed_witness(10, 3, 1);
    CHECK(w3.vertices == ids({3}));
    CHECK(w3.edges.size() == 1);
    CHECK(verify_witness(build(PathSpec{10}), w3));

    CHECK_THROWS_AS(path_mixed_witness(7, 2, 3), PRangeError);
}

TEST_CASE("cycle and bipartite mixed witnesses") {
    const Witness c = cycle_mixed_witness(8, 2, 1);
    CHECK(c.vertices.size() == 1);
    CHECK(c.edges.size() == 3);
    CHECK(verify_witness(build(CycleSpec{8}), c));

    const Witness opened = cycle_mixed_witness(8, 2, 0);
    CHECK(opened.vertices.empty());
    CHECK(opened.edges.size() == 4);
    CHECK(std::find(opened.edges.begin(), opened.edges.end(), Edge{0, 7}) != opened.edges.end());

    const Witness b = bipartite_mixed_witness(3, 4, 2, 1);
    CHECK(b.vertices == ids({0}));
    CHECK(b.edges.size() == 6);
    CHECK(verify_witness(build(CompleteBipartiteSpec{3, 4}), b));
    // Each surviving part-A vertex keeps exactly one edge.
    for (VertexId a : {1u, 2u}) {
        const auto touching = std::count_if(b.edges.begin(), b.edges.end(),
                                            [&](const Edge& e) { return e.u == a || e.v == a; });
        CHECK(touching == 3);
    }

    CHECK(bipartite_mixed_witness(1, 1, 2, 0).size() == 0);
    CHECK_THROWS_AS(cycle_mixed_witness(9, 5, 1), PRangeError);
    CHECK_THROWS_AS(mixed_witness(PerfectTreeSpec{2, 2}, 2, 0), NoClosedForm);
}

TEST_CASE("verify_witness") {
    const Graph p7 = build(PathSpec{7});
    CHECK(verify_witness(p7, path_vertex_witness(7, 2)));
    CHECK_FALSE(verify_witness(p7, Witness{{}, {}, 2}));
    CHECK(verify_witness(build(PerfectTreeSpec{2, 3}), tree_vertex_witness(2, 3, 2)));

    // Edges touching a deleted vertex break the vertices-first contract.
    CHECK_THROWS_AS(verify_witness(p7, Witness{{2}, {{1, 2}}, 2}), WitnessError);
    CHECK_THROWS_AS(verify_witness(p7, Witness{{}, {{0, 2}}, 2}), WitnessError);
    CHECK_THROWS_AS(verify_witness(p7, Witness{{7}, {}, 2}), WitnessError);
}

TEST_CASE("every construction is valid, optimal in size and minimal") {
    for (const FamilySpec& spec : small_instances()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 6; ++k) {
            CAPTURE(describe(spec));
            CAPTURE(k);
            const Witness w = vertex_witness(spec, k);
            CHECK(verify_witness(g, w));
            CHECK(BigInt(w.vertices.size()) == cv(spec, k).value);
            CHECK(is_minimal(g, w));

            if (std::holds_alternative<PerfectTreeSpec>(spec))
                continue;
            const auto last = cv(spec, k).value.convert_to<std::uint64_t>();
            for (std::uint64_t p = 0; p <= last; ++p) {
                CAPTURE(p);
                const Witness m = mixed_witness(spec, k, p);
                CHECK(verify_witness(g, m));
                CHECK(m.vertices.size() == p);
                CHECK(BigInt(m.edges.size()) == cm(spec, k, p).value);
                CHECK(is_minimal(g, m));
            }
        }
    }
}

TEST_CASE("tree witness leaves perfect subtrees of bounded height") {
    for (std::uint64_t r = 2; r <= 3; ++r) {
        for (std::uint64_t l = 1; l <= 4; ++l) {
            const PerfectTreeSpec t{r, l};
            const Graph g = build(t);
            for (unsigned k = 2; k <= 8; ++k) {
                const Witness w = tree_vertex_witness(r, l, k);
                CHECK(BigInt(w.vertices.size()) == tree_witness_cardinality(r, l, k));
                const InducedSubgraph rest = delete_vertices(g, w.vertices);
                const std::uint64_t max_height = (k + 1) / 2 - 1;
                for (const auto& block : components(rest.graph)) {
                    std::uint64_t top = 0, bottom = l + 2;
                    std::size_t edges = 0;
                    for (VertexId v : block) {
                        const auto level = tree_coordinate(t, rest.original_id[v]).level;
                        top = std::max(top, level);
                        bottom = std::min(bottom, level);
                        edges += rest.graph.degree(v);
                    }
                    CHECK(edges / 2 + 1 == block.size());
                    const std::uint64_t height = top - bottom;
                    CHECK(height <= max_height);
                    // perfect: every non-bottom vertex has r children in the block
                    std::uint64_t expected = 0, width = 1;
                    for (std::uint64_t h = 0; h <= height; ++h, width *= r)
                        expected += width;
                    CHECK(block.size() == expected);
                }
            }
        }
    }
}
