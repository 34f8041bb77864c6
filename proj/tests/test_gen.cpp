#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/gen.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

using namespace mcg;

TEST_CASE("isomorphism-free counts match the known sequence") {
    const std::vector<size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(gen::all_graphs(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(gen::all_graphs(9), LimitError);
}

TEST_CASE("named graphs have the right shape") {
    Graph p = gen::petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (VertexId v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    // girth 5: no two adjacent vertices share a neighbor
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
        auto [u, v] = p.endpoints(e);
        for (const auto& inc : p.incident(u)) CHECK((inc.to == v || !p.adjacent(inc.to, v)));
    }
    CHECK(gen::prism(5).vertex_count() == 10);
    CHECK(gen::complete_bipartite(3, 4).edge_count() == 12);
    CHECK(gen::complete_bipartite(3, 4).has_bipartition());
}

TEST_CASE("small balanced matching-covered bipartite corpus") {
    auto side1 = gen::connected_mc_bipartite(1);
    REQUIRE(side1.size() == 1);
    CHECK(side1[0].edge_count() == 1);
    auto side2 = gen::connected_mc_bipartite(2);
    REQUIRE(side2.size() == 1);  // only the 4-cycle
    CHECK(side2[0].edge_count() == 4);
    auto side3 = gen::connected_mc_bipartite(3);
    CHECK(side3.size() >= 4);  // 6-cycle, chorded cycle, near-complete, complete
    bool has_c6 = false, has_k33 = false;
    for (const Graph& g : side3) {
        CHECK(components(g).size() == 1);
        CHECK(matching::is_matching_covered(g));
        CHECK(g.has_bipartition());
        if (g.edge_count() == 6) has_c6 = true;
        if (g.edge_count() == 9) has_k33 = true;
    }
    CHECK(has_c6);
    CHECK(has_k33);
}

TEST_CASE("corpus members are pairwise distinct in size signature at side 4") {
    auto corpus = gen::connected_mc_bipartite(4);
    CHECK(corpus.size() > 10);
    for (const Graph& g : corpus) {
        CHECK(matching::is_matching_covered(g));
        CHECK(g.vertex_count() == 8);
    }
}

TEST_CASE("brick corpus members are bricks") {
    auto corpus = gen::brick_corpus();
    CHECK(corpus.size() >= 10);
    bool has_k4 = false, has_triangular_prism = false, has_petersen = false;
    for (const Graph& g : corpus) {
        CHECK(structure::is_brick(g));
        if (g.vertex_count() == 4 && g.edge_count() == 6) has_k4 = true;
        if (g.vertex_count() == 6 && g.edge_count() == 9 &&
            !is_bipartite(g).bipartite && vertex_connectivity(g) == 3)
            has_triangular_prism = true;
        if (g.vertex_count() == 10 && g.edge_count() == 15) has_petersen = true;
    }
    CHECK(has_k4);
    CHECK(has_triangular_prism);
    CHECK(has_petersen);
}

TEST_CASE("random regular bipartite samples are regular connected and reproducible") {
    std::mt19937_64 rng(71);
    Graph g = gen::random_regular_bipartite(6, 3, rng);
    CHECK(g.vertex_count() == 12);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
    CHECK(components(g).size() == 1);
    CHECK(matching::is_matching_covered(g));

    std::mt19937_64 rng_a(71), rng_b(71);
    Graph a = gen::random_regular_bipartite(6, 3, rng_a);
    Graph b = gen::random_regular_bipartite(6, 3, rng_b);
    CHECK(a.edges() == b.edges());
}

TEST_CASE("random chorded cycles are always matching-covered") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 30; ++t) {
        Graph g = gen::random_mc_bipartite(3 + t % 5, t % 6, rng);
        CHECK(matching::is_matching_covered(g));
    }
}

TEST_CASE("random matchable samples are matchable and connected") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 30; ++t) {
        Graph g = gen::random_bipartite_matchable(3 + t % 3, 4, rng);
        CHECK(components(g).size() == 1);
        CHECK(matching::has_perfect_matching(g));
    }
}
