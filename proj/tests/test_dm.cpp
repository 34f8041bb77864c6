#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/dm.hpp"
#include "mcg/gen.hpp"
#include "mcg/matching.hpp"

using namespace mcg;

static const char* kPath4 =
    "part A a1 a2\n"
    "part B b1 b2\n"
    "edge a1 b1\n"
    "edge b1 a2\n"
    "edge a2 b2\n";

TEST_CASE("the 4-path splits into two matched pairs") {
    Graph g = parse_graph(kPath4);
    auto d = dm::dm_decomposition(g);
    REQUIRE(d.parts.size() == 2);
    auto dg = dm::dm_digraph(d);
    CHECK(dg.node_count == 2);
    REQUIRE(dg.arcs.size() == 1);

    auto family = dm::min_path_family(dg);
    CHECK(family.exact);
    CHECK(family.ell == 1);

    auto [augmented, plan] = dm::augment_to_matching_covered(g);
    CHECK(plan.ell == 1);
    REQUIRE(plan.new_edges.size() == 1);
    CHECK(g.label(plan.new_edges[0].first) == "b2");
    CHECK(g.label(plan.new_edges[0].second) == "a1");
    CHECK(augmented.edge_count() == 4);
    CHECK(matching::is_matching_covered(augmented));
}

TEST_CASE("matching-covered graphs are a single part with ell zero") {
    Graph g = gen::complete_bipartite(3, 3);
    auto d = dm::dm_decomposition(g);
    CHECK(d.parts.size() == 1);
    auto dg = dm::dm_digraph(d);
    CHECK(dg.arcs.empty());
    CHECK(dm::min_path_family(dg).ell == 0);
    auto [augmented, plan] = dm::augment_to_matching_covered(g);
    CHECK(plan.ell == 0);
    CHECK(augmented.edge_count() == g.edge_count());
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(dm::dm_decomposition(gen::cycle_graph(5)), PreconditionError);
    CHECK_THROWS_AS(dm::dm_decomposition(gen::petersen()), PreconditionError);
    // bipartite but no perfect matching
    Graph star = parse_graph("part A a\npart B b1 b2\nedge a b1\nedge a b2\n");
    CHECK_THROWS_AS(dm::dm_decomposition(star), PreconditionError);
}

TEST_CASE("parts are matching-covered and inter-part edges are forbidden") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        Graph g = gen::random_bipartite_matchable(4 + t % 2, 4 + t % 3, rng);
        auto d = dm::dm_decomposition(g);
        EdgeSet allowed = matching::allowed_edges(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (d.part_of[u] == d.part_of[v])
                CHECK(allowed.contains(e));
            else
                CHECK(!allowed.contains(e));
        }
        int covered = 0;
        for (const auto& part : d.parts) covered += static_cast<int>(part.size());
        CHECK(covered == g.vertex_count());
    }
}

TEST_CASE("the decomposition digraph is acyclic with a topological order") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        Graph g = gen::random_bipartite_matchable(5, 4 + t % 4, rng);
        auto dg = dm::dm_digraph(dm::dm_decomposition(g));
        std::vector<int> indeg(dg.node_count, 0);
        for (auto [a, b] : dg.arcs) ++indeg[b];
        std::vector<int> order;
        for (int round = 0; round < dg.node_count; ++round) {
            int pick = -1;
            for (int q = 0; q < dg.node_count && pick < 0; ++q)
                if (indeg[q] == 0) pick = q;
            REQUIRE(pick >= 0);
            indeg[pick] = -1;
            for (auto [a, b] : dg.arcs)
                if (a == pick) --indeg[b];
            order.push_back(pick);
        }
        CHECK(order.size() == static_cast<size_t>(dg.node_count));
    }
}

TEST_CASE("alternating paths between ends of deleted edge candidates") {
    std::vector<Graph> hosts;
    hosts.push_back(parse_graph(
        "part A a1 a2 a3\npart B b1 b2 b3\n"
        "edge a1 b1\nedge b1 a2\nedge a2 b2\nedge b2 a3\nedge a3 b3\nedge b3 a1\n"));
    hosts.push_back(gen::complete_bipartite(3, 3));
    for (const Graph& g : hosts)
        for (VertexId x : g.bipartition().side_a())
            for (VertexId y : g.bipartition().side_b()) {
                auto alt = dm::alternating_path(g, x, y);
                REQUIRE(alt.path.size() >= 2);
                CHECK(alt.path.front() == x);
                CHECK(alt.path.back() == y);
                // both end edges lie in m, edges alternate in/out of m
                for (size_t i = 0; i + 1 < alt.path.size(); ++i) {
                    EdgeId e = g.find_edge(alt.path[i], alt.path[i + 1]);
                    REQUIRE(e >= 0);
                    CHECK(alt.m.edges.contains(e) == (i % 2 == 0));
                }
                CHECK(alt.m.edges.contains(g.find_edge(alt.path[alt.path.size() - 2],
                                                       alt.path.back())));
            }
}

TEST_CASE("directed cuts of a two-node chain") {
    dm::DMDigraph chain;
    chain.node_count = 2;
    chain.arcs = {{0, 1}};
    auto cuts = dm::directed_cuts(chain);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].side_one == std::vector<int>{0});
    CHECK(cuts[0].arcs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(dm::directed_cuts(chain, true).size() == 1);
}

TEST_CASE("every directed cut meets some family path") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        Graph g = gen::random_bipartite_matchable(5, 4 + t % 3, rng);
        auto dg = dm::dm_digraph(dm::dm_decomposition(g));
        auto family = dm::min_path_family(dg);
        CHECK(family.exact);
        CHECK(static_cast<int>(family.paths.size()) == family.ell);
        for (const auto& cut : dm::directed_cuts(dg)) {
            std::set<std::pair<int, int>> cut_arcs(cut.arcs.begin(), cut.arcs.end());
            bool hit = family.paths.empty() && cut.arcs.empty();
            for (const auto& path : family.paths)
                for (size_t i = 0; i + 1 < path.size() && !hit; ++i)
                    if (cut_arcs.count({path[i], path[i + 1]})) hit = true;
            CHECK(hit);
        }
    }
}

TEST_CASE("augmentation adds exactly ell edges and lands matching-covered") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        Graph g = gen::random_bipartite_matchable(4 + t % 2, 4, rng);
        auto [augmented, plan] = dm::augment_to_matching_covered(g);
        CHECK(plan.exact);
        CHECK(augmented.edge_count() == g.edge_count() + plan.ell);
        CHECK(matching::is_matching_covered(augmented));
    }
}

TEST_CASE("sources and sinks partition the chain ends") {
    Graph g = parse_graph(kPath4);
    auto dg = dm::dm_digraph(dm::dm_decomposition(g));
    auto [sources, sinks] = dm::sources_and_sinks(dg);
    CHECK(sources.size() == 1);
    CHECK(sinks.size() == 1);
    CHECK(sources != sinks);
}
