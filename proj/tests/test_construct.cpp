#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/construct.hpp"
#include "mcg/feasibility.hpp"
#include "mcg/matching.hpp"
#include "mcg/switching.hpp"

using namespace mcg;

TEST_CASE("colored complete bipartite base") {
    auto [g, coloring] = construct::color_complete_bipartite(3);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    // proper, and every color class is a perfect matching
    std::vector<int> per_color(4, 0);
    for (int c : coloring.color_of) {
        REQUIRE(c >= 1);
        REQUIRE(c <= 3);
        ++per_color[c];
    }
    for (int c = 1; c <= 3; ++c) CHECK(per_color[c] == 3);
}

TEST_CASE("the cubic base piece") {
    auto base = construct::build_gk(3);
    CHECK(base.graph.vertex_count() == 6);
    CHECK(base.graph.edge_count() == 7);
    CHECK(base.graph.degree(base.u1) == 2);
    CHECK(base.graph.degree(base.u2) == 2);
    CHECK(base.graph.degree(base.v1) == 2);
    CHECK(base.graph.degree(base.v2) == 2);
    CHECK(base.hamilton_cycle.size() == 6);
    // the cycle is really a cycle of the graph
    for (size_t i = 0; i < base.hamilton_cycle.size(); ++i)
        CHECK(base.graph.adjacent(base.hamilton_cycle[i],
                                  base.hamilton_cycle[(i + 1) % base.hamilton_cycle.size()]));
    CHECK_THROWS_AS(construct::build_gk(2), PreconditionError);
}

TEST_CASE("the smallest linked construction") {
    auto r = construct::build_gkm(3, 2);
    CHECK(r.graph.vertex_count() == 12);
    CHECK(r.graph.edge_count() == 18);  // m * k * k
    CHECK(r.link_edges.size() == 4);
    CHECK(r.test_set.size() == 2);
    for (VertexId v = 0; v < r.graph.vertex_count(); ++v) CHECK(r.graph.degree(v) == 3);
    auto rep = construct::verify_construction(r);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("the test set is non-feasible but not a boundary") {
    auto r = construct::build_gkm(3, 2);
    CHECK(matching::is_matching_covered(r.graph));
    CHECK(!feasibility::is_feasible(r.graph, r.test_set));
    CHECK(!switching::equivalent_to_empty(r.graph, r.test_set).equivalent);
    CHECK(!switching::equivalent_to_full(r.graph, r.test_set).equivalent);
    // the link edges form one equivalence class
    auto classes = feasibility::equivalent_classes(r.graph);
    bool found = false;
    for (const auto& cls : classes.nontrivial)
        if (cls == r.link_edges) found = true;
    CHECK(found);
}

TEST_CASE("verification passes across small parameters") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}}) {
        auto r = construct::build_gkm(k, m);
        CHECK(r.graph.vertex_count() == 2 * k * m);
        CHECK(r.graph.edge_count() == m * k * k);
        // the test set is padded to even size for odd m
        CHECK(r.test_set.size() == (m % 2 == 0 ? m : m + 1));
        auto rep = construct::verify_construction(r);
        INFO("k=", k, " m=", m);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("parameter bounds") {
    CHECK_THROWS_AS(construct::build_gkm(2, 2), PreconditionError);
    CHECK_THROWS_AS(construct::build_gkm(3, 1), PreconditionError);
}

TEST_CASE("serialize and parse round trip") {
    auto r = construct::build_gkm(3, 2);
    auto r2 = construct::parse_construction(construct::serialize_construction(r));
    CHECK(r2.graph.vertex_count() == r.graph.vertex_count());
    CHECK(r2.graph.edge_count() == r.graph.edge_count());
    CHECK(r2.k == r.k);
    CHECK(r2.m == r.m);
    CHECK(r2.link_edges.size() == r.link_edges.size());
    CHECK(r2.test_set.size() == r.test_set.size());
    // label pairs of the annotations survive
    auto labels = [](const construct::ConstructionResult& c, const EdgeSet& s) {
        std::set<std::pair<std::string, std::string>> out;
        for (EdgeId e : s) {
            auto [u, v] = c.graph.endpoints(e);
            std::string a = c.graph.label(u), b = c.graph.label(v);
            out.insert({std::min(a, b), std::max(a, b)});
        }
        return out;
    };
    CHECK(labels(r, r.link_edges) == labels(r2, r2.link_edges));
    CHECK(labels(r, r.test_set) == labels(r2, r2.test_set));
    CHECK(construct::verify_construction(r2).all_pass());
}

TEST_CASE("generalized assembly from a hand-picked base") {
    auto [base, coloring] = construct::color_complete_bipartite(4);
    EdgeId e1 = base.find_edge(0, 4);      // a0 b0
    EdgeId e2 = base.find_edge(1, 7);      // a1 b3, same color
    auto r = construct::build_generalized(base, coloring, e1, e2, 2);
    CHECK(r.graph.vertex_count() == 16);
    CHECK(construct::verify_construction(r).all_pass());
    // sharing a vertex is rejected
    EdgeId clash = base.find_edge(0, 5);
    CHECK_THROWS_AS(construct::build_generalized(base, coloring, e1, clash, 2),
                    PreconditionError);
}

TEST_CASE("hamilton cycle search respects forbidden edges") {
    auto [g, coloring] = construct::color_complete_bipartite(3);
    auto cycle = construct::find_hamilton_cycle(g);
    REQUIRE(cycle);
    CHECK(cycle->size() == 6);
    Graph c4 = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(construct::find_hamilton_cycle(c4));
    CHECK(!construct::find_hamilton_cycle(c4, EdgeSet({0})));
}
