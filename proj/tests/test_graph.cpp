#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/gen.hpp"
#include "mcg/graph.hpp"

using namespace mcg;

static const char* kC4 =
    "part A a1 a2\n"
    "part B b1 b2\n"
    "edge a1 b1\n"
    "edge b1 a2\n"
    "edge a2 b2\n"
    "edge b2 a1\n";

TEST_CASE("parse assigns ids in appearance order") {
    Graph g = parse_graph(kC4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.label(0) == "a1");
    CHECK(*g.vertex_of_label("b2") == 3);
    CHECK(g.has_bipartition());
    CHECK(g.bipartition().side[*g.vertex_of_label("b1")] == 1);
    CHECK(g.degree(*g.vertex_of_label("a1")) == 2);
}

TEST_CASE("serialize round trips") {
    Graph g = parse_graph(kC4);
    Graph h = parse_graph(serialize_graph(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        CHECK(h.find_edge(*h.vertex_of_label(g.label(u)), *h.vertex_of_label(g.label(v))) >= 0);
    }
    CHECK(h.has_bipartition());
}

TEST_CASE("isolated vertices survive the round trip") {
    Graph g = parse_graph("vertex x\nedge u v\n");
    CHECK(g.vertex_count() == 3);
    Graph h = parse_graph(serialize_graph(g));
    CHECK(h.vertex_count() == 3);
    CHECK(h.degree(*h.vertex_of_label("x")) == 0);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph("edge u u\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("edge u v\nedge v u\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("junk u v\n"), ParseError);
    try {
        parse_graph("edge u v\nedge u u\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    // an edge inside one part is rejected
    CHECK_THROWS_AS(parse_graph("part A u v\npart B w\nedge u v\n"), ParseError);
}

TEST_CASE("nabla is linear over symmetric difference") {
    std::mt19937_64 rng(7);
    Graph g = gen::random_mc_bipartite(5, 4, rng);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<char> in_u(g.vertex_count(), 0), in_w(g.vertex_count(), 0);
        for (int i = 0; i < 4; ++i) in_u[pick(rng)] = 1;
        for (int i = 0; i < 4; ++i) in_w[pick(rng)] = 1;
        std::vector<VertexId> u, w, sym;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (in_u[v]) u.push_back(v);
            if (in_w[v]) w.push_back(v);
            if (in_u[v] != in_w[v]) sym.push_back(v);
        }
        CHECK(nabla(g, u).symmetric_difference(nabla(g, w)) == nabla(g, sym));
    }
}

TEST_CASE("nabla of the empty set is empty") {
    Graph g = gen::cycle_graph(5);
    CHECK(nabla(g, {}).empty());
    std::vector<VertexId> all(5);
    for (int i = 0; i < 5; ++i) all[i] = i;
    CHECK(nabla(g, all).empty());
}

TEST_CASE("components are sorted and complete") {
    Graph g = parse_graph("edge u v\nedge x y\nvertex z\n");
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 1});
    CHECK(comps[1] == std::vector<VertexId>{2, 3});
    CHECK(comps[2] == std::vector<VertexId>{4});
}

TEST_CASE("bipartiteness witness") {
    auto even = is_bipartite(gen::cycle_graph(6));
    CHECK(even.bipartite);
    for (EdgeId e = 0; e < 6; ++e) {
        auto [u, v] = gen::cycle_graph(6).endpoints(e);
        CHECK(even.coloring[u] != even.coloring[v]);
    }

    Graph odd_g = gen::cycle_graph(5);
    auto odd = is_bipartite(odd_g);
    CHECK(!odd.bipartite);
    REQUIRE(odd.odd_walk.size() >= 2);
    CHECK(odd.odd_walk.front() == odd.odd_walk.back());
    CHECK((odd.odd_walk.size() - 1) % 2 == 1);
    for (size_t i = 0; i + 1 < odd.odd_walk.size(); ++i)
        CHECK(odd_g.adjacent(odd.odd_walk[i], odd.odd_walk[i + 1]));
}

TEST_CASE("vertex connectivity on known graphs") {
    CHECK(vertex_connectivity(gen::complete_graph(4)) == 3);
    CHECK(vertex_connectivity(gen::cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(gen::path_graph(4)) == 1);
    CHECK(vertex_connectivity(gen::petersen()) == 3);
    CHECK(vertex_connectivity(gen::complete_bipartite(3, 3)) == 3);
    // 14 vertices, so this exercises the flow-based branch
    CHECK(vertex_connectivity(gen::prism(7)) == 3);
}

TEST_CASE("edge_cut_sides splits on real 2-cuts only") {
    Graph g = gen::cycle_graph(6);
    auto split = edge_cut_sides(g, EdgeSet({0, 3}));
    REQUIRE(split.has_value());
    CHECK(split->first.size() + split->second.size() == 6);
    CHECK(!edge_cut_sides(g, EdgeSet({0})).has_value());
}

TEST_CASE("delete_edges and induced_subgraph keep the maps consistent") {
    Graph g = gen::complete_bipartite(2, 2);
    auto del = delete_edges(g, EdgeSet({1}));
    CHECK(del.graph.edge_count() == 3);
    for (EdgeId e = 0; e < del.graph.edge_count(); ++e)
        CHECK(del.graph.endpoints(e) == g.endpoints(del.old_edge_of[e]));
    CHECK(del.graph.has_bipartition());

    auto sub = induced_subgraph(g, {0, 2, 3});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    for (VertexId v = 0; v < 3; ++v)
        CHECK(sub.graph.label(v) == g.label(sub.old_vertex_of[v]));
}

TEST_CASE("attach_bipartition rejects non-crossing edges") {
    Graph g = gen::complete_graph(3);
    Bipartition b;
    b.side = {0, 1, 1};
    CHECK_THROWS_AS(g.attach_bipartition(std::move(b)), PreconditionError);
}
