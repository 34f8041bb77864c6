#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/gen.hpp"
#include "mcg/switching.hpp"

using namespace mcg;

namespace {

// brute force over all vertex subsets: is x the boundary of some U?
bool equiv_empty_oracle(const Graph& g, const EdgeSet& x) {
    int n = g.vertex_count();
    REQUIRE(n <= 16);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> u;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) u.push_back(v);
        if (nabla(g, u) == x) return true;
    }
    return false;
}

EdgeSet random_subset(const Graph& g, std::mt19937_64& rng) {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (rng() & 1) ids.push_back(e);
    return EdgeSet(std::move(ids));
}

}  // namespace

TEST_CASE("switching at a vertex is an involution") {
    std::mt19937_64 rng(3);
    Graph g = gen::petersen();
    for (int trial = 0; trial < 30; ++trial) {
        EdgeSet x = random_subset(g, rng);
        VertexId v = static_cast<VertexId>(rng() % g.vertex_count());
        CHECK(switching::switch_at(g, switching::switch_at(g, x, v), v) == x);
    }
}

TEST_CASE("the incident star of v is the boundary of {v}") {
    Graph g = gen::cycle_graph(4);
    for (VertexId v = 0; v < 4; ++v) {
        auto verdict = switching::equivalent_to_empty(g, g.incident_edges(v));
        CHECK(verdict.equivalent);
        REQUIRE(verdict.witness);
        CHECK(nabla(g, verdict.witness->u) == g.incident_edges(v));
    }
}

TEST_CASE("equivalent_to_empty matches the subset oracle") {
    std::mt19937_64 rng(5);
    std::vector<Graph> hosts;
    hosts.push_back(gen::cycle_graph(5));
    hosts.push_back(gen::cycle_graph(6));
    hosts.push_back(gen::complete_bipartite(3, 3));
    hosts.push_back(gen::random_mc_bipartite(4, 3, rng));
    for (const Graph& g : hosts)
        for (int trial = 0; trial < 40; ++trial) {
            EdgeSet x = random_subset(g, rng);
            auto verdict = switching::equivalent_to_empty(g, x);
            CHECK(verdict.equivalent == equiv_empty_oracle(g, x));
            if (verdict.equivalent) {
                REQUIRE(verdict.witness);
                CHECK(nabla(g, verdict.witness->u) == x);
            }
        }
}

TEST_CASE("boundaries are always equivalent to empty") {
    std::mt19937_64 rng(9);
    Graph g = gen::petersen();
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<VertexId> u;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1) u.push_back(v);
        CHECK(switching::equivalent_to_empty(g, nabla(g, u)).equivalent);
    }
}

TEST_CASE("equivalent_to_full is equivalent_to_empty of the complement") {
    std::mt19937_64 rng(13);
    Graph g = gen::cycle_graph(6);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeSet x = random_subset(g, rng);
        CHECK(switching::equivalent_to_full(g, x).equivalent ==
              switching::equivalent_to_empty(g, x.complement(g.edge_count())).equivalent);
    }
    // even cycle: the full edge set is a boundary (take alternate vertices)
    CHECK(switching::equivalent_to_full(g, EdgeSet{}).equivalent);
    // odd cycle: it is not
    CHECK(!switching::equivalent_to_full(gen::cycle_graph(5), EdgeSet{}).equivalent);
}

TEST_CASE("pairwise equivalence is reflexive and consistent with xor") {
    std::mt19937_64 rng(17);
    Graph g = gen::complete_bipartite(3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        EdgeSet x = random_subset(g, rng), y = random_subset(g, rng);
        auto direct = switching::are_switching_equivalent(g, x, y);
        CHECK(direct.equivalent ==
              switching::equivalent_to_empty(g, x.symmetric_difference(y)).equivalent);
        CHECK(switching::are_switching_equivalent(g, x, x).equivalent);
    }
}

TEST_CASE("a switching step preserves the equivalence class") {
    std::mt19937_64 rng(19);
    Graph g = gen::petersen();
    for (int trial = 0; trial < 30; ++trial) {
        EdgeSet x = random_subset(g, rng);
        VertexId v = static_cast<VertexId>(rng() % g.vertex_count());
        CHECK(switching::are_switching_equivalent(g, x, switching::switch_at(g, x, v)).equivalent);
    }
}

TEST_CASE("balance agrees with boundary membership") {
    std::mt19937_64 rng(23);
    Graph g = gen::cycle_graph(6);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeSet x = random_subset(g, rng);
        switching::SignedEdgeSet s{&g, x};
        CHECK(switching::is_balanced(s) == switching::equivalent_to_empty(g, x).equivalent);
    }
}
