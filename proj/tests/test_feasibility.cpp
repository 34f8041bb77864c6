#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/feasibility.hpp"
#include "mcg/gen.hpp"
#include "mcg/matching.hpp"

using namespace mcg;
using feasibility::Parity;

namespace {

// enumeration-side oracle for pairwise edge equivalence
bool equivalent_oracle(const Graph& g, EdgeId e, EdgeId f) {
    for (const auto& m : matching::enumerate_perfect_matchings(g).matchings)
        if (m.edges.contains(e) != m.edges.contains(f)) return false;
    return true;
}

}  // namespace

TEST_CASE("single edge of a 4-cycle is feasible") {
    Graph g = gen::cycle_graph(4);
    CHECK(feasibility::is_feasible(g, EdgeSet({0})));
    auto spectrum = feasibility::parity_spectrum(g, EdgeSet({0}));
    CHECK(spectrum.parities == std::set<Parity>{Parity::even, Parity::odd});
    CHECK(spectrum.complete);
}

TEST_CASE("opposite edge pair of a 4-cycle is non-feasible") {
    Graph g = gen::cycle_graph(4);
    // the two matchings meet {e0, e2} in 2 and 0 edges, both even
    CHECK(!feasibility::is_feasible(g, EdgeSet({0, 2})));
    auto spectrum = feasibility::parity_spectrum(g, EdgeSet({0, 2}));
    CHECK(spectrum.parities == std::set<Parity>{Parity::even});
}

TEST_CASE("empty and full sets on an even cycle") {
    Graph g = gen::cycle_graph(6);
    CHECK(!feasibility::is_feasible(g, EdgeSet{}));
    // both matchings have size 3, odd
    auto spectrum = feasibility::parity_spectrum(g, EdgeSet::full(6));
    CHECK(spectrum.parities == std::set<Parity>{Parity::odd});
}

TEST_CASE("feasibility requires a matching-covered host") {
    CHECK_THROWS_AS(feasibility::is_feasible(gen::path_graph(4), EdgeSet({0})),
                    PreconditionError);
}

TEST_CASE("truncated spectra refuse to answer") {
    Graph g = gen::complete_bipartite(4, 4);
    CHECK_THROWS_AS(feasibility::is_feasible(g, EdgeSet({0, 5}), 1), LimitError);
}

TEST_CASE("feasibility is invariant under switching at a vertex") {
    std::mt19937_64 rng(29);
    Graph g = gen::complete_bipartite(3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<EdgeId> ids;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) ids.push_back(e);
        EdgeSet x(std::move(ids));
        VertexId v = static_cast<VertexId>(rng() % g.vertex_count());
        EdgeSet switched = g.incident_edges(v).symmetric_difference(x);
        CHECK(feasibility::is_feasible(g, x) == feasibility::is_feasible(g, switched));
    }
}

TEST_CASE("edges_equivalent agrees with the enumeration oracle") {
    std::mt19937_64 rng(31);
    std::vector<Graph> hosts;
    hosts.push_back(gen::cycle_graph(6));
    hosts.push_back(gen::complete_bipartite(3, 3));
    hosts.push_back(gen::prism(3));
    hosts.push_back(gen::petersen());
    for (int t = 0; t < 5; ++t) hosts.push_back(gen::random_mc_bipartite(4, 3, rng));
    for (const Graph& g : hosts)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = e + 1; f < g.edge_count(); ++f)
                CHECK(feasibility::edges_equivalent(g, e, f) == equivalent_oracle(g, e, f));
}

TEST_CASE("equivalence classes of the 6-cycle are the alternating triples") {
    auto classes = feasibility::equivalent_classes(gen::cycle_graph(6));
    REQUIRE(classes.classes.size() == 2);
    CHECK(classes.classes[0] == EdgeSet({0, 2, 4}));
    CHECK(classes.classes[1] == EdgeSet({1, 3, 5}));
    CHECK(classes.nontrivial.size() == 2);
}

TEST_CASE("complete bipartite graphs have only trivial classes") {
    auto classes = feasibility::equivalent_classes(gen::complete_bipartite(3, 3));
    CHECK(classes.classes.size() == 9);
    CHECK(classes.nontrivial.empty());
}

TEST_CASE("classes partition the edge set") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        Graph g = gen::random_mc_bipartite(5, 4, rng);
        auto classes = feasibility::equivalent_classes(g);
        std::vector<int> seen(g.edge_count(), 0);
        for (const auto& cls : classes.classes)
            for (EdgeId e : cls) ++seen[e];
        for (int c : seen) CHECK(c == 1);
        // class members are pairwise equivalent, representatives are not
        for (const auto& cls : classes.nontrivial)
            for (EdgeId e : cls)
                CHECK(feasibility::edges_equivalent(g, cls.ids().front(), e));
        for (size_t i = 0; i + 1 < classes.classes.size(); ++i)
            CHECK(!feasibility::edges_equivalent(g, classes.classes[i].ids().front(),
                                                 classes.classes[i + 1].ids().front()));
    }
}

TEST_CASE("a class meets each matching in all edges or none") {
    // so a nontrivial class is feasible exactly when its size is odd: the
    // alternating triples of the 6-cycle are feasible, any 2-subset is not
    Graph g = gen::cycle_graph(6);
    auto classes = feasibility::equivalent_classes(g);
    REQUIRE(!classes.nontrivial.empty());
    for (const auto& cls : classes.nontrivial) {
        for (const auto& m : matching::enumerate_perfect_matchings(g).matchings) {
            int hit = m.edges.intersection(cls).size();
            CHECK((hit == 0 || hit == cls.size()));
        }
        CHECK(feasibility::is_feasible(g, cls) == (cls.size() % 2 == 1));
        EdgeSet pair(std::vector<EdgeId>(cls.ids().begin(), cls.ids().begin() + 2));
        CHECK(!feasibility::is_feasible(g, pair));
    }
}
