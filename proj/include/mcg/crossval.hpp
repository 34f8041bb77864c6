#pragma once

#include <cstdint>

#include "mcg/graph.hpp"

namespace mcg::crossval {

// Outcome of running two independent procedures over a corpus. A populated
// counterexample means the procedures disagreed on that serialized graph.
struct SuiteResult {
    std::string suite;
    int instances = 0;
    int agreements = 0;
    int dm_checked = 0;  // instances whose decomposition digraph was rebuilt and checked acyclic
    std::vector<std::string> notes;
    std::optional<std::string> counterexample;

    bool ok() const { return !counterexample && instances > 0 && agreements == instances; }
};

// Connected matching-covered bipartite corpus: exhaustive up to
// `exhaustive_max` vertices plus `samples` seeded chorded even cycles with at
// most 14 vertices.
std::vector<Graph> mc_bipartite_corpus(int exhaustive_max, int samples, uint64_t seed);

// Equivalent-class existence: enumeration side vs balanced 2-edge-cut side.
SuiteResult suite_main2(int exhaustive_max, int samples, uint64_t seed);

// Strong coverability: removability of every edge vs the balanced-cut scan.
SuiteResult suite_main3(int exhaustive_max, int samples, uint64_t seed);

// Regular bipartite graphs: non-feasible iff switching-equivalent to the
// empty set, on `subset_count` random subsets of each of `graph_count` graphs.
SuiteResult suite_lr(int graph_count, int subset_count, uint64_t seed);

// Brick corpus: every nontrivial equivalent class has two edges and its
// removal leaves a bipartite graph.
SuiteResult suite_lovasz();

// Augmentation bound: the planned edge count matches the exact path family
// and is never beaten by the brute-force minimal matching-covered supergraph.
SuiteResult suite_edge_bound(int instances, uint64_t seed);

struct PetersenScan {
    int subsets = 0;
    int non_feasible = 0;
    // non-feasible but switching-equivalent to neither the empty nor the full set
    int stubborn = 0;
    EdgeSet example;
};

// All 2^15 edge subsets of the Petersen graph against its perfect matchings.
PetersenScan petersen_scan();

// Smallest 3-connected matching-covered bipartite graph with a non-removable
// edge, by exhaustive search over balanced sides up to `max_side`.
std::optional<Graph> find_nec_not_sc(int max_side = 6);

// Strongly coverable graph that is not 2-extendable, from the exhaustive
// small-graph corpus.
std::optional<Graph> find_sc_not_2ext(int max_vertices = 8);

}  // namespace mcg::crossval
