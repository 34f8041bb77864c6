#pragma once

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg::dm {

struct DMDecomposition {
    const Graph* host = nullptr;
    std::vector<std::vector<VertexId>> parts;  // Q_1..Q_k as sorted vertex sets
    std::vector<int> part_of;                  // vertex -> part index
};

struct DMDigraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> arcs;  // (q_i, q_j), sorted, no loops/duplicates
};

struct DirectedCut {
    std::vector<int> side_one;  // tails of every crossing arc live here
    std::vector<int> side_two;
    std::vector<std::pair<int, int>> arcs;
};

struct PathFamily {
    bool exact = true;  // false when the size is only a heuristic upper bound
    int ell = 0;
    std::vector<std::vector<int>> paths;  // node sequences in the DM digraph
};

struct AugmentationPlan {
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<VertexId, VertexId>> new_edges;  // (B-vertex, A-vertex)
    int ell = 0;
    bool exact = true;
};

struct AlternatingPath {
    std::vector<VertexId> path;  // x .. y
    matching::PerfectMatching m;
};

// An M-alternating x-y path whose end edges lie in M, for some perfect
// matching M of the matching-covered bipartite host.
AlternatingPath alternating_path(const Graph& g, VertexId x, VertexId y);

DMDecomposition dm_decomposition(const Graph& g);

DMDigraph dm_digraph(const DMDecomposition& d);

// All node bipartitions with every crossing arc in one direction (and at least
// one such arc). `strict` additionally requires both sides weakly connected.
std::vector<DirectedCut> directed_cuts(const DMDigraph& d, bool strict = false);

// Minimum family of directed paths meeting every directed cut; exact up to 12
// nodes, a source/sink pairing upper bound beyond.
PathFamily min_path_family(const DMDigraph& d);

std::pair<Graph, AugmentationPlan> augment_to_matching_covered(const Graph& g);

std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(const DMDigraph& d);

}  // namespace mcg::dm
