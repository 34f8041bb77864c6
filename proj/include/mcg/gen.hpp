#pragma once

#include <random>

#include "mcg/graph.hpp"

namespace mcg::gen {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// bipartition attached, labels a0.., b0..
Graph complete_bipartite(int p, int q);
// C_n x K_2
Graph prism(int n);
Graph petersen();

// All graphs on n vertices up to isomorphism, by vertex augmentation with
// canonical-form deduplication. Refuses n > 8.
std::vector<Graph> all_graphs(int n);

// Connected matching-covered bipartite graphs with sides (p, p), one per
// isomorphism class, bipartition attached. Refuses p > 5.
std::vector<Graph> connected_mc_bipartite(int p);

// All bricks on at most 8 vertices plus the known 10-vertex members used in
// the test suites (Petersen graph, pentagonal prism).
std::vector<Graph> brick_corpus();

// Union of k uniformly random permutation matchings between sides of size p,
// resampled until simple and connected.
Graph random_regular_bipartite(int p, int k, std::mt19937_64& rng);

// Even cycle C_{2p} plus `extra` random chords; always matching-covered.
Graph random_mc_bipartite(int p, int extra, std::mt19937_64& rng);

// Perfect matching a_i b_i plus `extra` random cross edges, resampled until
// connected. Matchable but generally not matching-covered.
Graph random_bipartite_matchable(int p, int extra, std::mt19937_64& rng);

}  // namespace mcg::gen
