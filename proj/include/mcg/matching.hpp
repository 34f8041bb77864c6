#pragma once

#include <functional>
#include <optional>

#include "mcg/graph.hpp"

namespace mcg::matching {

struct PerfectMatching {
    EdgeSet edges;
};

struct MatchingEnumeration {
    std::vector<PerfectMatching> matchings;  // deterministic lexicographic order
    bool truncated = false;
};

inline constexpr long kDefaultEnumerationLimit = 1'000'000;

bool has_perfect_matching(const Graph& g);

// All perfect matchings, branching on the lowest uncovered vertex, incident
// edges in ascending edge id. `truncated` is set iff the limit was hit.
MatchingEnumeration enumerate_perfect_matchings(const Graph& g,
                                                std::optional<long> limit = std::nullopt);

// Visitor form; return false from the callback to stop early.
void for_each_perfect_matching(const Graph& g,
                               const std::function<bool(const std::vector<EdgeId>&)>& visit);

// Edges contained in at least one perfect matching.
EdgeSet allowed_edges(const Graph& g);

bool is_matching_covered(const Graph& g);

bool is_k_extendable(const Graph& g, int k);

// ---- mask-based core, shared with the other modules -------------------------

// Perfect matching existence with vertices/edges masked out (empty mask = all
// alive). Dead vertices are simply not required to be covered.
bool matchable_masked(const Graph& g, const std::vector<char>& vertex_alive,
                      const std::vector<char>& edge_alive);

// Maximum matching as a mate array (-1 = unmatched), deterministic.
std::vector<VertexId> maximum_matching_masked(const Graph& g,
                                              const std::vector<char>& vertex_alive,
                                              const std::vector<char>& edge_alive);

// Matching-covered test on a masked subgraph (connectivity over alive part).
bool is_matching_covered_masked(const Graph& g, const std::vector<char>& edge_alive);

}  // namespace mcg::matching
