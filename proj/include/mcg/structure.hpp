#pragma once

#include "mcg/feasibility.hpp"
#include "mcg/graph.hpp"

namespace mcg::structure {

struct BalancedCut {
    EdgeSet cut_edges;
    std::vector<VertexId> side_one;
    std::vector<VertexId> side_two;
    int a1b2_count = 0;  // |E[A1, B2]|
    int b1a2_count = 0;  // |E[B1, A2]|
};

struct ClassificationReport {
    bool matching_covered = false;
    bool no_equivalent_class = false;
    bool strongly_coverable = false;
    bool two_extendable = false;
    bool brick = false;
    bool brace = false;
    // evidence for the negative verdicts, when available
    std::optional<EdgeSet> equivalent_class_witness;
    std::optional<EdgeId> non_removable_edge;
    std::optional<std::pair<EdgeId, EdgeId>> non_extendable_pair;
};

EdgeSet removable_edges(const Graph& g);

bool is_strongly_coverable(const Graph& g);

// All 2-edge sets whose removal yields exactly two balanced components.
std::vector<BalancedCut> balanced_two_cuts(const Graph& g);

struct BalancedCutVerdict {
    bool value;
    std::optional<BalancedCut> witness;
};

// Existence of an equivalent class, decided via balanced 2-edge-cuts; the
// enumeration route lives in feasibility.
BalancedCutVerdict has_equivalent_class_bipartite(const Graph& g);

// Strong coverability by the balanced-cut characterization: false with the
// first cut having a direction count below 2. Exhaustive over vertex
// bipartitions with connected sides; refuses beyond 20 vertices.
BalancedCutVerdict strongly_coverable_by_cuts(const Graph& g);

bool is_brick(const Graph& g);

bool is_brace(const Graph& g);

ClassificationReport classify(const Graph& g);

}  // namespace mcg::structure
