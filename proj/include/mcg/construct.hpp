#pragma once

#include <map>

#include "mcg/graph.hpp"

namespace mcg::construct {

// Proper edge coloring with colors 1..k, indexed by edge id.
struct EdgeColoring {
    std::vector<int> color_of;
};

struct ConstructionResult {
    Graph graph;  // k-regular, non-bipartite, class 1
    int k = 0;
    int m = 0;
    EdgeSet link_edges;  // K, the 2m edges joining the copies
    // X, an even-size subset of K: the m-edge prefix, padded with one more
    // link edge when m is odd (an odd subset of an all-or-none class would be
    // feasible via the {0, |X|} intersection spectrum)
    EdgeSet test_set;
    EdgeColoring coloring;
    // vertex -> (copy index 1..m, role: u1/u2/v1/v2/other)
    std::vector<std::pair<int, std::string>> copy_labels;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// K_{k,k} with vertices a0..a(k-1), b0..b(k-1) and the canonical proper
// coloring c(a_i b_j) = ((i+j) mod k) + 1.
std::pair<Graph, EdgeColoring> color_complete_bipartite(int k);

struct BaseGraph {
    Graph graph;  // K_{k,k} minus two color-1 edges; Hamiltonicity verified
    VertexId u1, u2;  // degree k-1, in A
    VertexId v1, v2;  // degree k-1, in B
    EdgeColoring coloring;
    std::vector<VertexId> hamilton_cycle;
};

BaseGraph build_gk(int k);

ConstructionResult build_gkm(int k, int m);

// Same linking scheme over m copies of base - {e1, e2}; base must be k-regular
// bipartite with a Hamilton cycle avoiding the two same-colored disjoint edges.
ConstructionResult build_generalized(const Graph& base, const EdgeColoring& coloring, EdgeId e1,
                                     EdgeId e2, int m);

VerificationReport verify_construction(const ConstructionResult& r);

// graph file format plus `link-edge`/`test-edge`/`color` annotation lines
std::string serialize_construction(const ConstructionResult& r);
ConstructionResult parse_construction(const std::string& text);

// Hamilton cycle through all vertices, avoiding `forbidden` edges.
std::optional<std::vector<VertexId>> find_hamilton_cycle(const Graph& g,
                                                         const EdgeSet& forbidden = {});

}  // namespace mcg::construct
