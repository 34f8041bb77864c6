#pragma once

#include "mcg/graph.hpp"

namespace mcg::switching {

// Signature on the host's edges, given by its negative part.
struct SignedEdgeSet {
    const Graph* host;
    EdgeSet negative;
};

// Vertex set U with X = nabla(U) (or E \ X = nabla(U), depending on the query).
struct SwitchWitness {
    std::vector<VertexId> u;
};

struct SwitchVerdict {
    bool equivalent;
    std::optional<SwitchWitness> witness;
};

// E(v) xor x.
EdgeSet switch_at(const Graph& g, const EdgeSet& x, VertexId v);

// Is x = nabla(U) for some U? Witness canonicalized: the lowest-id vertex of
// each component gets parity 0.
SwitchVerdict equivalent_to_empty(const Graph& g, const EdgeSet& x);

// Is E(g) \ x = nabla(U) for some U?
SwitchVerdict equivalent_to_full(const Graph& g, const EdgeSet& x);

// Is x xor y = nabla(U) for some U?
SwitchVerdict are_switching_equivalent(const Graph& g, const EdgeSet& x, const EdgeSet& y);

// Harary balance: every cycle carries an even number of negative edges.
bool is_balanced(const SignedEdgeSet& s);

}  // namespace mcg::switching
