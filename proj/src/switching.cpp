#include "mcg/switching.hpp"

#include <queue>

namespace mcg::switching {

EdgeSet switch_at(const Graph& g, const EdgeSet& x, VertexId v) {
    g.check_vertex(v);
    for (EdgeId e : x)
        if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
    return g.incident_edges(v).symmetric_difference(x);
}

SwitchVerdict equivalent_to_empty(const Graph& g, const EdgeSet& x) {
    for (EdgeId e : x)
        if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
    // 2-color by parity: s(u) xor s(v) = [uv in x]; each component anchored at
    // its lowest vertex with parity 0.
    std::vector<int> parity(g.vertex_count(), -1);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (parity[root] != -1) continue;
        parity[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v)) {
                int want = parity[v] ^ (x.contains(inc.edge) ? 1 : 0);
                if (parity[inc.to] == -1) {
                    parity[inc.to] = want;
                    q.push(inc.to);
                } else if (parity[inc.to] != want) {
                    return {false, std::nullopt};
                }
            }
        }
    }
    SwitchWitness w;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (parity[v] == 1) w.u.push_back(v);
    return {true, std::move(w)};
}

SwitchVerdict equivalent_to_full(const Graph& g, const EdgeSet& x) {
    return equivalent_to_empty(g, x.complement(g.edge_count()));
}

SwitchVerdict are_switching_equivalent(const Graph& g, const EdgeSet& x, const EdgeSet& y) {
    // a series of switches at a multiset of vertices amounts to xor with
    // nabla of the odd-multiplicity set
    return equivalent_to_empty(g, x.symmetric_difference(y));
}

bool is_balanced(const SignedEdgeSet& s) {
    if (s.host == nullptr) throw PreconditionError("signed edge set has no host graph");
    return equivalent_to_empty(*s.host, s.negative).equivalent;
}

}  // namespace mcg::switching
