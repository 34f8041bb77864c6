#include "mcg/feasibility.hpp"

#include "mcg/matching.hpp"

namespace mcg::feasibility {

namespace {

void check_edge(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
}

// exists a perfect matching containing e but avoiding f
bool matching_with_without(const Graph& g, EdgeId e, EdgeId f) {
    auto [u, v] = g.endpoints(e);
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    std::vector<char> edge_alive(g.edge_count(), 1);
    vertex_alive[u] = vertex_alive[v] = 0;  // forces e
    edge_alive[f] = 0;
    return matching::matchable_masked(g, vertex_alive, edge_alive);
}

}  // namespace

ParitySpectrum parity_spectrum(const Graph& g, const EdgeSet& x, std::optional<long> limit) {
    for (EdgeId e : x) check_edge(g, e);
    if (!matching::matchable_masked(g, {}, {}))
        throw PreconditionError("parity_spectrum: graph has no perfect matching");
    long cap = limit.value_or(matching::kDefaultEnumerationLimit);
    ParitySpectrum out;
    out.complete = true;
    long seen = 0;
    matching::for_each_perfect_matching(g, [&](const std::vector<EdgeId>& m) {
        if (seen >= cap) {
            out.complete = false;
            return false;
        }
        ++seen;
        int par = 0;
        for (EdgeId e : m) par ^= x.contains(e) ? 1 : 0;
        out.parities.insert(par ? Parity::odd : Parity::even);
        return out.parities.size() < 2;  // both parities seen: spectrum settled
    });
    if (out.parities.size() == 2) out.complete = true;  // early exit is still exact
    return out;
}

bool is_feasible(const Graph& g, const EdgeSet& x, std::optional<long> limit) {
    if (!matching::is_matching_covered(g))
        throw PreconditionError("is_feasible: graph is not matching-covered");
    auto spectrum = parity_spectrum(g, x, limit);
    if (!spectrum.complete)
        throw LimitError("is_feasible: enumeration truncated, spectrum incomplete");
    return spectrum.parities.size() == 2;
}

bool edges_equivalent(const Graph& g, EdgeId e, EdgeId f) {
    check_edge(g, e);
    check_edge(g, f);
    if (!matching::is_matching_covered(g))
        throw PreconditionError("edges_equivalent: graph is not matching-covered");
    if (e == f) return true;
    return !matching_with_without(g, e, f) && !matching_with_without(g, f, e);
}

EquivalenceClasses equivalent_classes(const Graph& g) {
    if (!matching::is_matching_covered(g))
        throw PreconditionError("equivalent_classes: graph is not matching-covered");
    EquivalenceClasses out;
    std::vector<std::vector<EdgeId>> classes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool placed = false;
        for (auto& cls : classes) {
            // the relation is transitive, so comparing to a representative is enough
            if (!matching_with_without(g, cls.front(), e) &&
                !matching_with_without(g, e, cls.front())) {
                cls.push_back(e);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({e});
    }
    for (auto& cls : classes) {
        EdgeSet s{std::move(cls)};
        if (s.size() >= 2) out.nontrivial.push_back(s);
        out.classes.push_back(std::move(s));
    }
    return out;
}

}  // namespace mcg::feasibility
