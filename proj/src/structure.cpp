#include "mcg/structure.hpp"

#include <algorithm>

#include "mcg/matching.hpp"

namespace mcg::structure {

namespace {

void require_matching_covered(const Graph& g, const char* op) {
    if (!matching::is_matching_covered(g))
        throw PreconditionError(std::string(op) + ": graph is not matching-covered");
}

void require_bipartition(const Graph& g, const char* op) {
    if (!g.has_bipartition())
        throw PreconditionError(std::string(op) + ": graph has no attached bipartition");
}

}  // namespace

EdgeSet removable_edges(const Graph& g) {
    require_matching_covered(g, "removable_edges");
    std::vector<EdgeId> out;
    std::vector<char> edge_alive(g.edge_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        edge_alive[e] = 0;
        if (matching::is_matching_covered_masked(g, edge_alive)) out.push_back(e);
        edge_alive[e] = 1;
    }
    return EdgeSet(std::move(out));
}

bool is_strongly_coverable(const Graph& g) {
    require_matching_covered(g, "is_strongly_coverable");
    return removable_edges(g).size() == g.edge_count();
}

std::vector<BalancedCut> balanced_two_cuts(const Graph& g) {
    require_bipartition(g, "balanced_two_cuts");
    std::vector<BalancedCut> out;
    std::vector<char> alive(g.edge_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            alive[e] = alive[f] = 0;
            auto comps = components_masked(g, alive);
            alive[e] = alive[f] = 1;
            if (comps.size() != 2) continue;
            std::vector<char> in_one(g.vertex_count(), 0);
            for (VertexId v : comps[0]) in_one[v] = 1;
            // both removed edges must actually join the two sides
            auto crosses = [&](EdgeId x) {
                auto [u, v] = g.endpoints(x);
                return in_one[u] != in_one[v];
            };
            if (!crosses(e) || !crosses(f)) continue;
            auto balanced = [&](const std::vector<VertexId>& side) {
                int a = 0, b = 0;
                for (VertexId v : side) (g.bipartition().side[v] == 0 ? a : b)++;
                return a == b;
            };
            if (!balanced(comps[0]) || !balanced(comps[1])) continue;
            BalancedCut cut;
            cut.cut_edges = EdgeSet({e, f});
            cut.side_one = comps[0];
            cut.side_two = comps[1];
            for (EdgeId x : {e, f}) {
                auto [u, v] = g.endpoints(x);
                VertexId a_end = g.bipartition().side[u] == 0 ? u : v;
                (in_one[a_end] ? cut.a1b2_count : cut.b1a2_count)++;
            }
            out.push_back(std::move(cut));
        }
    }
    return out;
}

BalancedCutVerdict has_equivalent_class_bipartite(const Graph& g) {
    require_bipartition(g, "has_equivalent_class_bipartite");
    require_matching_covered(g, "has_equivalent_class_bipartite");
    auto cuts = balanced_two_cuts(g);
    if (cuts.empty()) return {false, std::nullopt};
    return {true, std::move(cuts.front())};
}

BalancedCutVerdict strongly_coverable_by_cuts(const Graph& g) {
    require_bipartition(g, "strongly_coverable_by_cuts");
    require_matching_covered(g, "strongly_coverable_by_cuts");
    int n = g.vertex_count();
    if (n > 20)
        throw LimitError("strongly_coverable_by_cuts: exhaustive cut scan capped at 20 vertices");
    // the single-edge graph admits no balanced bipartition, yet its edge is
    // not removable; the cut characterization starts at 4 vertices
    if (n == 2) return {false, std::nullopt};

    std::vector<char> in_u(n, 0);
    // vertex 0 pinned to side one, so each bipartition is visited once
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::fill(in_u.begin(), in_u.end(), 0);
        in_u[0] = 1;
        for (int v = 1; v < n; ++v)
            if (mask >> (v - 1) & 1) in_u[v] = 1;

        int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
        for (VertexId v = 0; v < n; ++v) {
            bool a_side = g.bipartition().side[v] == 0;
            if (in_u[v])
                (a_side ? a1 : b1)++;
            else
                (a_side ? a2 : b2)++;
        }
        if (a1 != b1 || a2 != b2 || a1 + b1 == 0 || a2 + b2 == 0) continue;

        // both sides must be connected for the cut to leave two components
        std::vector<EdgeId> cut;
        int a1b2 = 0, b1a2 = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (in_u[u] == in_u[v]) continue;
            cut.push_back(e);
            VertexId a_end = g.bipartition().side[u] == 0 ? u : v;
            (in_u[a_end] ? a1b2 : b1a2)++;
        }
        if (a1b2 >= 2 && b1a2 >= 2) continue;  // cannot violate, skip the BFS work

        std::vector<char> alive(g.edge_count(), 1);
        for (EdgeId e : cut) alive[e] = 0;
        auto comps = components_masked(g, alive);
        if (comps.size() != 2) continue;

        BalancedCut witness;
        witness.cut_edges = EdgeSet(std::move(cut));
        witness.side_one = comps[0];
        witness.side_two = comps[1];
        witness.a1b2_count = a1b2;
        witness.b1a2_count = b1a2;
        return {false, std::move(witness)};
    }
    return {true, std::nullopt};
}

bool is_brick(const Graph& g) {
    if (g.vertex_count() < 4) throw PreconditionError("is_brick needs at least 4 vertices");
    if (vertex_connectivity(g) < 3) return false;
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            vertex_alive[u] = vertex_alive[v] = 0;
            bool ok = matching::matchable_masked(g, vertex_alive, {});
            vertex_alive[u] = vertex_alive[v] = 1;
            if (!ok) return false;
        }
    return true;
}

bool is_brace(const Graph& g) {
    return is_bipartite(g).bipartite && matching::is_k_extendable(g, 2);
}

ClassificationReport classify(const Graph& g) {
    ClassificationReport r;
    r.matching_covered = matching::is_matching_covered(g);
    if (r.matching_covered) {
        auto classes = feasibility::equivalent_classes(g);
        r.no_equivalent_class = classes.nontrivial.empty();
        if (!classes.nontrivial.empty()) r.equivalent_class_witness = classes.nontrivial.front();

        auto removable = removable_edges(g);
        r.strongly_coverable = removable.size() == g.edge_count();
        if (!r.strongly_coverable)
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (!removable.contains(e)) {
                    r.non_removable_edge = e;
                    break;
                }

        r.two_extendable = matching::is_k_extendable(g, 2);
        if (!r.two_extendable && g.vertex_count() >= 6) {
            // first independent pair that fails to extend
            std::vector<char> vertex_alive(g.vertex_count(), 1);
            for (EdgeId e = 0; e < g.edge_count() && !r.non_extendable_pair; ++e)
                for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
                    auto [a, b] = g.endpoints(e);
                    auto [c, d] = g.endpoints(f);
                    if (a == c || a == d || b == c || b == d) continue;
                    vertex_alive[a] = vertex_alive[b] = vertex_alive[c] = vertex_alive[d] = 0;
                    bool ok = matching::matchable_masked(g, vertex_alive, {});
                    vertex_alive[a] = vertex_alive[b] = vertex_alive[c] = vertex_alive[d] = 1;
                    if (!ok) {
                        r.non_extendable_pair = {e, f};
                        break;
                    }
                }
        }
    }
    r.brick = g.vertex_count() >= 4 && is_brick(g);
    r.brace = is_brace(g);

    // nested-family law; a violation here is an implementation bug
    if ((r.two_extendable && !r.strongly_coverable) ||
        (r.strongly_coverable && !r.no_equivalent_class) ||
        (r.no_equivalent_class && !r.matching_covered))
        throw std::logic_error("classification violates the nested family chain");
    return r;
}

}  // namespace mcg::structure
