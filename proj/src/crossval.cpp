#include "mcg/crossval.hpp"

#include <algorithm>
#include <random>

#include "mcg/dm.hpp"
#include "mcg/feasibility.hpp"
#include "mcg/gen.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/switching.hpp"

namespace mcg::crossval {

namespace {

// rebuild the decomposition digraph; dm_digraph rejects cycles internally
void check_dm(const Graph& g, SuiteResult& r) {
    dm::dm_digraph(dm::dm_decomposition(g));
    ++r.dm_checked;
}

std::vector<uint64_t> matching_masks(const Graph& g) {
    auto en = matching::enumerate_perfect_matchings(g);
    std::vector<uint64_t> masks;
    for (const auto& m : en.matchings) {
        uint64_t bits = 0;
        for (EdgeId e : m.edges) bits |= uint64_t(1) << e;
        masks.push_back(bits);
    }
    return masks;
}

bool all_parities_equal(const std::vector<uint64_t>& matchings, uint64_t x) {
    int first = __builtin_popcountll(matchings.front() & x) & 1;
    for (uint64_t m : matchings)
        if ((__builtin_popcountll(m & x) & 1) != first) return false;
    return true;
}

}  // namespace

std::vector<Graph> mc_bipartite_corpus(int exhaustive_max, int samples, uint64_t seed) {
    std::vector<Graph> out;
    for (int p = 1; 2 * p <= exhaustive_max; ++p)
        for (auto& g : gen::connected_mc_bipartite(p)) out.push_back(std::move(g));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        int p = 4 + i % 4;  // 8..14 vertices
        std::uniform_int_distribution<int> extra(1, p);
        out.push_back(gen::random_mc_bipartite(p, extra(rng), rng));
    }
    return out;
}

SuiteResult suite_main2(int exhaustive_max, int samples, uint64_t seed) {
    SuiteResult r;
    r.suite = "main2";
    for (const Graph& g : mc_bipartite_corpus(exhaustive_max, samples, seed)) {
        ++r.instances;
        bool by_enumeration = !feasibility::equivalent_classes(g).nontrivial.empty();
        bool by_cuts = structure::has_equivalent_class_bipartite(g).value;
        check_dm(g, r);
        if (by_enumeration == by_cuts)
            ++r.agreements;
        else if (!r.counterexample)
            r.counterexample = serialize_graph(g);
    }
    return r;
}

SuiteResult suite_main3(int exhaustive_max, int samples, uint64_t seed) {
    SuiteResult r;
    r.suite = "main3";
    for (const Graph& g : mc_bipartite_corpus(exhaustive_max, samples, seed)) {
        ++r.instances;
        bool by_definition = structure::is_strongly_coverable(g);
        bool by_cuts = structure::strongly_coverable_by_cuts(g).value;
        check_dm(g, r);
        if (by_definition == by_cuts)
            ++r.agreements;
        else if (!r.counterexample)
            r.counterexample = serialize_graph(g);
    }
    return r;
}

SuiteResult suite_lr(int graph_count, int subset_count, uint64_t seed) {
    SuiteResult r;
    r.suite = "lr";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < graph_count; ++i) {
        int k = 3 + i % 2;
        int span = 8 - k;  // sides k..7, so at most 14 vertices
        int p = k + (i / 2) % span;
        Graph g = gen::random_regular_bipartite(p, k, rng);
        auto matchings = matching_masks(g);
        uint64_t all = g.edge_count() == 64 ? ~uint64_t(0)
                                            : (uint64_t(1) << g.edge_count()) - 1;
        std::uniform_int_distribution<uint64_t> pickbits;
        for (int s = 0; s < subset_count; ++s) {
            uint64_t xbits = pickbits(rng) & all;
            std::vector<EdgeId> ids;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (xbits >> e & 1) ids.push_back(e);
            EdgeSet x(std::move(ids));
            ++r.instances;
            bool non_feasible = all_parities_equal(matchings, xbits);
            bool to_empty = switching::equivalent_to_empty(g, x).equivalent;
            if (non_feasible == to_empty)
                ++r.agreements;
            else if (!r.counterexample)
                r.counterexample = serialize_graph(g);
        }
    }
    return r;
}

SuiteResult suite_lovasz() {
    SuiteResult r;
    r.suite = "lovasz";
    for (const Graph& g : gen::brick_corpus()) {
        ++r.instances;
        bool good = true;
        for (const EdgeSet& cls : feasibility::equivalent_classes(g).nontrivial) {
            if (cls.size() != 2 || !is_bipartite(delete_edges(g, cls).graph).bipartite)
                good = false;
        }
        if (good)
            ++r.agreements;
        else if (!r.counterexample)
            r.counterexample = serialize_graph(g);
    }
    return r;
}

SuiteResult suite_edge_bound(int instances, uint64_t seed) {
    SuiteResult r;
    r.suite = "edge-bound";
    std::mt19937_64 rng(seed);
    int gap_count = 0, gap_max = 0;
    for (int i = 0; i < instances; ++i) {
        int p = 3 + i % 3;  // 6..10 vertices
        Graph g = [&] {
            for (int attempt = 0;; ++attempt) {
                Graph cand = gen::random_bipartite_matchable(p, p - 1 + attempt % 3, rng);
                if (!matching::is_matching_covered(cand)) return cand;
                if (attempt > 200)
                    throw LimitError("suite_edge_bound: could not sample a non-covered graph");
            }
        }();
        ++r.instances;
        check_dm(g, r);
        auto [augmented, plan] = dm::augment_to_matching_covered(g);
        bool good = plan.exact && matching::is_matching_covered(augmented) &&
                    augmented.edge_count() == g.edge_count() + plan.ell;

        // brute-force minimal matching-covered supergraph over missing pairs
        std::vector<std::pair<VertexId, VertexId>> missing;
        for (VertexId a : g.bipartition().side_a())
            for (VertexId b : g.bipartition().side_b())
                if (!g.adjacent(a, b)) missing.push_back({a, b});
        int best = -1;
        for (int t = 1; t <= plan.ell && best < 0; ++t) {
            std::vector<int> comb(t);
            auto rec = [&](auto&& self, int idx, int lo) -> bool {
                if (idx == t) {
                    auto edges = g.edges();
                    for (int c : comb) edges.push_back(missing[c]);
                    Graph bigger(g.vertex_count(), std::move(edges));
                    return matching::is_matching_covered(bigger);
                }
                for (int c = lo; c < static_cast<int>(missing.size()); ++c) {
                    comb[idx] = c;
                    if (self(self, idx + 1, c + 1)) return true;
                }
                return false;
            };
            if (rec(rec, 0, 0)) best = t;
        }
        if (best < 0) good = false;  // bound violated: no supergraph within ell additions
        if (best >= 0 && best < plan.ell) {
            ++gap_count;
            gap_max = std::max(gap_max, plan.ell - best);
        }
        if (good)
            ++r.agreements;
        else if (!r.counterexample)
            r.counterexample = serialize_graph(g);
    }
    if (gap_count)
        r.notes.push_back(std::to_string(gap_count) +
                          " instances where a minimal supergraph beats the plan (largest gap " +
                          std::to_string(gap_max) + "), bound still holds");
    return r;
}

PetersenScan petersen_scan() {
    Graph g = gen::petersen();
    auto matchings = matching_masks(g);
    PetersenScan scan;
    scan.subsets = 1 << g.edge_count();
    for (uint64_t xbits = 0; xbits < (uint64_t(1) << g.edge_count()); ++xbits) {
        if (!all_parities_equal(matchings, xbits)) continue;
        ++scan.non_feasible;
        std::vector<EdgeId> ids;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (xbits >> e & 1) ids.push_back(e);
        EdgeSet x(std::move(ids));
        if (switching::equivalent_to_empty(g, x).equivalent) continue;
        if (switching::equivalent_to_full(g, x).equivalent) continue;
        if (scan.stubborn == 0) scan.example = x;
        ++scan.stubborn;
    }
    return scan;
}

namespace {

// connectivity over <= 16 vertices given adjacency bitmasks, with `removed`
// vertices ignored
bool mask_connected(const std::vector<uint16_t>& adj, uint16_t removed) {
    int n = static_cast<int>(adj.size());
    uint16_t alive = static_cast<uint16_t>(((1u << n) - 1) & ~removed);
    if (!alive) return true;
    uint16_t reach = alive & static_cast<uint16_t>(-alive);  // lowest alive vertex
    for (;;) {
        uint16_t next = reach;
        for (int v = 0; v < n; ++v)
            if (reach >> v & 1) next |= adj[v] & alive;
        if (next == reach) break;
        reach = next;
    }
    return reach == alive;
}

bool mask_three_connected(const std::vector<uint16_t>& adj) {
    int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        if (!mask_connected(adj, uint16_t(1) << u)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!mask_connected(adj, static_cast<uint16_t>((1u << u) | (1u << v)))) return false;
    return true;
}

Graph graph_from_rows(const std::vector<uint8_t>& rows, int p) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (rows[i] >> j & 1) edges.push_back({i, p + j});
    std::vector<std::string> labels;
    for (int i = 0; i < p; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 0; j < p; ++j) labels.push_back("b" + std::to_string(j));
    Graph g(2 * p, std::move(edges), std::move(labels));
    Bipartition b;
    b.side.assign(2 * p, 0);
    for (int j = 0; j < p; ++j) b.side[p + j] = 1;
    g.attach_bipartition(std::move(b));
    return g;
}

}  // namespace

std::optional<Graph> find_nec_not_sc(int max_side) {
    if (max_side > 6) throw LimitError("find_nec_not_sc: search capped at side 6");
    for (int p = 3; p <= max_side; ++p) {
        std::vector<uint8_t> pool;
        for (uint32_t m = 0; m < (1u << p); ++m)
            if (__builtin_popcount(m) >= 3) pool.push_back(static_cast<uint8_t>(m));
        // sweep by edge count so the first hit is smallest; the largest side is
        // capped where the known witnesses live
        int cap = p < 6 ? p * p : 21;
        std::optional<Graph> found;
        std::vector<int> pick(p, 0);
        auto try_candidate = [&](int total) {
            std::vector<uint8_t> rows;
            std::vector<int> col_deg(p, 0);
            for (int i = 0; i < p; ++i) {
                rows.push_back(pool[pick[i]]);
                for (int j = 0; j < p; ++j) col_deg[j] += rows.back() >> j & 1;
            }
            (void)total;
            for (int j = 0; j < p; ++j)
                if (col_deg[j] < 3) return;
            std::vector<uint16_t> adj(2 * p, 0);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    if (rows[i] >> j & 1) {
                        adj[i] |= uint16_t(1) << (p + j);
                        adj[p + j] |= uint16_t(1) << i;
                    }
            if (!mask_connected(adj, 0) || !mask_three_connected(adj)) return;
            Graph g = graph_from_rows(rows, p);
            if (!matching::is_matching_covered(g)) return;
            if (structure::removable_edges(g).size() == g.edge_count()) return;
            // 3-connected, so no 2-edge-cut exists; confirm on the cut side anyway
            if (structure::has_equivalent_class_bipartite(g).value) return;
            found = std::move(g);
        };
        auto rec = [&](auto&& self, int i, int lo, int budget) -> void {
            if (found) return;
            if (i == p) {
                if (budget == 0) try_candidate(0);
                return;
            }
            int left = p - i;
            for (int idx = lo; idx < static_cast<int>(pool.size()); ++idx) {
                int bits = __builtin_popcount(pool[idx]);
                if (bits > budget) continue;
                if (budget - bits > (left - 1) * p) continue;
                if ((left - 1) * 3 > budget - bits) continue;
                pick[i] = idx;
                self(self, i + 1, idx, budget - bits);
                if (found) return;
            }
        };
        for (int total = 3 * p; total <= cap && !found; ++total) rec(rec, 0, 0, total);
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Graph> find_sc_not_2ext(int max_vertices) {
    for (int n = 6; n <= max_vertices; n += 2) {
        for (const Graph& g : gen::all_graphs(n)) {
            if (components(g).size() != 1) continue;
            if (!matching::is_matching_covered(g)) continue;
            if (structure::removable_edges(g).size() != g.edge_count()) continue;
            if (matching::is_k_extendable(g, 2)) continue;
            return g;
        }
    }
    return std::nullopt;
}

}  // namespace mcg::crossval
