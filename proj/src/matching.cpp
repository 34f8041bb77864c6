#include "mcg/matching.hpp"

#include <algorithm>
#include <queue>

namespace mcg::matching {

namespace {

// per-vertex incident edges sorted by edge id (Graph::incident sorts by neighbor)
std::vector<std::vector<Graph::Incidence>> incidence_by_edge_id(const Graph& g) {
    std::vector<std::vector<Graph::Incidence>> adj(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    return adj;  // already ascending by edge id
}

bool alive(const std::vector<char>& mask, int i) { return mask.empty() || mask[i]; }

// ---- Hopcroft-Karp on the attached bipartition ------------------------------

class HopcroftKarp {
public:
    HopcroftKarp(const Graph& g, const std::vector<char>& vertex_alive,
                 const std::vector<char>& edge_alive)
        : g_(g), valive_(vertex_alive), ealive_(edge_alive), mate_(g.vertex_count(), -1),
          level_(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.bipartition().side[v] == 0 && alive(valive_, v)) left_.push_back(v);
    }

    std::vector<VertexId> run() {
        while (bfs()) {
            for (VertexId u : left_)
                if (mate_[u] == -1) dfs(u);
        }
        return mate_;
    }

private:
    bool bfs() {
        std::queue<VertexId> q;
        for (VertexId u : left_) {
            level_[u] = mate_[u] == -1 ? 0 : -1;
            if (mate_[u] == -1) q.push(u);
        }
        bool reachable_free = false;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (const auto& inc : g_.incident(u)) {
                if (!alive(ealive_, inc.edge) || !alive(valive_, inc.to)) continue;
                VertexId w = mate_[inc.to];
                if (w == -1)
                    reachable_free = true;
                else if (level_[w] == -1) {
                    level_[w] = level_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(VertexId u) {
        for (const auto& inc : g_.incident(u)) {
            if (!alive(ealive_, inc.edge) || !alive(valive_, inc.to)) continue;
            VertexId w = mate_[inc.to];
            if (w == -1 || (level_[w] == level_[u] + 1 && dfs(w))) {
                mate_[u] = inc.to;
                mate_[inc.to] = u;
                return true;
            }
        }
        level_[u] = -1;
        return false;
    }

    const Graph& g_;
    const std::vector<char>& valive_;
    const std::vector<char>& ealive_;
    std::vector<VertexId> mate_;
    std::vector<int> level_;
    std::vector<VertexId> left_;
};

// ---- blossom algorithm for general graphs ----------------------------------

class BlossomMatcher {
public:
    BlossomMatcher(const Graph& g, const std::vector<char>& vertex_alive,
                   const std::vector<char>& edge_alive)
        : n_(g.vertex_count()), adj_(n_), mate_(n_, -1) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!alive(edge_alive, e)) continue;
            auto [u, v] = g.endpoints(e);
            if (!alive(vertex_alive, u) || !alive(vertex_alive, v)) continue;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        live_.assign(n_, 0);
        for (VertexId v = 0; v < n_; ++v) live_[v] = alive(vertex_alive, v);
    }

    std::vector<VertexId> run() {
        // deterministic greedy seed
        for (VertexId v = 0; v < n_; ++v)
            if (live_[v] && mate_[v] == -1)
                for (VertexId u : adj_[v])
                    if (mate_[u] == -1) {
                        mate_[v] = u;
                        mate_[u] = v;
                        break;
                    }
        for (VertexId v = 0; v < n_; ++v)
            if (live_[v] && mate_[v] == -1) augment_from(v);
        return mate_;
    }

private:
    VertexId lca(std::vector<VertexId>& base, VertexId a, VertexId b) {
        std::vector<char> used(n_, 0);
        for (;;) {
            a = base[a];
            used[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base[b];
            if (used[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(std::vector<VertexId>& base, std::vector<char>& in_blossom, VertexId v,
                   VertexId b, VertexId child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void augment_from(VertexId root) {
        parent_.assign(n_, -1);
        std::vector<VertexId> base(n_);
        for (VertexId v = 0; v < n_; ++v) base[v] = v;
        std::vector<char> used(n_, 0);
        used[root] = 1;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId to : adj_[v]) {
                if (base[v] == base[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    VertexId cur = lca(base, v, to);
                    std::vector<char> in_blossom(n_, 0);
                    mark_path(base, in_blossom, v, cur, to);
                    mark_path(base, in_blossom, to, cur, v);
                    for (VertexId i = 0; i < n_; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        // augmenting path found; flip it
                        VertexId u = to;
                        while (u != -1) {
                            VertexId pv = parent_[u], ppv = mate_[pv];
                            mate_[u] = pv;
                            mate_[pv] = u;
                            u = ppv;
                        }
                        return;
                    }
                    used[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
    }

    int n_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> mate_;
    std::vector<VertexId> parent_;
    std::vector<char> live_;
};

int alive_vertex_count(const Graph& g, const std::vector<char>& vertex_alive) {
    if (vertex_alive.empty()) return g.vertex_count();
    int c = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) c += vertex_alive[v] ? 1 : 0;
    return c;
}

// exponential backtracking existence check, kept as an independent oracle
bool oracle_has_pm(const Graph& g, std::vector<char>& covered,
                   const std::vector<std::vector<Graph::Incidence>>& adj) {
    VertexId v = -1;
    for (VertexId i = 0; i < g.vertex_count(); ++i)
        if (!covered[i]) {
            v = i;
            break;
        }
    if (v == -1) return true;
    covered[v] = 1;
    for (const auto& inc : adj[v]) {
        if (covered[inc.to]) continue;
        covered[inc.to] = 1;
        if (oracle_has_pm(g, covered, adj)) {
            covered[inc.to] = 0;
            covered[v] = 0;
            return true;
        }
        covered[inc.to] = 0;
    }
    covered[v] = 0;
    return false;
}

}  // namespace

std::vector<VertexId> maximum_matching_masked(const Graph& g,
                                              const std::vector<char>& vertex_alive,
                                              const std::vector<char>& edge_alive) {
    if (g.has_bipartition()) return HopcroftKarp(g, vertex_alive, edge_alive).run();
    return BlossomMatcher(g, vertex_alive, edge_alive).run();
}

bool matchable_masked(const Graph& g, const std::vector<char>& vertex_alive,
                      const std::vector<char>& edge_alive) {
    int want = alive_vertex_count(g, vertex_alive);
    if (want % 2 != 0) return false;
    auto mate = maximum_matching_masked(g, vertex_alive, edge_alive);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (alive(vertex_alive, v) && mate[v] == -1) return false;
    return true;
}

bool has_perfect_matching(const Graph& g) {
    bool answer = matchable_masked(g, {}, {});
    if (g.vertex_count() <= 14 && g.vertex_count() % 2 == 0) {
        auto adj = incidence_by_edge_id(g);
        std::vector<char> covered(g.vertex_count(), 0);
        bool oracle = oracle_has_pm(g, covered, adj);
        if (oracle != answer)
            throw std::logic_error("matching engine disagrees with backtracking oracle");
    }
    return answer;
}

void for_each_perfect_matching(const Graph& g,
                               const std::function<bool(const std::vector<EdgeId>&)>& visit) {
    if (g.vertex_count() % 2 != 0) return;
    auto adj = incidence_by_edge_id(g);
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    std::vector<EdgeId> chosen;
    auto rec = [&](auto&& self) -> bool {
        VertexId v = -1;
        for (VertexId i = 0; i < g.vertex_count(); ++i)
            if (vertex_alive[i]) {
                v = i;
                break;
            }
        if (v == -1) return visit(chosen);
        if (!matchable_masked(g, vertex_alive, {})) return true;  // prune
        vertex_alive[v] = 0;
        for (const auto& inc : adj[v]) {
            if (!vertex_alive[inc.to]) continue;
            vertex_alive[inc.to] = 0;
            chosen.push_back(inc.edge);
            bool keep_going = self(self);
            chosen.pop_back();
            vertex_alive[inc.to] = 1;
            if (!keep_going) {
                vertex_alive[v] = 1;
                return false;
            }
        }
        vertex_alive[v] = 1;
        return true;
    };
    rec(rec);
}

MatchingEnumeration enumerate_perfect_matchings(const Graph& g, std::optional<long> limit) {
    long cap = limit.value_or(kDefaultEnumerationLimit);
    MatchingEnumeration out;
    std::vector<std::vector<EdgeId>> found;
    for_each_perfect_matching(g, [&](const std::vector<EdgeId>& m) {
        if (static_cast<long>(found.size()) >= cap) {
            out.truncated = true;
            return false;
        }
        found.push_back(m);
        return true;
    });
    for (auto& m : found) std::sort(m.begin(), m.end());
    std::sort(found.begin(), found.end());
    for (auto& m : found) out.matchings.push_back({EdgeSet(std::move(m))});
    return out;
}

EdgeSet allowed_edges(const Graph& g) {
    if (!matchable_masked(g, {}, {}))
        throw PreconditionError("allowed_edges: graph has no perfect matching");
    std::vector<EdgeId> ids;
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        vertex_alive[u] = vertex_alive[v] = 0;
        if (matchable_masked(g, vertex_alive, {})) ids.push_back(e);
        vertex_alive[u] = vertex_alive[v] = 1;
    }
    return EdgeSet(std::move(ids));
}

namespace {

// Hall surplus criterion, the independent bipartite route:
// matching covered iff |A| = |B|, matchable, and |N(U)| >= |U|+1 for every
// proper nonempty U of A.
bool matching_covered_hall(const Graph& g) {
    auto a_side = g.bipartition().side_a();
    auto b_side = g.bipartition().side_b();
    if (a_side.size() != b_side.size()) return false;
    if (g.vertex_count() < 2) return false;
    if (!matchable_masked(g, {}, {})) return false;
    int p = static_cast<int>(a_side.size());
    for (uint32_t mask = 1; mask + 1 < (1u << p); ++mask) {
        std::vector<char> in_n(g.vertex_count(), 0);
        int usize = 0, nsize = 0;
        for (int i = 0; i < p; ++i)
            if (mask & (1u << i)) {
                ++usize;
                for (const auto& inc : g.incident(a_side[i]))
                    if (!in_n[inc.to]) {
                        in_n[inc.to] = 1;
                        ++nsize;
                    }
            }
        if (nsize < usize + 1) return false;
    }
    return true;
}

}  // namespace

bool is_matching_covered_masked(const Graph& g, const std::vector<char>& edge_alive) {
    if (g.vertex_count() < 2) return false;
    if (components_masked(g, edge_alive).size() != 1) return false;
    if (!matchable_masked(g, {}, edge_alive)) return false;
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!alive(edge_alive, e)) continue;
        auto [u, v] = g.endpoints(e);
        vertex_alive[u] = vertex_alive[v] = 0;
        bool ok = matchable_masked(g, vertex_alive, edge_alive);
        vertex_alive[u] = vertex_alive[v] = 1;
        if (!ok) return false;
    }
    return true;
}

bool is_matching_covered(const Graph& g) {
    bool answer = is_matching_covered_masked(g, {});
    if (g.has_bipartition() && static_cast<int>(g.bipartition().side_a().size()) <= 12) {
        if (matching_covered_hall(g) != answer)
            throw std::logic_error("Hall-surplus criterion disagrees with allowed-edge route");
    }
    return answer;
}

bool is_k_extendable(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("is_k_extendable needs k >= 1");
    if (g.vertex_count() < 2 * k + 2) return false;
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    std::vector<EdgeId> picked;
    // exhaust independent k-sets of edges, ascending ids
    auto rec = [&](auto&& self, EdgeId from) -> bool {
        if (static_cast<int>(picked.size()) == k) return matchable_masked(g, vertex_alive, {});
        for (EdgeId e = from; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (!vertex_alive[u] || !vertex_alive[v]) continue;
            vertex_alive[u] = vertex_alive[v] = 0;
            picked.push_back(e);
            bool ok = self(self, e + 1);
            picked.pop_back();
            vertex_alive[u] = vertex_alive[v] = 1;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace mcg::matching
