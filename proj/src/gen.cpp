#include "mcg/gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

namespace mcg::gen {

namespace {

std::vector<std::string> numbered(const char* stem, int n, int from = 0) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(from + i));
    return out;
}

Graph bipartite_from(int p, int q, std::vector<std::pair<VertexId, VertexId>> edges) {
    std::vector<std::string> labels = numbered("a", p);
    for (auto& l : numbered("b", q)) labels.push_back(l);
    Graph g(p + q, std::move(edges), std::move(labels));
    Bipartition b;
    b.side.assign(p + q, 0);
    for (int j = 0; j < q; ++j) b.side[p + j] = 1;
    g.attach_bipartition(std::move(b));
    return g;
}

}  // namespace

Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges), numbered("v", n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges), numbered("v", n));
}

Graph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges), numbered("v", n));
}

Graph complete_bipartite(int p, int q) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.push_back({i, p + j});
    return bipartite_from(p, q, std::move(edges));
}

Graph prism(int n) {
    if (n < 3) throw PreconditionError("prism needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({n + i, n + (i + 1) % n});
        edges.push_back({i, n + i});
    }
    return Graph(2 * n, std::move(edges), numbered("v", 2 * n));
}

Graph petersen() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});      // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});            // spokes
    }
    return Graph(10, std::move(edges), numbered("v", 10));
}

namespace {

// adjacency rows as bitmasks; canonical form maximizes the upper-triangle
// bitstring read column by column, branch and bound over placements
struct Canonizer {
    const std::vector<uint8_t>* adj;
    int n;
    std::vector<uint8_t> best_cols;  // column i packed into one byte
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<uint8_t> cols;
    bool have_best;

    void place(int i) {
        if (i == n) {
            if (!have_best || cols > best_cols) {
                best_cols = cols;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint8_t col = 0;
            for (int j = 0; j < i; ++j)
                if ((*adj)[perm[j]] >> v & 1) col |= uint8_t(1) << j;
            if (have_best) {
                if (col < best_cols[i] && std::equal(cols.begin(), cols.begin() + i,
                                                     best_cols.begin()))
                    continue;
            }
            used[v] = 1;
            perm[i] = v;
            cols[i] = col;
            place(i + 1);
            used[v] = 0;
        }
    }
};

std::vector<uint8_t> canonical(const std::vector<uint8_t>& adj) {
    Canonizer c;
    c.adj = &adj;
    c.n = static_cast<int>(adj.size());
    c.perm.assign(c.n, 0);
    c.used.assign(c.n, 0);
    c.cols.assign(c.n, 0);
    c.have_best = false;
    c.place(0);
    return c.best_cols;
}

Graph from_adj(const std::vector<uint8_t>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[i] >> j & 1) edges.push_back({i, j});
    return Graph(n, std::move(edges), numbered("v", n));
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8) throw LimitError("all_graphs handles 1 <= n <= 8");
    std::vector<std::vector<uint8_t>> level{{0}};
    for (int sz = 2; sz <= n; ++sz) {
        std::set<std::vector<uint8_t>> seen;
        std::vector<std::vector<uint8_t>> next;
        for (const auto& g : level) {
            for (uint32_t nbrs = 0; nbrs < (1u << (sz - 1)); ++nbrs) {
                std::vector<uint8_t> adj(sz, 0);
                for (int v = 0; v < sz - 1; ++v) {
                    adj[v] = g[v];
                    if (nbrs >> v & 1) {
                        adj[v] |= uint8_t(1) << (sz - 1);
                        adj[sz - 1] |= uint8_t(1) << v;
                    }
                }
                if (seen.insert(canonical(adj)).second) next.push_back(std::move(adj));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& adj : level) out.push_back(from_adj(adj));
    return out;
}

namespace {

// canonical key for a bipartite graph given as sorted row masks: the
// lexicographic minimum over column permutations and the side swap
std::vector<uint8_t> bipartite_canonical(std::vector<uint8_t> rows, int p) {
    std::vector<int> cols(p);
    std::vector<uint8_t> best;
    auto consider = [&](const std::vector<uint8_t>& base) {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            std::vector<uint8_t> mapped(p, 0);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    if (base[i] >> j & 1) mapped[i] |= uint8_t(1) << cols[j];
            std::sort(mapped.begin(), mapped.end());
            if (best.empty() || mapped < best) best = std::move(mapped);
        } while (std::next_permutation(cols.begin(), cols.end()));
    };
    std::sort(rows.begin(), rows.end());
    consider(rows);
    std::vector<uint8_t> transposed(p, 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (rows[i] >> j & 1) transposed[j] |= uint8_t(1) << i;
    std::sort(transposed.begin(), transposed.end());
    consider(transposed);
    return best;
}

}  // namespace

std::vector<Graph> connected_mc_bipartite(int p) {
    if (p < 1 || p > 5) throw LimitError("connected_mc_bipartite handles 1 <= p <= 5");
    std::vector<Graph> out;
    if (p == 1) {
        out.push_back(complete_bipartite(1, 1));
        return out;
    }
    // candidate rows need two neighbors each: a matching-covered graph on at
    // least four vertices has minimum degree two
    std::vector<uint8_t> pool;
    for (uint32_t m = 0; m < (1u << p); ++m)
        if (__builtin_popcount(m) >= 2) pool.push_back(static_cast<uint8_t>(m));

    std::set<std::vector<uint8_t>> seen;
    std::vector<int> pick(p, 0);
    auto emit = [&] {
        std::vector<uint8_t> rows;
        uint8_t col_union = 0;
        std::vector<int> col_deg(p, 0);
        for (int i = 0; i < p; ++i) {
            rows.push_back(pool[pick[i]]);
            col_union |= rows.back();
            for (int j = 0; j < p; ++j) col_deg[j] += rows.back() >> j & 1;
        }
        if (col_union != (1u << p) - 1) return;
        for (int j = 0; j < p; ++j)
            if (col_deg[j] < 2) return;
        if (!seen.insert(bipartite_canonical(rows, p)).second) return;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (rows[i] >> j & 1) edges.push_back({i, p + j});
        Graph g = bipartite_from(p, p, std::move(edges));
        if (components(g).size() == 1 && matching::is_matching_covered(g))
            out.push_back(std::move(g));
    };
    // non-decreasing row indices into the pool, one relabeling per multiset
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == p) {
            emit();
            return;
        }
        for (int idx = lo; idx < static_cast<int>(pool.size()); ++idx) {
            pick[i] = idx;
            self(self, i + 1, idx);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<Graph> brick_corpus() {
    std::vector<Graph> out;
    for (int n : {4, 6, 8})
        for (auto& g : all_graphs(n))
            if (structure::is_brick(g)) out.push_back(std::move(g));
    out.push_back(prism(5));
    out.push_back(petersen());
    return out;
}

Graph random_regular_bipartite(int p, int k, std::mt19937_64& rng) {
    if (p < k || k < 1) throw PreconditionError("random_regular_bipartite needs p >= k >= 1");
    std::vector<int> pi(p);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::set<std::pair<int, int>> used;
        std::vector<std::pair<VertexId, VertexId>> edges;
        bool simple = true;
        for (int t = 0; t < k && simple; ++t) {
            std::iota(pi.begin(), pi.end(), 0);
            std::shuffle(pi.begin(), pi.end(), rng);
            for (int i = 0; i < p; ++i) {
                if (!used.insert({i, pi[i]}).second) {
                    simple = false;
                    break;
                }
                edges.push_back({i, p + pi[i]});
            }
        }
        if (!simple) continue;
        Graph g = bipartite_from(p, p, std::move(edges));
        if (components(g).size() == 1) return g;
    }
    throw LimitError("random_regular_bipartite gave up after 10000 attempts");
}

Graph random_mc_bipartite(int p, int extra, std::mt19937_64& rng) {
    if (p < 2) throw PreconditionError("random_mc_bipartite needs p >= 2");
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < p; ++i) {
        used.insert({i, i});
        edges.push_back({i, p + i});
        used.insert({(i + 1) % p, i});
        edges.push_back({(i + 1) % p, p + i});
    }
    std::uniform_int_distribution<int> side(0, p - 1);
    int room = p * p - static_cast<int>(used.size());
    for (int added = 0; added < std::min(extra, room);) {
        int i = side(rng), j = side(rng);
        if (!used.insert({i, j}).second) continue;
        edges.push_back({i, p + j});
        ++added;
    }
    return bipartite_from(p, p, std::move(edges));
}

Graph random_bipartite_matchable(int p, int extra, std::mt19937_64& rng) {
    if (p < 1) throw PreconditionError("random_bipartite_matchable needs p >= 1");
    std::uniform_int_distribution<int> side(0, p - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::set<std::pair<int, int>> used;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < p; ++i) {
            used.insert({i, i});
            edges.push_back({i, p + i});
        }
        int room = p * p - p;
        for (int added = 0; added < std::min(extra, room);) {
            int i = side(rng), j = side(rng);
            if (!used.insert({i, j}).second) continue;
            edges.push_back({i, p + j});
            ++added;
        }
        Graph g = bipartite_from(p, p, std::move(edges));
        if (components(g).size() == 1) return g;
    }
    throw LimitError("random_bipartite_matchable gave up after 10000 attempts");
}

}  // namespace mcg::gen
