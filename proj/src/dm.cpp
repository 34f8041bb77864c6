#include "mcg/dm.hpp"

#include <algorithm>
#include <set>

namespace mcg::dm {

namespace {

std::vector<EdgeId> matching_edges(const Graph& g, const std::vector<VertexId>& mate) {
    std::vector<EdgeId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) out.push_back(g.find_edge(v, mate[v]));
    std::sort(out.begin(), out.end());
    return out;
}

// first perfect matching from the deterministic enumerator, as a mate array
std::vector<VertexId> seed_matching(const Graph& g) {
    std::vector<VertexId> mate(g.vertex_count(), -1);
    bool found = false;
    matching::for_each_perfect_matching(g, [&](const std::vector<EdgeId>& m) {
        for (EdgeId e : m) {
            auto [u, v] = g.endpoints(e);
            mate[u] = v;
            mate[v] = u;
        }
        found = true;
        return false;
    });
    if (!found) throw PreconditionError("graph has no perfect matching");
    return mate;
}

// iterative Tarjan SCC; returns component index per node, components in
// reverse topological order
std::vector<int> tarjan_scc(int n, const std::vector<std::vector<int>>& adj, int& comp_count) {
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;
    comp_count = 0;
    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[v].size()) {
                int w = adj[v][child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
            }
        }
    }
    return comp;
}

bool digraph_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : arcs) {
        out[a].push_back(b);
        ++indeg[b];
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen == n;
}

bool weakly_connected(const DMDigraph& d) {
    if (d.node_count <= 1) return true;
    std::vector<std::vector<int>> und(d.node_count);
    for (auto [a, b] : d.arcs) {
        und[a].push_back(b);
        und[b].push_back(a);
    }
    std::vector<char> seen(d.node_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : und[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == d.node_count;
}

void require_bipartite_matchable(const Graph& g) {
    if (!g.has_bipartition())
        throw PreconditionError("operation needs a graph with an attached bipartition");
    if (!matching::matchable_masked(g, {}, {}))
        throw PreconditionError("graph has no perfect matching");
}

}  // namespace

AlternatingPath alternating_path(const Graph& g, VertexId x, VertexId y) {
    require_bipartite_matchable(g);
    g.check_vertex(x);
    g.check_vertex(y);
    if (g.bipartition().side[x] != 0 || g.bipartition().side[y] != 1)
        throw PreconditionError("alternating_path expects x in A and y in B");
    if (!matching::is_matching_covered(g))
        throw PreconditionError("alternating_path needs a matching-covered graph");

    EdgeId xy = g.find_edge(x, y);
    if (xy >= 0) {
        // the edge itself, inside a matching that contains it
        std::vector<char> vertex_alive(g.vertex_count(), 1);
        vertex_alive[x] = vertex_alive[y] = 0;
        auto mate = matching::maximum_matching_masked(g, vertex_alive, {});
        auto edges = matching_edges(g, mate);
        edges.push_back(xy);
        return {{x, y}, {EdgeSet(std::move(edges))}};
    }

    // M: perfect matching of g+xy containing xy (xy kept virtual); M': one of g.
    // The alternating cycle of M (+) M' through xy, minus xy, is the path.
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    vertex_alive[x] = vertex_alive[y] = 0;
    auto mate_m = matching::maximum_matching_masked(g, vertex_alive, {});
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != x && v != y && mate_m[v] == -1)
            throw std::logic_error("matching-covered graph lost matchability minus two ends");
    mate_m[x] = y;  // the virtual edge
    mate_m[y] = x;
    auto mate_mp = seed_matching(g);

    std::vector<VertexId> path{x};
    VertexId v = x;
    bool use_mp = true;
    while (true) {
        v = use_mp ? mate_mp[v] : mate_m[v];
        path.push_back(v);
        if (v == y) break;
        use_mp = !use_mp;
    }
    return {std::move(path), {EdgeSet(matching_edges(g, mate_mp))}};
}

DMDecomposition dm_decomposition(const Graph& g) {
    require_bipartite_matchable(g);
    auto mate = seed_matching(g);

    // one node per matched pair; arc i -> j when an edge joins B(i) to A(j)
    auto a_side = g.bipartition().side_a();
    int k = static_cast<int>(a_side.size());
    std::vector<int> pair_of(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) {
        pair_of[a_side[i]] = i;
        pair_of[mate[a_side[i]]] = i;
    }
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
        VertexId b = mate[a_side[i]];
        for (const auto& inc : g.incident(b)) {
            int j = pair_of[inc.to];
            if (j != i) adj[i].push_back(j);
        }
    }
    int comp_count = 0;
    auto comp = tarjan_scc(k, adj, comp_count);

    // order parts by their smallest vertex
    std::vector<VertexId> smallest(comp_count, g.vertex_count());
    for (int i = 0; i < k; ++i)
        smallest[comp[i]] =
            std::min(smallest[comp[i]], std::min(a_side[i], mate[a_side[i]]));
    std::vector<int> order(comp_count);
    for (int c = 0; c < comp_count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return smallest[a] < smallest[b]; });
    std::vector<int> rank(comp_count);
    for (int idx = 0; idx < comp_count; ++idx) rank[order[idx]] = idx;

    DMDecomposition d;
    d.host = &g;
    d.parts.resize(comp_count);
    d.part_of.assign(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) {
        int part = rank[comp[i]];
        d.parts[part].push_back(a_side[i]);
        d.parts[part].push_back(mate[a_side[i]]);
        d.part_of[a_side[i]] = part;
        d.part_of[mate[a_side[i]]] = part;
    }
    for (auto& part : d.parts) std::sort(part.begin(), part.end());

    // re-check both decomposition properties
    for (const auto& part : d.parts) {
        auto sub = induced_subgraph(g, part);
        if (!matching::is_matching_covered(sub.graph))
            throw std::logic_error("DM part is not matching-covered");
    }
    std::vector<char> vertex_alive(g.vertex_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (d.part_of[u] == d.part_of[v]) continue;
        vertex_alive[u] = vertex_alive[v] = 0;
        bool in_some = matching::matchable_masked(g, vertex_alive, {});
        vertex_alive[u] = vertex_alive[v] = 1;
        if (in_some) throw std::logic_error("inter-part edge lies in a perfect matching");
    }
    return d;
}

DMDigraph dm_digraph(const DMDecomposition& d) {
    if (d.host == nullptr) throw PreconditionError("decomposition has no host graph");
    const Graph& g = *d.host;
    DMDigraph out;
    out.node_count = static_cast<int>(d.parts.size());
    std::set<std::pair<int, int>> arcs;
    for (const auto& [u, v] : g.edges()) {
        if (d.part_of[u] == d.part_of[v]) continue;
        VertexId b = g.bipartition().side[u] == 1 ? u : v;
        VertexId a = b == u ? v : u;
        arcs.insert({d.part_of[b], d.part_of[a]});
    }
    out.arcs.assign(arcs.begin(), arcs.end());
    if (out.node_count >= 2 && !digraph_acyclic(out.node_count, out.arcs))
        throw std::logic_error("DM digraph has a directed cycle");
    return out;
}

std::vector<DirectedCut> directed_cuts(const DMDigraph& d, bool strict) {
    if (!digraph_acyclic(d.node_count, d.arcs))
        throw PreconditionError("directed_cuts needs an acyclic digraph");
    if (!weakly_connected(d))
        throw PreconditionError("directed_cuts needs a weakly connected digraph");
    if (d.node_count > 20)
        throw LimitError("directed_cuts: exhaustive bipartition scan capped at 20 nodes");
    std::vector<DirectedCut> out;
    int k = d.node_count;
    if (k < 2) return out;
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        bool ok = true;
        std::vector<std::pair<int, int>> crossing;
        for (auto [a, b] : d.arcs) {
            bool a_in = mask & (1u << a), b_in = mask & (1u << b);
            if (a_in && !b_in)
                crossing.push_back({a, b});
            else if (!a_in && b_in) {
                ok = false;
                break;
            }
        }
        if (!ok || crossing.empty()) continue;
        if (strict) {
            // both sides must induce weakly connected subdigraphs
            auto connected_side = [&](uint32_t side_mask) {
                std::vector<std::vector<int>> und(k);
                for (auto [a, b] : d.arcs)
                    if ((side_mask >> a & 1) && (side_mask >> b & 1)) {
                        und[a].push_back(b);
                        und[b].push_back(a);
                    }
                int start = -1, total = 0;
                for (int v = 0; v < k; ++v)
                    if (side_mask >> v & 1) {
                        if (start == -1) start = v;
                        ++total;
                    }
                std::vector<char> seen(k, 0);
                std::vector<int> stack{start};
                seen[start] = 1;
                int reached = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int w : und[v])
                        if (!seen[w]) {
                            seen[w] = 1;
                            ++reached;
                            stack.push_back(w);
                        }
                }
                return reached == total;
            };
            if (!connected_side(mask) || !connected_side(~mask & ((1u << k) - 1))) continue;
        }
        DirectedCut cut;
        for (int v = 0; v < k; ++v)
            (mask >> v & 1 ? cut.side_one : cut.side_two).push_back(v);
        cut.arcs = std::move(crossing);
        out.push_back(std::move(cut));
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(const DMDigraph& d) {
    if (!digraph_acyclic(d.node_count, d.arcs))
        throw PreconditionError("sources_and_sinks needs an acyclic digraph");
    std::vector<char> has_in(d.node_count, 0), has_out(d.node_count, 0);
    for (auto [a, b] : d.arcs) {
        has_out[a] = 1;
        has_in[b] = 1;
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < d.node_count; ++v) {
        if (!has_in[v]) out.first.push_back(v);
        if (!has_out[v]) out.second.push_back(v);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> out_adjacency(const DMDigraph& d) {
    std::vector<std::vector<int>> adj(d.node_count);
    for (auto [a, b] : d.arcs) adj[a].push_back(b);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

// all maximal (source-to-sink) directed paths, lexicographic
std::vector<std::vector<int>> maximal_paths(const DMDigraph& d) {
    auto adj = out_adjacency(d);
    auto [sources, sinks] = sources_and_sinks(d);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (adj[v].empty())
            out.push_back(cur);
        else
            for (int w : adj[v]) self(self, w);
        cur.pop_back();
    };
    for (int s : sources) rec(rec, s);
    return out;
}

std::vector<uint64_t> cut_cover_mask(const std::vector<int>& path,
                                     const std::vector<DirectedCut>& cuts) {
    std::vector<uint64_t> mask((cuts.size() + 63) / 64, 0);
    std::set<std::pair<int, int>> path_arcs;
    for (size_t i = 0; i + 1 < path.size(); ++i) path_arcs.insert({path[i], path[i + 1]});
    for (size_t c = 0; c < cuts.size(); ++c)
        for (auto arc : cuts[c].arcs)
            if (path_arcs.count(arc)) {
                mask[c / 64] |= 1ull << (c % 64);
                break;
            }
    return mask;
}

// greedy fallback: pair sources with sinks, then patch uncovered sinks
PathFamily heuristic_family(const DMDigraph& d) {
    auto adj = out_adjacency(d);
    auto [sources, sinks] = sources_and_sinks(d);
    std::vector<std::vector<int>> radj(d.node_count);
    for (auto [a, b] : d.arcs) radj[b].push_back(a);
    for (auto& a : radj) std::sort(a.begin(), a.end());

    auto reach_path = [&](int from, const std::set<int>& prefer_targets) {
        // BFS to a sink, preferring unpaired sinks
        std::vector<int> parent(d.node_count, -1);
        std::vector<int> order{from};
        parent[from] = from;
        int best = -1, fallback = -1;
        for (size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            if (adj[v].empty()) {
                if (prefer_targets.count(v)) {
                    best = v;
                    break;
                }
                if (fallback == -1) fallback = v;
            }
            for (int w : adj[v])
                if (parent[w] == -1) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        int t = best != -1 ? best : fallback;
        std::vector<int> path;
        for (int v = t; ; v = parent[v]) {
            path.push_back(v);
            if (v == from) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    PathFamily fam;
    fam.exact = false;
    std::set<int> unpaired_sinks(sinks.begin(), sinks.end());
    for (int s : sources) {
        auto p = reach_path(s, unpaired_sinks);
        unpaired_sinks.erase(p.back());
        fam.paths.push_back(std::move(p));
    }
    for (int t : sinks) {
        if (!unpaired_sinks.count(t)) continue;
        // reverse-BFS from t to any source
        std::vector<int> parent(d.node_count, -1);
        std::vector<int> order{t};
        parent[t] = t;
        int src = -1;
        for (size_t i = 0; i < order.size() && src == -1; ++i) {
            int v = order[i];
            if (radj[v].empty()) src = v;
            for (int w : radj[v])
                if (parent[w] == -1) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        std::vector<int> path;
        for (int v = src; ; v = parent[v]) {
            path.push_back(v);
            if (v == t) break;
        }
        fam.paths.push_back(std::move(path));
        unpaired_sinks.erase(t);
    }
    fam.ell = static_cast<int>(fam.paths.size());
    return fam;
}

}  // namespace

PathFamily min_path_family(const DMDigraph& d) {
    if (!digraph_acyclic(d.node_count, d.arcs))
        throw PreconditionError("min_path_family needs an acyclic digraph");
    PathFamily fam;
    if (d.node_count <= 1 || d.arcs.empty()) return fam;  // ell = 0

    if (d.node_count > 12) return heuristic_family(d);

    auto cuts = directed_cuts(d);
    if (cuts.empty()) return fam;
    auto paths = maximal_paths(d);
    std::vector<std::vector<uint64_t>> cover;
    cover.reserve(paths.size());
    for (const auto& p : paths) cover.push_back(cut_cover_mask(p, cuts));

    size_t blocks = (cuts.size() + 63) / 64;
    std::vector<uint64_t> all(blocks, ~0ull);
    if (cuts.size() % 64) all[blocks - 1] = (1ull << (cuts.size() % 64)) - 1;

    // iterative deepening set cover: branch over paths hitting the first
    // uncovered cut
    std::vector<int> chosen, best;
    auto rec = [&](auto&& self, std::vector<uint64_t> covered, int depth_left) -> bool {
        size_t open = cuts.size();
        for (size_t c = 0; c < cuts.size(); ++c)
            if (!(covered[c / 64] >> (c % 64) & 1)) {
                open = c;
                break;
            }
        if (open == cuts.size()) {
            best = chosen;
            return true;
        }
        if (depth_left == 0) return false;
        for (size_t p = 0; p < paths.size(); ++p) {
            if (!(cover[p][open / 64] >> (open % 64) & 1)) continue;
            auto next = covered;
            for (size_t b = 0; b < blocks; ++b) next[b] |= cover[p][b];
            chosen.push_back(static_cast<int>(p));
            bool done = self(self, std::move(next), depth_left - 1);
            chosen.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (int ell = 1;; ++ell) {
        chosen.clear();
        if (rec(rec, std::vector<uint64_t>(blocks, 0), ell)) {
            fam.ell = ell;
            for (int p : best) fam.paths.push_back(paths[p]);
            return fam;
        }
        if (ell > static_cast<int>(cuts.size()))
            throw std::logic_error("path family search failed to terminate");
    }
}

std::pair<Graph, AugmentationPlan> augment_to_matching_covered(const Graph& g) {
    require_bipartite_matchable(g);
    if (components(g).size() != 1)
        throw PreconditionError("augment_to_matching_covered needs a connected graph");

    auto d = dm_decomposition(g);
    AugmentationPlan plan;
    if (d.parts.size() == 1) return {g, plan};

    auto dig = dm_digraph(d);
    auto fam = min_path_family(dig);
    plan.exact = fam.exact;
    plan.ell = fam.ell;
    plan.paths = fam.paths;

    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    std::set<std::pair<VertexId, VertexId>> present;
    for (auto [u, v] : edges) present.insert(std::minmax(u, v));

    for (const auto& path : fam.paths) {
        int init = path.front(), term = path.back();
        std::vector<VertexId> b_candidates, a_candidates;
        for (VertexId v : d.parts[term])
            if (g.bipartition().side[v] == 1) b_candidates.push_back(v);
        for (VertexId v : d.parts[init])
            if (g.bipartition().side[v] == 0) a_candidates.push_back(v);
        bool added = false;
        for (VertexId b : b_candidates) {
            for (VertexId a : a_candidates) {
                auto key = std::minmax(a, b);
                if (present.count(key)) continue;
                present.insert(key);
                edges.push_back({b, a});
                plan.new_edges.push_back({b, a});
                added = true;
                break;
            }
            if (added) break;
        }
        if (!added)
            throw PreconditionError(
                "augmentation: every pair across the terminal and initial parts already exists");
    }

    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    Graph out(g.vertex_count(), std::move(edges), std::move(labels));
    out.attach_bipartition(g.bipartition());
    if (!matching::is_matching_covered(out))
        throw std::logic_error("augmented graph failed the matching-covered check");
    return {std::move(out), std::move(plan)};
}

}  // namespace mcg::dm
