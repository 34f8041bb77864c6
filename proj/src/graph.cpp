#include "mcg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace mcg {

std::vector<VertexId> Bipartition::side_a() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 0) out.push_back(v);
    return out;
}

std::vector<VertexId> Bipartition::side_b() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 1) out.push_back(v);
    return out;
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSet EdgeSet::full(int edge_count) {
    std::vector<EdgeId> ids(edge_count);
    for (int i = 0; i < edge_count; ++i) ids[i] = i;
    return EdgeSet(std::move(ids));
}

bool EdgeSet::contains(EdgeId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

EdgeSet EdgeSet::symmetric_difference(const EdgeSet& other) const {
    std::vector<EdgeId> out;
    std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                                  other.ids_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
    std::vector<EdgeId> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::intersection(const EdgeSet& other) const {
    std::vector<EdgeId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::complement(int edge_count) const {
    std::vector<EdgeId> out;
    auto it = ids_.begin();
    for (EdgeId e = 0; e < edge_count; ++e) {
        if (it != ids_.end() && *it == e)
            ++it;
        else
            out.push_back(e);
    }
    return EdgeSet(std::move(out));
}

Graph::Graph(int n, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw PreconditionError("label table size does not match vertex count");
    adj_.assign(n_, {});
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto& [u, v] = edges_[e];
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("loop at vertex " + labels_[u]);
        if (!seen.insert({u, v}).second)
            throw PreconditionError("parallel edge " + labels_[u] + " " + labels_[v]);
        adj_[u].push_back({v, e});
        adj_[v].push_back({u, e});
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end(),
                  [](const Incidence& x, const Incidence& y) { return x.to < y.to; });
}

std::pair<VertexId, VertexId> Graph::endpoints(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw PreconditionError("edge id out of range");
    return edges_[e];
}

const std::string& Graph::label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<VertexId> Graph::vertex_of_label(const std::string& label) const {
    for (VertexId v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

const std::vector<Graph::Incidence>& Graph::incident(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    for (const auto& inc : adj_[u])
        if (inc.to == v) return inc.edge;
    return -1;
}

const Bipartition& Graph::bipartition() const {
    if (!bipartition_) throw PreconditionError("graph has no attached bipartition");
    return *bipartition_;
}

void Graph::attach_bipartition(Bipartition b) {
    if (static_cast<int>(b.side.size()) != n_)
        throw PreconditionError("bipartition does not cover the vertex set");
    for (auto s : b.side)
        if (s > 1) throw PreconditionError("bipartition side must be 0 or 1");
    for (const auto& [u, v] : edges_)
        if (b.side[u] == b.side[v])
            throw PreconditionError("edge " + labels_[u] + " " + labels_[v] +
                                    " does not cross the declared bipartition");
    bipartition_ = std::move(b);
}

EdgeSet Graph::incident_edges(VertexId v) const {
    std::vector<EdgeId> ids;
    for (const auto& inc : incident(v)) ids.push_back(inc.edge);
    return EdgeSet(std::move(ids));
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex id out of range");
}

// ---- file format ------------------------------------------------------------

Graph parse_graph(const std::string& text) {
    std::map<std::string, VertexId> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> declared_side;  // -1 none, 0 A, 1 B (parallel to labels)

    auto intern = [&](const std::string& label) {
        auto it = id_of.find(label);
        if (it != id_of.end()) return it->second;
        VertexId v = static_cast<VertexId>(labels.size());
        id_of.emplace(label, v);
        labels.push_back(label);
        declared_side.push_back(-1);
        return v;
    };

    bool has_part_lines = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "part") {
            std::string side_name;
            if (!(ls >> side_name) || (side_name != "A" && side_name != "B"))
                throw ParseError(lineno, "expected `part A ...` or `part B ...`");
            int side = side_name == "A" ? 0 : 1;
            has_part_lines = true;
            std::string label;
            bool any = false;
            while (ls >> label) {
                any = true;
                VertexId v = intern(label);
                if (declared_side[v] != -1)
                    throw ParseError(lineno, "vertex " + label + " declared twice in part lines");
                declared_side[v] = side;
            }
            if (!any) throw ParseError(lineno, "part line lists no vertices");
        } else if (word == "vertex") {
            std::string label;
            if (!(ls >> label)) throw ParseError(lineno, "vertex line without a label");
            intern(label);
        } else if (word == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "edge line needs two labels");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing token on edge line");
            VertexId u = intern(a), v = intern(b);
            if (u == v) throw ParseError(lineno, "loop at vertex " + a);
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw ParseError(lineno, "duplicate edge " + a + " " + b);
            if (has_part_lines && declared_side[u] != -1 && declared_side[v] != -1 &&
                declared_side[u] == declared_side[v])
                throw ParseError(lineno, "edge " + a + " " + b + " stays inside one part");
            edges.push_back({u, v});
        } else {
            throw ParseError(lineno, "unknown directive `" + word + "`");
        }
    }

    Graph g(static_cast<int>(labels.size()), std::move(edges), labels);
    if (has_part_lines) {
        Bipartition b;
        b.side.resize(labels.size());
        for (size_t v = 0; v < labels.size(); ++v) {
            if (declared_side[v] == -1)
                throw ParseError(0, "vertex " + labels[v] + " missing from part lines");
            b.side[v] = static_cast<uint8_t>(declared_side[v]);
        }
        g.attach_bipartition(std::move(b));
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    if (g.has_bipartition()) {
        const auto& b = g.bipartition();
        out << "part A";
        for (VertexId v : b.side_a()) out << ' ' << g.label(v);
        out << "\npart B";
        for (VertexId v : b.side_b()) out << ' ' << g.label(v);
        out << '\n';
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "vertex " << g.label(v) << '\n';
    for (const auto& [u, v] : g.edges()) out << "edge " << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

// ---- basic structure queries ------------------------------------------------

EdgeSet nabla(const Graph& g, const std::vector<VertexId>& u) {
    std::vector<char> in_u(g.vertex_count(), 0);
    for (VertexId v : u) {
        g.check_vertex(v);
        in_u[v] = 1;
    }
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (in_u[a] != in_u[b]) ids.push_back(e);
    }
    return EdgeSet(std::move(ids));
}

std::vector<std::vector<VertexId>> components_masked(const Graph& g,
                                                     const std::vector<char>& edge_alive) {
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            out[c].push_back(v);
            for (const auto& inc : g.incident(v)) {
                if (!edge_alive.empty() && !edge_alive[inc.edge]) continue;
                if (comp[inc.to] == -1) {
                    comp[inc.to] = c;
                    q.push(inc.to);
                }
            }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    return components_masked(g, {});
}

BipartitenessWitness is_bipartite(const Graph& g) {
    BipartitenessWitness w;
    std::vector<int> color(g.vertex_count(), -1);
    std::vector<VertexId> parent(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v)) {
                if (color[inc.to] == -1) {
                    color[inc.to] = 1 - color[v];
                    parent[inc.to] = v;
                    q.push(inc.to);
                } else if (color[inc.to] == color[v]) {
                    // Same-colored BFS edge closes an odd walk through the
                    // paths to the tree root.
                    std::vector<VertexId> pv, pu;
                    for (VertexId x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (VertexId x = inc.to; x != -1; x = parent[x]) pu.push_back(x);
                    // trim the common tail above the lowest common ancestor
                    while (pv.size() >= 2 && pu.size() >= 2 &&
                           pv[pv.size() - 1] == pu[pu.size() - 1] &&
                           pv[pv.size() - 2] == pu[pu.size() - 2]) {
                        pv.pop_back();
                        pu.pop_back();
                    }
                    w.bipartite = false;
                    w.odd_walk.assign(pv.rbegin(), pv.rend());  // lca .. v
                    w.odd_walk.insert(w.odd_walk.end(), pu.begin(), pu.end());  // u .. lca
                    return w;
                }
            }
        }
    }
    w.bipartite = true;
    w.coloring.assign(color.begin(), color.end());
    return w;
}

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed) {
    int start = -1, remaining = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) {
            if (start == -1) start = v;
            ++remaining;
        }
    if (remaining <= 1) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v))
            if (!removed[inc.to] && !seen[inc.to]) {
                seen[inc.to] = 1;
                ++reached;
                stack.push_back(inc.to);
            }
    }
    return reached == remaining;
}

// unit-capacity max flow on the split-vertex network, for Menger
int vertex_disjoint_paths(const Graph& g, VertexId s, VertexId t) {
    // node 2v = in-copy, 2v+1 = out-copy
    int n = g.vertex_count();
    struct Arc {
        int to, cap;
        size_t rev;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add_arc = [&](int a, int b, int cap) {
        net[a].push_back({b, cap, net[b].size()});
        net[b].push_back({a, 0, net[a].size() - 1});
    };
    for (VertexId v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (const auto& [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<std::pair<int, int>> pred(2 * n, {-1, -1});  // node, arc index
        std::queue<int> q;
        q.push(source);
        pred[source] = {source, 0};
        while (!q.empty() && pred[sink].first == -1) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < net[v].size(); ++i) {
                const Arc& a = net[v][i];
                if (a.cap > 0 && pred[a.to].first == -1) {
                    pred[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[sink].first == -1) break;
        for (int v = sink; v != source;) {
            auto [pv, pi] = pred[v];
            net[pv][pi].cap -= 1;
            net[v][net[pv][pi].rev].cap += 1;
            v = pv;
        }
        ++flow;
    }
    return flow;
}

int connectivity_exhaustive(const Graph& g) {
    int n = g.vertex_count();
    for (int k = 0; k <= n - 2; ++k) {
        // all separators of size k
        std::vector<int> pick(k);
        std::vector<char> removed(n, 0);
        auto rec = [&](auto&& self, int idx, int from) -> bool {
            if (idx == k) {
                std::vector<char> rem(n, 0);
                for (int i = 0; i < k; ++i) rem[pick[i]] = 1;
                return !connected_without(g, rem);
            }
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (self(self, idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return k;
    }
    return n - 1;  // complete graph
}

int connectivity_maxflow(const Graph& g) {
    int n = g.vertex_count();
    int best = n - 1;
    // standard Menger scan: pair the first best+1 vertices against non-neighbors
    for (VertexId s = 0; s <= best && s < n; ++s)
        for (VertexId t = 0; t < n; ++t)
            if (s != t && !g.adjacent(s, t)) best = std::min(best, vertex_disjoint_paths(g, s, t));
    return best;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) throw PreconditionError("vertex_connectivity needs >= 2 vertices");
    if (g.vertex_count() <= 12) return connectivity_exhaustive(g);
    return connectivity_maxflow(g);
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
edge_cut_sides(const Graph& g, const EdgeSet& s) {
    std::vector<char> alive(g.edge_count(), 1);
    for (EdgeId e : s) {
        if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
        alive[e] = 0;
    }
    auto comps = components_masked(g, alive);
    if (comps.size() != 2) return std::nullopt;
    return std::make_pair(comps[0], comps[1]);
}

EdgeDeletion delete_edges(const Graph& g, const EdgeSet& s) {
    EdgeDeletion out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!s.contains(e)) {
            edges.push_back(g.endpoints(e));
            out.old_edge_of.push_back(e);
        }
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    out.graph = Graph(g.vertex_count(), std::move(edges), std::move(labels));
    if (g.has_bipartition()) out.graph.attach_bipartition(g.bipartition());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
    InducedSubgraph out;
    out.old_vertex_of = vertices;
    std::sort(out.old_vertex_of.begin(), out.old_vertex_of.end());
    std::vector<int> new_id(g.vertex_count(), -1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < out.old_vertex_of.size(); ++i) {
        g.check_vertex(out.old_vertex_of[i]);
        new_id[out.old_vertex_of[i]] = static_cast<int>(i);
        labels.push_back(g.label(out.old_vertex_of[i]));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] != -1 && new_id[v] != -1) edges.push_back({new_id[u], new_id[v]});
    out.graph = Graph(static_cast<int>(out.old_vertex_of.size()), std::move(edges),
                      std::move(labels));
    if (g.has_bipartition()) {
        Bipartition b;
        for (VertexId v : out.old_vertex_of) b.side.push_back(g.bipartition().side[v]);
        out.graph.attach_bipartition(std::move(b));
    }
    return out;
}

}  // namespace mcg
