#include "mcg/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mcg/feasibility.hpp"
#include "mcg/matching.hpp"
#include "mcg/switching.hpp"

namespace mcg::construct {

namespace {

void check_proper(const Graph& g, const EdgeColoring& c, int k) {
    if (static_cast<int>(c.color_of.size()) != g.edge_count())
        throw PreconditionError("coloring does not cover the edge set");
    for (int col : c.color_of)
        if (col < 1 || col > k) throw PreconditionError("edge color out of range 1..k");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (const auto& inc : g.incident(v))
            if (!seen.insert(c.color_of[inc.edge]).second)
                throw PreconditionError("coloring is not proper at vertex " + g.label(v));
    }
}

int regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("empty graph");
    int k = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) throw PreconditionError("graph is not regular");
    return k;
}

}  // namespace

std::optional<std::vector<VertexId>> find_hamilton_cycle(const Graph& g,
                                                         const EdgeSet& forbidden) {
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    std::vector<char> visited(n, 0);
    std::vector<VertexId> path{0};
    visited[0] = 1;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) {
            EdgeId back = g.find_edge(path.back(), 0);
            return back >= 0 && !forbidden.contains(back);
        }
        VertexId v = path.back();
        for (const auto& inc : g.incident(v)) {
            if (visited[inc.to] || forbidden.contains(inc.edge)) continue;
            visited[inc.to] = 1;
            path.push_back(inc.to);
            if (self(self)) return true;
            path.pop_back();
            visited[inc.to] = 0;
        }
        return false;
    };
    if (rec(rec)) return path;
    return std::nullopt;
}

std::pair<Graph, EdgeColoring> color_complete_bipartite(int k) {
    if (k < 1) throw PreconditionError("color_complete_bipartite needs k >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 0; j < k; ++j) labels.push_back("b" + std::to_string(j));
    std::vector<std::pair<VertexId, VertexId>> edges;
    EdgeColoring c;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            edges.push_back({i, k + j});
            c.color_of.push_back((i + j) % k + 1);
        }
    Graph g(2 * k, std::move(edges), std::move(labels));
    Bipartition b;
    b.side.assign(2 * k, 0);
    for (int j = 0; j < k; ++j) b.side[k + j] = 1;
    g.attach_bipartition(std::move(b));
    return {std::move(g), std::move(c)};
}

BaseGraph build_gk(int k) {
    if (k < 3) throw PreconditionError("build_gk needs k >= 3");
    auto [kkk, coloring] = color_complete_bipartite(k);
    // the color-1 edges at a0 and a1: a0 b0 and a1 b(k-1)
    EdgeId e1 = kkk.find_edge(0, k);
    EdgeId e2 = kkk.find_edge(1, 2 * k - 1);
    auto del = delete_edges(kkk, EdgeSet({e1, e2}));
    BaseGraph out;
    out.graph = std::move(del.graph);
    out.u1 = 0;
    out.u2 = 1;
    out.v1 = k;
    out.v2 = 2 * k - 1;
    for (EdgeId e = 0; e < out.graph.edge_count(); ++e)
        out.coloring.color_of.push_back(coloring.color_of[del.old_edge_of[e]]);
    auto cycle = find_hamilton_cycle(out.graph);
    if (!cycle)
        throw std::logic_error("G_k lost its Hamilton cycle; the construction is invalid");
    out.hamilton_cycle = *cycle;
    return out;
}

namespace {

// link m copies of `core` (a once-k-regular bipartite graph minus two
// same-colored disjoint edges, designated corners u1,u2,v1,v2)
ConstructionResult assemble(const Graph& core, const EdgeColoring& core_colors, int k,
                            VertexId u1, VertexId u2, VertexId v1, VertexId v2, int link_color,
                            int m) {
    int n = core.vertex_count();
    auto global = [&](int copy, VertexId t) { return (copy - 1) * n + t; };
    auto role_of = [&](VertexId t) -> std::string {
        if (t == u1) return "u1";
        if (t == u2) return "u2";
        if (t == v1) return "v1";
        if (t == v2) return "v2";
        return "other";
    };

    ConstructionResult r;
    r.k = k;
    r.m = m;
    std::vector<std::string> labels(n * m);
    for (int copy = 1; copy <= m; ++copy)
        for (VertexId t = 0; t < n; ++t) {
            std::string role = role_of(t);
            std::string base = role == "other" ? core.label(t) : role;
            labels[global(copy, t)] = base + "^" + std::to_string(copy);
            r.copy_labels.push_back({});  // sized below
        }
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> colors;
    for (int copy = 1; copy <= m; ++copy)
        for (EdgeId e = 0; e < core.edge_count(); ++e) {
            auto [a, b] = core.endpoints(e);
            edges.push_back({global(copy, a), global(copy, b)});
            colors.push_back(core_colors.color_of[e]);
        }
    std::vector<EdgeId> link_ids, test_ids;
    auto add_link = [&](VertexId a, VertexId b, bool in_x) {
        link_ids.push_back(static_cast<EdgeId>(edges.size()));
        if (in_x) test_ids.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back({a, b});
        colors.push_back(link_color);
    };
    // every perfect matching takes all of the link class or none of it, so a
    // subset is non-feasible exactly when its size is even; for odd m the
    // m-edge prefix needs one companion edge
    add_link(global(1, u1), global(1, u2), true);
    for (int i = 1; i <= m - 1; ++i) {
        add_link(global(i, v1), global(i + 1, u1), true);
        add_link(global(i, v2), global(i + 1, u2), i == 1 && m % 2 == 1);
    }
    add_link(global(m, v1), global(m, v2), false);

    r.graph = Graph(n * m, std::move(edges), std::move(labels));
    r.link_edges = EdgeSet(std::move(link_ids));
    r.test_set = EdgeSet(std::move(test_ids));
    r.coloring.color_of = std::move(colors);
    for (int copy = 1; copy <= m; ++copy)
        for (VertexId t = 0; t < n; ++t)
            r.copy_labels[global(copy, t)] = {copy, role_of(t)};
    return r;
}

}  // namespace

ConstructionResult build_generalized(const Graph& base, const EdgeColoring& coloring, EdgeId e1,
                                     EdgeId e2, int m) {
    if (m < 2) throw PreconditionError("build_generalized needs m >= 2");
    if (!base.has_bipartition())
        throw PreconditionError("build_generalized: base graph needs an attached bipartition");
    int k = regular_degree(base);
    if (k < 3) throw PreconditionError("build_generalized: base graph must be k-regular, k >= 3");
    check_proper(base, coloring, k);
    if (e1 < 0 || e1 >= base.edge_count() || e2 < 0 || e2 >= base.edge_count() || e1 == e2)
        throw PreconditionError("build_generalized: e1, e2 must be two distinct edges");
    if (coloring.color_of[e1] != coloring.color_of[e2])
        throw PreconditionError("build_generalized: e1 and e2 must share a color");
    auto [a1, b1] = base.endpoints(e1);
    auto [a2, b2] = base.endpoints(e2);
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
        throw PreconditionError("build_generalized: e1 and e2 share a vertex");
    if (!find_hamilton_cycle(base, EdgeSet({e1, e2})))
        throw PreconditionError("build_generalized: no Hamilton cycle avoiding e1 and e2");

    auto pick_side = [&](VertexId x, VertexId y, int side) {
        return base.bipartition().side[x] == side ? x : y;
    };
    VertexId u1 = pick_side(a1, b1, 0), v1 = pick_side(a1, b1, 1);
    VertexId u2 = pick_side(a2, b2, 0), v2 = pick_side(a2, b2, 1);

    auto del = delete_edges(base, EdgeSet({e1, e2}));
    EdgeColoring core_colors;
    for (EdgeId e = 0; e < del.graph.edge_count(); ++e)
        core_colors.color_of.push_back(coloring.color_of[del.old_edge_of[e]]);
    // copies are glued through odd cycles, so the result is not bipartite;
    // drop the inherited bipartition from the core
    Graph core(del.graph.vertex_count(), del.graph.edges(), [&] {
        std::vector<std::string> ls;
        for (VertexId v = 0; v < del.graph.vertex_count(); ++v) ls.push_back(del.graph.label(v));
        return ls;
    }());
    return assemble(core, core_colors, k, u1, u2, v1, v2, coloring.color_of[e1], m);
}

ConstructionResult build_gkm(int k, int m) {
    if (k < 3) throw PreconditionError("build_gkm needs k >= 3");
    if (m < 2) throw PreconditionError("build_gkm needs m >= 2");
    auto [kkk, coloring] = color_complete_bipartite(k);
    EdgeId e1 = kkk.find_edge(0, k);
    EdgeId e2 = kkk.find_edge(1, 2 * k - 1);
    return build_generalized(kkk, coloring, e1, e2, m);
}

namespace {

struct RoleIndex {
    // role ("u1".."v2") and copy -> vertex
    std::map<std::pair<std::string, int>, VertexId> at;
    int m = 0;

    VertexId get(const std::string& role, int copy) const {
        auto it = at.find({role, copy});
        if (it == at.end()) throw PreconditionError("designated vertex " + role + "^" +
                                                    std::to_string(copy) + " missing");
        return it->second;
    }
};

RoleIndex role_index(const ConstructionResult& r) {
    RoleIndex idx;
    for (VertexId v = 0; v < r.graph.vertex_count(); ++v) {
        auto [copy, role] = r.copy_labels[v];
        idx.m = std::max(idx.m, copy);
        if (role != "other") idx.at[{role, copy}] = v;
    }
    return idx;
}

void add_check(VerificationReport& rep, const std::string& name, bool pass,
               const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
}

}  // namespace

VerificationReport verify_construction(const ConstructionResult& r) {
    VerificationReport rep;
    const Graph& g = r.graph;

    // shape: |K| = 2m, X an even subset of K of at least two edges
    bool shape = r.link_edges.size() == 2 * r.m && r.test_set.size() >= 2 &&
                 r.test_set.size() % 2 == 0 &&
                 r.test_set.intersection(r.link_edges) == r.test_set &&
                 g.vertex_count() > 0 && g.edge_count() > 0;
    add_check(rep, "shape", shape,
              "|K|=" + std::to_string(r.link_edges.size()) +
                  " |X|=" + std::to_string(r.test_set.size()));

    // (1) k-regularity
    bool regular = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r.k) {
            regular = false;
            break;
        }
    add_check(rep, "k-regular", regular, "k=" + std::to_string(r.k));

    // (2) proper k-edge-coloring, every class a perfect matching
    bool proper = static_cast<int>(r.coloring.color_of.size()) == g.edge_count();
    std::string proper_detail;
    if (proper) {
        try {
            check_proper(g, r.coloring, r.k);
            std::vector<int> class_size(r.k + 1, 0);
            for (int c : r.coloring.color_of) ++class_size[c];
            for (int c = 1; c <= r.k; ++c)
                if (class_size[c] * 2 != g.vertex_count()) {
                    proper = false;
                    proper_detail = "color class " + std::to_string(c) +
                                    " is not a perfect matching";
                }
        } catch (const PreconditionError& err) {
            proper = false;
            proper_detail = err.what();
        }
    } else {
        proper_detail = "coloring does not cover the edge set";
    }
    add_check(rep, "proper-coloring", proper, proper_detail);

    // (3) non-bipartite, with odd-walk witness
    auto bw = is_bipartite(g);
    add_check(rep, "non-bipartite", !bw.bipartite,
              bw.bipartite ? "graph is bipartite"
                           : "odd closed walk of length " +
                                 std::to_string(bw.odd_walk.size() - 1));

    // (4) K is an equivalent class
    bool k_equiv = true;
    std::string k_detail;
    try {
        RoleIndex roles = role_index(r);
        int m = r.m;

        // structural route, mirroring the cut/forcing argument:
        // consecutive link pairs are 2-edge-cuts with even sides
        for (int i = 1; i <= m - 1 && k_equiv; ++i) {
            EdgeId p1 = g.find_edge(roles.get("v1", i), roles.get("u1", i + 1));
            EdgeId p2 = g.find_edge(roles.get("v2", i), roles.get("u2", i + 1));
            if (p1 < 0 || p2 < 0 || !r.link_edges.contains(p1) || !r.link_edges.contains(p2)) {
                k_equiv = false;
                k_detail = "link pair at copy " + std::to_string(i) + " missing";
                break;
            }
            auto sides = edge_cut_sides(g, EdgeSet({p1, p2}));
            if (!sides || sides->first.size() % 2 != 0 || sides->second.size() % 2 != 0) {
                k_equiv = false;
                k_detail = "link pair at copy " + std::to_string(i) +
                           " is not a 2-edge-cut with even sides";
            }
        }
        // forcing premises: only designated corners leave their copy, each
        // through exactly one link edge
        for (VertexId v = 0; v < g.vertex_count() && k_equiv; ++v) {
            int external = 0;
            for (const auto& inc : g.incident(v))
                if (r.copy_labels[inc.to].first != r.copy_labels[v].first ||
                    r.link_edges.contains(inc.edge))
                    ++external;
            int want = r.copy_labels[v].second == "other" ? 0 : 1;
            if (external != want) {
                k_equiv = false;
                k_detail = "vertex " + g.label(v) + " has unexpected link edges";
            }
        }
        // copies minus their link edges are balanced bipartite pieces with
        // u-corners opposite v-corners
        Graph stripped = delete_edges(g, r.link_edges).graph;
        for (int i = 1; i <= m && k_equiv; ++i) {
            std::vector<VertexId> copy;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (r.copy_labels[v].first == i) copy.push_back(v);
            auto sub = induced_subgraph(stripped, copy);
            auto sub_bw = is_bipartite(sub.graph);
            if (!sub_bw.bipartite || copy.size() % 2 != 0) {
                k_equiv = false;
                k_detail = "copy " + std::to_string(i) + " is not an even bipartite piece";
                break;
            }
            std::vector<int> color_of_old(g.vertex_count(), -1);
            for (size_t idx = 0; idx < sub.old_vertex_of.size(); ++idx)
                color_of_old[sub.old_vertex_of[idx]] = sub_bw.coloring[idx];
            int cu1 = color_of_old[roles.get("u1", i)];
            if (color_of_old[roles.get("u2", i)] != cu1 ||
                color_of_old[roles.get("v1", i)] == cu1 ||
                color_of_old[roles.get("v2", i)] == cu1) {
                k_equiv = false;
                k_detail = "designated corners of copy " + std::to_string(i) +
                           " sit on the wrong sides";
            }
        }

        // independent route: pairwise equivalence by matchability queries
        if (k_equiv) {
            const auto& ids = r.link_edges.ids();
            for (size_t a = 0; a < ids.size() && k_equiv; ++a)
                for (size_t b = a + 1; b < ids.size(); ++b)
                    if (!feasibility::edges_equivalent(g, ids[a], ids[b])) {
                        k_equiv = false;
                        k_detail = "link edges " + std::to_string(ids[a]) + " and " +
                                   std::to_string(ids[b]) + " are separated by a matching";
                        break;
                    }
        }
        // enumeration route when small
        if (k_equiv && g.vertex_count() <= 14) {
            auto classes = feasibility::equivalent_classes(g);
            bool found = false;
            for (const auto& cls : classes.classes)
                if (cls.contains(r.link_edges.ids().front()) &&
                    cls.intersection(r.link_edges) == r.link_edges)
                    found = true;
            if (!found) {
                k_equiv = false;
                k_detail = "enumeration route does not place K inside one class";
            }
        }
    } catch (const std::exception& err) {
        k_equiv = false;
        k_detail = err.what();
    }
    add_check(rep, "K-equivalent-class", k_equiv, k_detail);

    // (5) X is not feasible
    bool x_ok;
    std::string x_detail;
    if (g.vertex_count() <= 14) {
        try {
            x_ok = !feasibility::is_feasible(g, r.test_set);
            x_detail = "parity spectrum over all perfect matchings";
        } catch (const std::exception& err) {
            x_ok = false;
            x_detail = err.what();
        }
    } else {
        // X is an even-size subset of the verified equivalent class K, so its
        // matching intersection is 0 or |X|, both even
        x_ok = k_equiv && r.test_set.size() >= 2 && r.test_set.size() % 2 == 0;
        x_detail = "follows from K being an equivalent class (|V| too large to enumerate)";
    }
    add_check(rep, "X-non-feasible", x_ok, x_detail);

    // (6) X not switching-equivalent to the empty set
    auto empty_verdict = switching::equivalent_to_empty(g, r.test_set);
    std::vector<char> alive(g.edge_count(), 1);
    for (EdgeId e : r.test_set) alive[e] = 0;
    bool gx_connected = components_masked(g, alive).size() == 1;
    if (gx_connected && !r.test_set.empty() && empty_verdict.equivalent)
        throw std::logic_error("nabla witness exists although G - X is connected");
    add_check(rep, "X-not-equivalent-empty", !empty_verdict.equivalent,
              gx_connected ? "G - X is connected" : "decided by parity coloring");

    // (7) X not switching-equivalent to E(G)
    auto full_verdict = switching::equivalent_to_full(g, r.test_set);
    auto gx = delete_edges(g, r.test_set);
    auto gx_bw = is_bipartite(gx.graph);
    if (!gx_bw.bipartite && full_verdict.equivalent)
        throw std::logic_error("complement nabla witness exists although G - X is odd");
    add_check(rep, "X-not-equivalent-full", !full_verdict.equivalent,
              gx_bw.bipartite ? "G - X is bipartite" : "G - X contains an odd cycle");

    return rep;
}

std::string serialize_construction(const ConstructionResult& r) {
    std::ostringstream out;
    out << serialize_graph(r.graph);
    auto emit = [&](const char* tag, EdgeId e) {
        auto [u, v] = r.graph.endpoints(e);
        out << tag << ' ' << r.graph.label(u) << ' ' << r.graph.label(v) << '\n';
    };
    for (EdgeId e : r.link_edges) emit("link-edge", e);
    for (EdgeId e : r.test_set) emit("test-edge", e);
    for (EdgeId e = 0; e < r.graph.edge_count(); ++e) {
        auto [u, v] = r.graph.endpoints(e);
        out << "color " << r.coloring.color_of[e] << ' ' << r.graph.label(u) << ' '
            << r.graph.label(v) << '\n';
    }
    return out.str();
}

ConstructionResult parse_construction(const std::string& text) {
    std::istringstream in(text);
    std::string line, graph_part;
    std::vector<std::tuple<int, std::string, std::string, std::string>> annotations;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "link-edge" || word == "test-edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, word + " line needs two labels");
            annotations.push_back({lineno, word, a, b});
        } else if (word == "color") {
            std::string c, a, b;
            if (!(ls >> c >> a >> b)) throw ParseError(lineno, "color line needs <c> <u> <v>");
            annotations.push_back({lineno, "color:" + c, a, b});
        } else {
            graph_part += line + "\n";
        }
    }
    ConstructionResult r;
    r.graph = parse_graph(graph_part);
    r.coloring.color_of.assign(r.graph.edge_count(), 0);
    std::vector<EdgeId> link_ids, test_ids;
    for (const auto& [ln, kind, a, b] : annotations) {
        auto ua = r.graph.vertex_of_label(a), ub = r.graph.vertex_of_label(b);
        if (!ua || !ub) throw ParseError(ln, "unknown vertex in annotation");
        EdgeId e = r.graph.find_edge(*ua, *ub);
        if (e < 0) throw ParseError(ln, "annotation names a missing edge " + a + " " + b);
        if (kind == "link-edge")
            link_ids.push_back(e);
        else if (kind == "test-edge")
            test_ids.push_back(e);
        else
            r.coloring.color_of[e] = std::stoi(kind.substr(6));
    }
    r.link_edges = EdgeSet(std::move(link_ids));
    r.test_set = EdgeSet(std::move(test_ids));
    for (VertexId v = 0; v < r.graph.vertex_count(); ++v) {
        const std::string& lbl = r.graph.label(v);
        auto caret = lbl.rfind('^');
        int copy = 0;
        std::string role = "other";
        if (caret != std::string::npos) {
            try {
                copy = std::stoi(lbl.substr(caret + 1));
            } catch (...) {
                copy = 0;
            }
            std::string head = lbl.substr(0, caret);
            if (head == "u1" || head == "u2" || head == "v1" || head == "v2") role = head;
        }
        r.copy_labels.push_back({copy, role});
    }
    r.k = r.graph.vertex_count() > 0 ? r.graph.degree(0) : 0;
    r.m = r.link_edges.size() / 2;
    return r;
}

}  // namespace mcg::construct
