#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

using VertexId = int;
using EdgeId = int;

// Input file is malformed; `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

// An operation was called outside its contract (wrong graph class, bad ids, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact answer would require more work than the configured bound allows.
// Deliberately distinct from PreconditionError: the input is fine, the scale is not.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A/B sides of a bipartite graph, stored per vertex (0 = A, 1 = B).
struct Bipartition {
    std::vector<uint8_t> side;

    std::vector<VertexId> side_a() const;
    std::vector<VertexId> side_b() const;
};

// Canonical (sorted, duplicate-free) subset of the edge ids of some host graph.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<EdgeId> ids);

    static EdgeSet full(int edge_count);

    bool contains(EdgeId e) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<EdgeId>& ids() const { return ids_; }

    EdgeSet symmetric_difference(const EdgeSet& other) const;
    EdgeSet set_union(const EdgeSet& other) const;
    EdgeSet intersection(const EdgeSet& other) const;
    EdgeSet complement(int edge_count) const;

    bool operator==(const EdgeSet&) const = default;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

private:
    std::vector<EdgeId> ids_;  // sorted ascending
};

/// Undirected simple graph. Vertices are dense ints 0..n-1; the original string
/// labels live in a side table. Edge ids are stable: they index into edges().
/// Immutable once built, so all queries are safe to run concurrently.
class Graph {
public:
    struct Incidence {
        VertexId to;
        EdgeId edge;
    };

    Graph() = default;
    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    const std::string& label(VertexId v) const;
    std::optional<VertexId> vertex_of_label(const std::string& label) const;

    const std::vector<Incidence>& incident(VertexId v) const;
    int degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v) >= 0; }

    // -1 when the edge is absent.
    EdgeId find_edge(VertexId u, VertexId v) const;

    bool has_bipartition() const { return bipartition_.has_value(); }
    const Bipartition& bipartition() const;
    // Validates that the sides cover V and that every edge crosses.
    void attach_bipartition(Bipartition b);

    // All incident edges of v as an EdgeSet.
    EdgeSet incident_edges(VertexId v) const;

    void check_vertex(VertexId v) const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Incidence>> adj_;
    std::optional<Bipartition> bipartition_;
};

// ---- file format ------------------------------------------------------------

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// ---- basic structure queries ------------------------------------------------

// All edges with exactly one endpoint in u (the edge boundary nabla U).
EdgeSet nabla(const Graph& g, const std::vector<VertexId>& u);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);
// Same, with `edge_alive[e] == 0` edges treated as deleted.
std::vector<std::vector<VertexId>> components_masked(const Graph& g,
                                                     const std::vector<char>& edge_alive);

struct BipartitenessWitness {
    bool bipartite;
    // bipartite: a valid 2-coloring (0/1 per vertex).
    std::vector<uint8_t> coloring;
    // not bipartite: a closed walk of odd length, as a vertex sequence
    // (first == last), every step an edge of g.
    std::vector<VertexId> odd_walk;
};

BipartitenessWitness is_bipartite(const Graph& g);

// Minimum number of vertices whose removal disconnects g (n-1 for complete
// graphs). Exhaustive separator search for n <= 12, max-flow Menger beyond.
int vertex_connectivity(const Graph& g);

// If g - s has exactly two connected components, returns them (side containing
// the smallest vertex first); otherwise nullopt.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
edge_cut_sides(const Graph& g, const EdgeSet& s);

// Graph with the given edges removed (vertex ids preserved; edge ids are
// renumbered, old_edge_of maps new id -> old id).
struct EdgeDeletion {
    Graph graph;
    std::vector<EdgeId> old_edge_of;
};
EdgeDeletion delete_edges(const Graph& g, const EdgeSet& s);

// Subgraph induced by `vertices` (ids renumbered; old_vertex_of maps back).
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> old_vertex_of;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);

}  // namespace mcg
