#ifndef BILCERT_GRAPH_HPP
#define BILCERT_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bilcert/errors.hpp"

namespace bilcert {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId u, v;  // normalized u < v

    bool operator==(const Edge&) const = default;
};

// Simple labeled graph. Edge ids are stable symbols that double as the ring
// variables; they are assigned once and never reused after deletion.
class Graph {
public:
    Graph() = default;
    // Endpoint pairs get ids 1..q in order.
    explicit Graph(const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs);
    // Explicit vertex set and (id, u, v) triples, e.g. from the JSON form.
    Graph(std::set<VertexId> vertices, std::vector<Edge> edges);

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted by id
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
    bool has_edge(EdgeId id) const;
    const Edge& edge(EdgeId id) const;  // throws UnknownEdgeError
    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

    int degree(VertexId v) const;
    // (neighbor, via edge) pairs sorted by neighbor id.
    std::vector<std::pair<VertexId, EdgeId>> neighbors(VertexId v) const;

    std::vector<EdgeId> edge_ids() const;
    bool is_leafless() const;  // no vertex of degree 1
    // Single component covering every vertex (an isolated vertex counts as
    // its own component); the empty graph is not connected.
    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    std::set<VertexId> vertices_;
    std::vector<Edge> edges_;

    void validate() const;
};

struct Bipartition {
    std::set<VertexId> part1, part2;  // cover all non-isolated vertices
};

// Simple cycle in canonical form: the edge-id sequence is rotated to start
// at the least edge id and oriented so the second id is smaller than the
// last. Equality of cycles is then plain equality of sequences.
class Cycle {
public:
    // Canonicalizes and validates a cyclic edge sequence against g:
    // consecutive edges must share exactly one vertex, vertices distinct.
    Cycle(std::vector<EdgeId> edge_seq, const Graph& g);

    const std::vector<EdgeId>& edges() const { return edges_; }
    std::size_t length() const { return edges_.size(); }
    bool contains(EdgeId id) const;

    bool operator==(const Cycle&) const = default;
    auto operator<=>(const Cycle&) const = default;

private:
    std::vector<EdgeId> edges_;
};

// --- parsing / serialization ---------------------------------------------

// Accepts the edge-list text format (lines "u v") or, when the first
// non-space character is '{', the JSON form
// {"vertices":[...],"edges":[[id,u,v],...]}.
Graph parse_graph(const std::string& text);

std::string to_edge_list(const Graph& g);   // canonical text form
std::string to_canonical_json(const Graph& g);

// --- operations ------------------------------------------------------------

// BFS 2-coloring; the least vertex of each component goes to part1.
// Throws OddCycleError with a witness when g is not bipartite.
Bipartition bipartition(const Graph& g);

// Removes degree-1 vertices (with their edges) until none remain, then
// drops isolated vertices. The set of cycles is unchanged.
Graph strip_leaves(const Graph& g);

Graph delete_edge(const Graph& g, EdgeId e);
Graph delete_edges(const Graph& g, const std::set<EdgeId>& ids);

// All simple cycles of a bipartite graph, canonical, sorted by edge-id
// sequence. The count grows exponentially with the graph, hence the guard.
struct CycleLimitError : Error {
    explicit CycleLimitError(std::size_t limit)
        : Error("cycle count exceeds --max-cycles limit " + std::to_string(limit)) {}
};
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_cycles = 1u << 20);

}  // namespace bilcert

#endif
