#include "bilcert/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace bilcert {

OddCycleError::OddCycleError(std::vector<int> edges)
    : Error("graph is not bipartite (odd cycle of length " +
            std::to_string(edges.size()) + " found)"),
      witness_edges(std::move(edges)) {}

// --- Graph -------------------------------------------------------------------

Graph::Graph(const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs) {
    EdgeId next = 1;
    for (auto [u, v] : endpoint_pairs) {
        if (u > v) std::swap(u, v);
        vertices_.insert(u);
        vertices_.insert(v);
        edges_.push_back(Edge{next++, u, v});
    }
    validate();
}

Graph::Graph(std::set<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    validate();
}

void Graph::validate() const {
    std::set<EdgeId> ids;
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : edges_) {
        if (e.id <= 0) throw Error("edge ids must be positive");
        if (!ids.insert(e.id).second)
            throw Error("duplicate edge id e" + std::to_string(e.id));
        if (e.u == e.v)
            throw Error("loop at vertex " + std::to_string(e.u));
        if (e.u <= 0 || e.v <= 0) throw Error("vertex ids must be positive");
        if (!vertices_.count(e.u)) throw UnknownVertexError(e.u);
        if (!vertices_.count(e.v)) throw UnknownVertexError(e.v);
        if (!pairs.insert({e.u, e.v}).second)
            throw Error("duplicate edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}");
    }
    for (VertexId v : vertices_)
        if (v <= 0) throw Error("vertex ids must be positive");
}

bool Graph::has_edge(EdgeId id) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [id](const Edge& e) { return e.id == id; });
}

const Edge& Graph::edge(EdgeId id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw UnknownEdgeError(id);
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges_)
        if (e.u == a && e.v == b) return e.id;
    return std::nullopt;
}

int Graph::degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<std::pair<VertexId, EdgeId>> Graph::neighbors(VertexId v) const {
    std::vector<std::pair<VertexId, EdgeId>> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back({e.v, e.id});
        else if (e.v == v) out.push_back({e.u, e.id});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> Graph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
}

bool Graph::is_leafless() const {
    for (VertexId v : vertices_)
        if (degree(v) == 1) return false;
    return true;
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return false;
    std::set<VertexId> seen;
    std::deque<VertexId> queue{*vertices_.begin()};
    seen.insert(*vertices_.begin());
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (auto [w, id] : neighbors(v)) {
            (void)id;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == vertices_.size();
}

// --- Cycle ---------------------------------------------------------------

Cycle::Cycle(std::vector<EdgeId> edge_seq, const Graph& g) : edges_(std::move(edge_seq)) {
    const std::size_t n = edges_.size();
    if (n < 3) throw Error("cycle must have at least 3 edges");
    std::set<EdgeId> distinct(edges_.begin(), edges_.end());
    if (distinct.size() != n) throw Error("cycle repeats an edge");

    // Consecutive edges (cyclically) must share exactly one vertex, and the
    // shared vertices must be pairwise distinct.
    std::set<VertexId> met;
    for (std::size_t i = 0; i < n; ++i) {
        const Edge& a = g.edge(edges_[i]);
        const Edge& b = g.edge(edges_[(i + 1) % n]);
        std::vector<VertexId> shared;
        for (VertexId x : {a.u, a.v})
            if (x == b.u || x == b.v) shared.push_back(x);
        if (shared.size() != 1)
            throw Error("consecutive cycle edges e" + std::to_string(a.id) + ", e" +
                        std::to_string(b.id) + " do not share exactly one vertex");
        if (!met.insert(shared[0]).second)
            throw Error("cycle revisits vertex " + std::to_string(shared[0]));
    }

    // Canonical rotation: least edge id first; orientation: second < last.
    auto least = std::min_element(edges_.begin(), edges_.end());
    std::rotate(edges_.begin(), least, edges_.end());
    if (n >= 2 && edges_[1] > edges_.back())
        std::reverse(edges_.begin() + 1, edges_.end());
}

bool Cycle::contains(EdgeId id) const {
    return std::find(edges_.begin(), edges_.end(), id) != edges_.end();
}

// --- parsing / serialization ----------------------------------------------

namespace {

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        long u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError(lineno, "expected \"u v\", got \"" + line + "\"");
        if (u <= 0 || v <= 0)
            throw ParseError(lineno, "vertex ids must be positive");
        if (u == v)
            throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        VertexId a = static_cast<VertexId>(u), b = static_cast<VertexId>(v);
        std::pair<VertexId, VertexId> key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second)
            throw ParseError(lineno, "duplicate edge {" + std::to_string(key.first) +
                                         "," + std::to_string(key.second) + "}");
        pairs.push_back({a, b});
    }
    return Graph(pairs);
}

Graph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("JSON graph must have \"vertices\" and \"edges\"");
    std::set<VertexId> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw ParseError("vertices must be integers");
        vertices.insert(v.get<VertexId>());
    }
    std::vector<Edge> edges;
    for (const auto& t : j["edges"]) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("each edge must be [id, u, v]");
        edges.push_back(Edge{t[0].get<EdgeId>(), t[1].get<VertexId>(), t[2].get<VertexId>()});
    }
    try {
        return Graph(std::move(vertices), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_json_graph(text);
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string to_canonical_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.id, e.u, e.v});
    return j.dump(2) + "\n";
}

// --- bipartition -----------------------------------------------------------

namespace {

// Reconstructs an odd closed walk witness from the BFS forest when the edge
// {a, b} joins two vertices of the same color.
std::vector<EdgeId> odd_cycle_witness(VertexId a, VertexId b, EdgeId conflict,
                                      const std::map<VertexId, std::pair<VertexId, EdgeId>>& parent) {
    auto chain_to_root = [&](VertexId v) {
        std::vector<std::pair<VertexId, EdgeId>> chain;  // (vertex, edge to parent)
        while (parent.count(v)) {
            auto [p, e] = parent.at(v);
            chain.push_back({v, e});
            v = p;
        }
        chain.push_back({v, 0});  // root
        return chain;
    };
    auto ca = chain_to_root(a);
    auto cb = chain_to_root(b);
    // Trim the common tail (from the root side) down to the LCA.
    while (ca.size() >= 2 && cb.size() >= 2 &&
           ca[ca.size() - 2].first == cb[cb.size() - 2].first) {
        ca.pop_back();
        cb.pop_back();
    }
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i + 1 < ca.size(); ++i) edges.push_back(ca[i].second);
    edges.push_back(conflict);
    // a-side edges were collected from a upward; b side goes downward.
    std::vector<EdgeId> down;
    for (std::size_t i = 0; i + 1 < cb.size(); ++i) down.push_back(cb[i].second);
    edges.insert(edges.begin(), down.rbegin(), down.rend());
    return edges;
}

}  // namespace

Bipartition bipartition(const Graph& g) {
    Bipartition bp;
    std::map<VertexId, int> color;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    for (VertexId root : g.vertices()) {
        if (color.count(root) || g.degree(root) == 0) continue;
        color[root] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (auto [w, eid] : g.neighbors(v)) {
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    parent[w] = {v, eid};
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    throw OddCycleError(odd_cycle_witness(v, w, eid, parent));
                }
            }
        }
    }
    for (auto [v, c] : color)
        (c == 0 ? bp.part1 : bp.part2).insert(v);
    return bp;
}

// --- strip_leaves / deletion -----------------------------------------------

Graph strip_leaves(const Graph& g) {
    std::set<VertexId> vertices = g.vertices();
    std::vector<Edge> edges = g.edges();
    for (;;) {
        std::map<VertexId, int> deg;
        for (const auto& e : edges) {
            deg[e.u]++;
            deg[e.v]++;
        }
        std::set<VertexId> leaves;
        for (VertexId v : vertices)
            if (deg.count(v) && deg[v] == 1) leaves.insert(v);
        if (leaves.empty()) break;
        std::erase_if(edges, [&](const Edge& e) {
            return leaves.count(e.u) || leaves.count(e.v);
        });
        for (VertexId v : leaves) vertices.erase(v);
    }
    std::map<VertexId, int> deg;
    for (const auto& e : edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    std::erase_if(vertices, [&](VertexId v) { return !deg.count(v); });
    return Graph(std::move(vertices), std::move(edges));
}

Graph delete_edge(const Graph& g, EdgeId id) {
    if (!g.has_edge(id)) throw UnknownEdgeError(id);
    std::vector<Edge> edges = g.edges();
    std::erase_if(edges, [id](const Edge& e) { return e.id == id; });
    return Graph(g.vertices(), std::move(edges));
}

Graph delete_edges(const Graph& g, const std::set<EdgeId>& ids) {
    Graph out = g;
    for (EdgeId id : ids) out = delete_edge(out, id);
    return out;
}

// --- cycle enumeration -------------------------------------------------------

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_cycles) {
    bipartition(g);  // enforce the bipartite precondition

    std::vector<Cycle> cycles;
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::set<VertexId> on_path;

    // All simple cycles whose least vertex is the DFS root; each is found
    // once thanks to the direction rule path[1] < path.back().
    std::function<void(VertexId, VertexId)> extend = [&](VertexId root, VertexId cur) {
        for (auto [w, eid] : g.neighbors(cur)) {
            if (w == root && path_edges.size() >= 2) {
                if (path[1] < path.back()) {
                    std::vector<EdgeId> seq = path_edges;
                    seq.push_back(eid);
                    cycles.emplace_back(std::move(seq), g);
                    if (cycles.size() > max_cycles) throw CycleLimitError(max_cycles);
                }
            } else if (w > root && !on_path.count(w)) {
                path.push_back(w);
                path_edges.push_back(eid);
                on_path.insert(w);
                extend(root, w);
                on_path.erase(w);
                path_edges.pop_back();
                path.pop_back();
            }
        }
    };

    for (VertexId root : g.vertices()) {
        path = {root};
        path_edges.clear();
        on_path = {root};
        extend(root, root);
    }

    std::sort(cycles.begin(), cycles.end());
    for (const Cycle& c : cycles)
        if (c.length() % 2 != 0)
            throw Error("odd cycle enumerated in a bipartite graph");
    return cycles;
}

}  // namespace bilcert
