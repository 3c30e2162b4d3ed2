#include "bilcert/pom.hpp"

#include <algorithm>
#include <set>

namespace bilcert {

bool PathOrderedMatching::contains(EdgeId id) const {
    return std::find(edges.begin(), edges.end(), id) != edges.end();
}

namespace {

struct LabelSearch {
    const Graph& g;
    const std::vector<EdgeId>& edges;
    int r;
    std::map<VertexId, int> labels;
    // Deepest failure seen, for error reporting: chain failures rank by how
    // many connector edges were placed; a completed labeling failing (b)
    // ranks above all of them.
    int best_depth = -1;
    std::optional<PomError> best_error;

    void record(int depth, PomError err) {
        if (depth > best_depth) {
            best_depth = depth;
            best_error = std::move(err);
        }
    }

    // Checks condition (b) against every graph edge with both endpoints
    // labeled; returns the offending edge if any.
    std::optional<EdgeId> condition_b_violation() const {
        for (const Edge& e : g.edges()) {
            auto iu = labels.find(e.u), iv = labels.find(e.v);
            if (iu == labels.end() || iv == labels.end()) continue;
            int a = iu->second, b = iv->second;
            if (a > b) std::swap(a, b);
            if (a <= r && b > r) {
                if (b - r < a) return e.id;  // backward edge
            } else {
                return e.id;  // matched vertices on one side joined: impossible when bipartite
            }
        }
        return std::nullopt;
    }

    bool assign(int i, VertexId top, VertexId bottom) {
        labels[top] = i + 1;
        labels[bottom] = i + 1 + r;
        if (i + 1 == r) {
            if (auto bad = condition_b_violation()) {
                record(r, PomError(PomError::Kind::ConditionB,
                                   "condition (b) fails at edge e" + std::to_string(*bad),
                                   0, *bad));
                labels.erase(top);
                labels.erase(bottom);
                return false;
            }
            return true;
        }
        // Condition (a): the bottom of the next edge is the endpoint
        // adjacent to this top.
        const Edge& next = g.edge(edges[static_cast<std::size_t>(i) + 1]);
        for (VertexId cand : {std::min(next.u, next.v), std::max(next.u, next.v)}) {
            VertexId other = cand == next.u ? next.v : next.u;
            if (g.edge_between(top, cand) && assign(i + 1, other, cand)) return true;
        }
        record(i, PomError(PomError::Kind::ConditionA,
                           "condition (a) fails: no edge f_" + std::to_string(i + 1) +
                               " from vertex " + std::to_string(top) +
                               " to an endpoint of e" + std::to_string(next.id),
                           i + 1));
        labels.erase(top);
        labels.erase(bottom);
        return false;
    }
};

}  // namespace

PathOrderedMatching validate_pom(const Graph& g, const std::vector<EdgeId>& edges) {
    std::set<EdgeId> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size())
        throw PomError(PomError::Kind::NotAMatching, "repeated edge in matching");
    std::set<VertexId> met;
    for (EdgeId id : edges) {
        const Edge& e = g.edge(id);
        if (!met.insert(e.u).second || !met.insert(e.v).second)
            throw PomError(PomError::Kind::NotAMatching,
                           "edges share a vertex: not a matching");
    }

    PathOrderedMatching pom;
    pom.edges = edges;
    if (edges.empty()) return pom;

    const int r = static_cast<int>(edges.size());
    const Edge& first = g.edge(edges[0]);
    LabelSearch search{g, edges, r, {}, -1, std::nullopt};
    // Two global orientation choices; lower endpoint of e_1 as label 1 first.
    if (search.assign(0, std::min(first.u, first.v), std::max(first.u, first.v)) ||
        search.assign(0, std::max(first.u, first.v), std::min(first.u, first.v))) {
        pom.labeling = search.labels;
        return pom;
    }
    throw *search.best_error;
}

std::optional<PathOrderedMatching> try_validate_pom(const Graph& g,
                                                    const std::vector<EdgeId>& edges) {
    try {
        return validate_pom(g, edges);
    } catch (const PomError&) {
        return std::nullopt;
    }
}

PathOrderedMatching extend_pom(const Graph& g, const PathOrderedMatching& pom) {
    PathOrderedMatching current = validate_pom(g, pom.edges);
    for (bool grew = true; grew;) {
        grew = false;
        for (EdgeId cand : g.edge_ids()) {
            if (current.contains(cand)) continue;
            for (std::size_t pos = 0; pos <= current.edges.size() && !grew; ++pos) {
                std::vector<EdgeId> attempt = current.edges;
                attempt.insert(attempt.begin() + static_cast<long>(pos), cand);
                if (auto valid = try_validate_pom(g, attempt)) {
                    current = *valid;
                    grew = true;
                }
            }
            if (grew) break;
        }
    }
    return current;
}

bool is_maximal(const Graph& g, const PathOrderedMatching& pom) {
    validate_pom(g, pom.edges);
    for (EdgeId cand : g.edge_ids()) {
        if (pom.contains(cand)) continue;
        for (std::size_t pos = 0; pos <= pom.edges.size(); ++pos) {
            std::vector<EdgeId> attempt = pom.edges;
            attempt.insert(attempt.begin() + static_cast<long>(pos), cand);
            if (try_validate_pom(g, attempt)) return false;
        }
    }
    // Insertions failed; fall back to every ordering of every augmented set.
    for (EdgeId cand : g.edge_ids()) {
        if (pom.contains(cand)) continue;
        std::vector<EdgeId> augmented = pom.edges;
        augmented.push_back(cand);
        std::sort(augmented.begin(), augmented.end());
        do {
            if (try_validate_pom(g, augmented)) return false;
        } while (std::next_permutation(augmented.begin(), augmented.end()));
    }
    return true;
}

std::vector<MSetMember> compute_M(const Graph& g, const PathOrderedMatching& pom) {
    std::map<EdgeId, int> position;  // edge -> 1-based index in the matching
    for (std::size_t i = 0; i < pom.edges.size(); ++i)
        position[pom.edges[i]] = static_cast<int>(i) + 1;

    std::map<Monomial, MSetMember> found;
    for (const Cycle& c : enumerate_cycles(g)) {
        Monomial cofactor[2];
        std::vector<int> indices[2];
        const auto& seq = c.edges();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            int side = static_cast<int>(i % 2);
            auto it = position.find(seq[i]);
            if (it != position.end())
                indices[side].push_back(it->second);
            else
                cofactor[side] = cofactor[side] * Monomial::variable(seq[i]);
        }
        for (int side = 0; side < 2; ++side) {
            if (indices[side].empty()) continue;
            std::sort(indices[side].begin(), indices[side].end());
            found.emplace(cofactor[side],
                          MSetMember{cofactor[side], c, indices[side]});
        }
    }
    std::vector<MSetMember> out;
    for (auto& [m, member] : found) out.push_back(std::move(member));
    return out;
}

IdealPresentation build_I(const Graph& g, const PathOrderedMatching& pom,
                          const LexOrder& ord) {
    std::set<EdgeId> matched(pom.edges.begin(), pom.edges.end());
    std::vector<TwoTermPoly> gens = toric_generators(delete_edges(g, matched), ord);
    std::vector<Monomial> cofactors;
    for (const MSetMember& member : compute_M(g, pom)) cofactors.push_back(member.m);
    MonomialIdeal minimalized(std::move(cofactors));
    for (const Monomial& m : minimalized.generators())
        gens.push_back(TwoTermPoly::monomial(1, m));
    return IdealPresentation(std::move(gens), ord);
}

EdgeId find_free_variable(const Graph& g, const PathOrderedMatching& pom) {
    if (!g.is_leafless())
        throw NoFreeVariableError("graph has a leaf; strip leaves first");
    if (!is_maximal(g, pom))
        throw NoFreeVariableError("matching is not maximal");
    std::optional<EdgeId> best;
    for (const MSetMember& member : compute_M(g, pom)) {
        if (!member.m.is_variable()) continue;
        EdgeId id = member.m.support().front();
        if (!best || id < *best) best = id;
    }
    if (!best)
        throw NoFreeVariableError(
            "no indeterminate among the cofactors of a maximal matching in a "
            "leafless graph");
    if (!try_validate_pom(delete_edge(g, *best), pom.edges))
        throw NoFreeVariableError("matching does not stay valid after removing e" +
                                  std::to_string(*best));
    return *best;
}

}  // namespace bilcert
