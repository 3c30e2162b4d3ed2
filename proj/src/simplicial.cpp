#include "bilcert/simplicial.hpp"

#include <algorithm>
#include <set>

namespace bilcert {

namespace {

// Keep only the maximal sets.
std::vector<std::vector<EdgeId>> maximalize(std::vector<std::vector<EdgeId>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<EdgeId>> out;
    for (const auto& s : sets) {
        bool dominated = std::any_of(sets.begin(), sets.end(), [&](const auto& t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (!dominated) out.push_back(s);
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<EdgeId> vertices,
                                     std::vector<std::vector<EdgeId>> facets)
    : vertices_(std::move(vertices)), facets_(maximalize(std::move(facets))) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (const auto& f : facets_)
        for (EdgeId v : f)
            if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                throw Error("facet vertex e" + std::to_string(v) + " outside the vertex set");
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<EdgeId> vertices) {
    std::vector<std::vector<EdgeId>> facets{vertices};
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    std::size_t best = 0;
    for (const auto& f : facets_) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

bool SimplicialComplex::is_face(const std::vector<EdgeId>& face) const {
    std::vector<EdgeId> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(facets_.begin(), facets_.end(), [&](const auto& f) {
        return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
    });
}

std::vector<EdgeId> SimplicialComplex::face_vertices() const {
    std::set<EdgeId> present;
    for (const auto& f : facets_) present.insert(f.begin(), f.end());
    return {present.begin(), present.end()};
}

std::string SimplicialComplex::facets_key() const {
    std::string key;
    for (const auto& f : facets_) {
        for (EdgeId v : f) key += std::to_string(v) + ",";
        key += "|";
    }
    return key;
}

SimplicialComplex complex_of(const MonomialIdeal& mi, const std::vector<EdgeId>& vertices) {
    if (!mi.is_squarefree()) throw NotSquarefreeError("complex_of");
    std::set<EdgeId> ambient(vertices.begin(), vertices.end());
    for (const Monomial& m : mi.generators())
        for (EdgeId v : m.support())
            if (!ambient.count(v))
                throw Error("generator variable e" + std::to_string(v) +
                            " outside the complex vertex set");
    std::vector<std::vector<EdgeId>> facets;
    for (const auto& prime : minimal_primes(mi)) {
        std::vector<EdgeId> facet;
        std::set<EdgeId> in_prime(prime.begin(), prime.end());
        for (EdgeId v : ambient)
            if (!in_prime.count(v)) facet.push_back(v);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex({ambient.begin(), ambient.end()}, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, EdgeId v) {
    if (!std::binary_search(d.vertices().begin(), d.vertices().end(), v))
        throw Error("link: unknown vertex e" + std::to_string(v));
    std::vector<EdgeId> ambient;
    for (EdgeId w : d.vertices())
        if (w != v) ambient.push_back(w);
    std::vector<std::vector<EdgeId>> facets;
    for (const auto& f : d.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        std::vector<EdgeId> reduced;
        for (EdgeId w : f)
            if (w != v) reduced.push_back(w);
        facets.push_back(std::move(reduced));
    }
    return SimplicialComplex(std::move(ambient), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& d, EdgeId v) {
    if (!std::binary_search(d.vertices().begin(), d.vertices().end(), v))
        throw Error("deletion: unknown vertex e" + std::to_string(v));
    std::vector<EdgeId> ambient;
    for (EdgeId w : d.vertices())
        if (w != v) ambient.push_back(w);
    std::vector<std::vector<EdgeId>> facets;
    for (const auto& f : d.facets()) {
        std::vector<EdgeId> reduced;
        for (EdgeId w : f)
            if (w != v) reduced.push_back(w);
        facets.push_back(std::move(reduced));
    }
    return SimplicialComplex(std::move(ambient), std::move(facets));
}

// --- vertex decomposability ---------------------------------------------------

namespace {

VdResult vd_search(const SimplicialComplex& d, VdMemo& memo) {
    if (d.facets().empty()) {
        auto node = std::make_shared<VdNode>();
        node->tag = VdNode::Tag::Empty;
        return {node, ""};
    }
    if (d.facets().size() == 1) {
        auto node = std::make_shared<VdNode>();
        node->tag = VdNode::Tag::Simplex;
        return {node, ""};
    }
    const std::string key = d.facets_key();
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

    VdResult result;
    for (EdgeId v : d.face_vertices()) {
        SimplicialComplex lk = link(d, v);
        SimplicialComplex del = deletion(d, v);
        std::string why;
        if (!lk.is_pure())
            why = "link of e" + std::to_string(v) + " not pure";
        else if (!del.is_pure())
            why = "deletion of e" + std::to_string(v) + " not pure";
        else if (del.dim() != d.dim())
            why = "deletion of e" + std::to_string(v) + " drops dimension";
        else if (lk.dim() + 1 != d.dim())
            why = "link of e" + std::to_string(v) + " has wrong dimension";
        if (why.empty()) {
            VdResult lk_res = vd_search(lk, memo);
            VdResult del_res = lk_res.ok() ? vd_search(del, memo) : VdResult{};
            if (lk_res.ok() && del_res.ok()) {
                auto node = std::make_shared<VdNode>();
                node->tag = VdNode::Tag::Shed;
                node->shed = v;
                node->link_child = lk_res.witness;
                node->deletion_child = del_res.witness;
                result = {node, ""};
                break;
            }
            why = "e" + std::to_string(v) + ": link or deletion not vertex decomposable";
        }
        if (result.obstruction.empty()) result.obstruction = why;
    }
    memo.table.emplace(key, result);
    return result;
}

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& d, VdMemo& memo) {
    return vd_search(d, memo);
}

bool replay_witness(const SimplicialComplex& d, const VdNode& node) {
    switch (node.tag) {
        case VdNode::Tag::Empty:
            return d.facets().empty();
        case VdNode::Tag::Simplex:
            return d.facets().size() == 1;
        case VdNode::Tag::Shed: {
            std::vector<EdgeId> fv = d.face_vertices();
            if (std::find(fv.begin(), fv.end(), node.shed) == fv.end()) return false;
            if (!node.link_child || !node.deletion_child) return false;
            SimplicialComplex lk = link(d, node.shed);
            SimplicialComplex del = deletion(d, node.shed);
            if (!lk.is_pure() || !del.is_pure()) return false;
            if (del.dim() != d.dim() || lk.dim() + 1 != d.dim()) return false;
            return replay_witness(lk, *node.link_child) &&
                   replay_witness(del, *node.deletion_child);
        }
    }
    return false;
}

// --- complex identity verifiers --------------------------------------------

VdVerdict verify_vd(const Graph& g, const PathOrderedMatching& pom, const LexOrder& ord,
                    VdMemo& memo) {
    VdVerdict verdict;
    IdealPresentation ideal = build_I(g, pom, ord);
    MonomialIdeal in = initial_ideal(ideal);
    if (!in.is_squarefree()) {
        verdict.diagnostics = "initial ideal is not squarefree";
        return verdict;
    }
    SimplicialComplex d = complex_of(in, g.edge_ids());
    verdict.dim = d.dim();
    verdict.pure = d.is_pure();
    verdict.expected_dim = static_cast<int>(g.edge_count()) - height(in) - 1;

    VdResult res = is_vertex_decomposable(d, memo);
    if (!res.ok()) {
        verdict.diagnostics = "not vertex decomposable: " + res.obstruction;
        return verdict;
    }
    verdict.witness = res.witness;
    if (!replay_witness(d, *res.witness)) {
        verdict.diagnostics = "witness replay failed";
        return verdict;
    }
    if (!verdict.pure) {
        verdict.diagnostics = "complex is not pure";
        return verdict;
    }
    if (verdict.dim != verdict.expected_dim) {
        verdict.diagnostics = "dimension " + std::to_string(verdict.dim) +
                              " differs from expected " + std::to_string(verdict.expected_dim);
        return verdict;
    }
    verdict.ok = true;
    return verdict;
}

IdentityVerdict verify_extension_identities(const Graph& g, const PathOrderedMatching& pom,
                                            const PathOrderedMatching& extended, EdgeId ext,
                                            const LexOrder& ord) {
    IdentityVerdict verdict;
    if (ord.priority().empty() || ord.priority().front() != ext) {
        verdict.diagnostics = "hypothesis violation: order does not have e" +
                              std::to_string(ext) + " on top";
        return verdict;
    }
    SimplicialComplex delta = complex_of(initial_ideal(build_I(g, pom, ord)), g.edge_ids());

    // Deletion identity: removing ext from the complex is the complex of the
    // graph without ext.
    Graph g_minus = delete_edge(g, ext);
    SimplicialComplex delta_minus =
        complex_of(initial_ideal(build_I(g_minus, pom, ord)), g_minus.edge_ids());
    if (!(deletion(delta, ext) == delta_minus)) {
        verdict.diagnostics = "deletion identity fails at e" + std::to_string(ext);
        return verdict;
    }

    // Link identity: the extended matching's complex is a cone with apex ext
    // and its base is the link of ext.
    SimplicialComplex delta_ext =
        complex_of(initial_ideal(build_I(g, extended, ord)), g.edge_ids());
    for (const auto& f : delta_ext.facets()) {
        if (!std::binary_search(f.begin(), f.end(), ext)) {
            verdict.diagnostics = "extended complex is not a cone with apex e" +
                                  std::to_string(ext);
            return verdict;
        }
    }
    if (!(link(delta, ext) == deletion(delta_ext, ext))) {
        verdict.diagnostics = "link identity fails at e" + std::to_string(ext);
        return verdict;
    }
    verdict.ok = true;
    verdict.diagnostics = "deletion and link identities hold at e" + std::to_string(ext);
    return verdict;
}

IdentityVerdict verify_split_identities(const Graph& g, const PathOrderedMatching& pom,
                                        EdgeId x, const LexOrder& ord) {
    IdentityVerdict verdict;
    MonomialIdeal in_full = initial_ideal(build_I(g, pom, ord));
    Graph g_minus = delete_edge(g, x);
    MonomialIdeal in_minus = initial_ideal(build_I(g_minus, pom, ord));

    if (!mi_equal(in_full, mi_sum(in_minus, MonomialIdeal({Monomial::variable(x)})))) {
        verdict.diagnostics = "initial ideals do not split off (e" + std::to_string(x) + ")";
        return verdict;
    }
    if (!mi_member(Monomial::variable(x), in_full)) {
        verdict.diagnostics = "{e" + std::to_string(x) + "} is unexpectedly a face";
        return verdict;
    }
    SimplicialComplex delta = complex_of(in_full, g.edge_ids());
    SimplicialComplex restricted = deletion(delta, x);
    SimplicialComplex delta_minus = complex_of(in_minus, g_minus.edge_ids());
    if (!(restricted == delta_minus)) {
        verdict.diagnostics = "restriction to E minus e" + std::to_string(x) +
                              " differs from the smaller graph's complex";
        return verdict;
    }
    verdict.ok = true;
    verdict.diagnostics = "split identities hold at e" + std::to_string(x);
    return verdict;
}

}  // namespace bilcert
