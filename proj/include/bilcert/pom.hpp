#ifndef BILCERT_POM_HPP
#define BILCERT_POM_HPP

#include <map>
#include <optional>
#include <vector>

#include "bilcert/graph.hpp"
#include "bilcert/groebner.hpp"
#include "bilcert/toric.hpp"

namespace bilcert {

// Ordered matching e_1..e_r together with the vertex relabeling that
// witnesses the defining conditions: after relabeling, e_i = {i, i+r},
//   (a) f_i = {i, i+1+r} is an edge for i = 1..r-1,
//   (b) every edge {i, j+r} between matched vertices has j >= i.
struct PathOrderedMatching {
    std::vector<EdgeId> edges;
    std::map<VertexId, int> labeling;  // old vertex -> new label in [1..2r]

    std::size_t length() const { return edges.size(); }
    bool contains(EdgeId id) const;
};

struct PomError : Error {
    enum class Kind { NotAMatching, ConditionA, ConditionB };
    Kind kind;
    int index = 0;        // ConditionA: the i whose f_i is missing
    EdgeId offending = 0; // ConditionB: the backward edge

    PomError(Kind k, const std::string& msg, int index_ = 0, EdgeId offending_ = 0)
        : Error(msg), kind(k), index(index_), offending(offending_) {}
};

// Constructs the witness labeling or throws PomError. The labeling is not
// searched over all bijections: condition (a) chains the orientation of
// each edge from the orientation of the first one, leaving at most two
// global choices in a bipartite graph; both are tried deterministically
// (lower endpoint of e_1 as label 1 first).
PathOrderedMatching validate_pom(const Graph& g, const std::vector<EdgeId>& edges);

std::optional<PathOrderedMatching> try_validate_pom(const Graph& g,
                                                    const std::vector<EdgeId>& edges);

// Greedy maximal extension: candidate edges in ascending id order, insertion
// positions left to right, restarting after every successful insertion. The
// input edges keep their relative order.
PathOrderedMatching extend_pom(const Graph& g, const PathOrderedMatching& pom);

// Subset-maximality: no single-edge superset validates, tested via all
// insertions preserving order and, when those fail, all orderings of the
// augmented set. Exhaustive at desk scale.
bool is_maximal(const Graph& g, const PathOrderedMatching& pom);

// A cofactor m of the matching: some cycle w has T_w = m * prod_{i in I} e_i - n
// with nonempty I. Both cycle sides may contribute.
struct MSetMember {
    Monomial m;
    Cycle witness;
    std::vector<int> indices;  // the I, 1-based positions into the matching
};

// All distinct cofactors, sorted by monomial; the witness kept for each is
// the first found when scanning canonical cycles in order.
std::vector<MSetMember> compute_M(const Graph& g, const PathOrderedMatching& pom);

// I_e^G: cycle binomials of the graph minus the matched edges, plus the
// cofactor monomials (minimalized under divisibility). The empty matching
// gives P(G).
IdealPresentation build_I(const Graph& g, const PathOrderedMatching& pom,
                          const LexOrder& ord);

struct NoFreeVariableError : Error {
    explicit NoFreeVariableError(const std::string& msg) : Error(msg) {}
};

// For a leafless graph and maximal matching, the cofactor set contains an
// indeterminate x, and the matching stays valid in G minus x; returns the
// smallest such x and certifies both facts.
EdgeId find_free_variable(const Graph& g, const PathOrderedMatching& pom);

}  // namespace bilcert

#endif
