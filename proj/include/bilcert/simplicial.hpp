#ifndef BILCERT_SIMPLICIAL_HPP
#define BILCERT_SIMPLICIAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bilcert/groebner.hpp"
#include "bilcert/pom.hpp"

namespace bilcert {

// Complex on a set of edge-ids, stored by its facets (an antichain, each
// facet sorted, the list sorted). dim is -1 for the empty-simplex {()} and
// -2 for the void complex with no faces at all.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<EdgeId> vertices,
                      std::vector<std::vector<EdgeId>> facets);

    static SimplicialComplex full_simplex(std::vector<EdgeId> vertices);

    const std::vector<EdgeId>& vertices() const { return vertices_; }
    const std::vector<std::vector<EdgeId>>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    int dim() const;
    bool is_pure() const;
    bool is_face(const std::vector<EdgeId>& face) const;
    // Vertices that are actually faces, i.e. appear in some facet; these are
    // the shedding candidates.
    std::vector<EdgeId> face_vertices() const;

    std::string facets_key() const;  // canonical string, memo key

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<EdgeId> vertices_;
    std::vector<std::vector<EdgeId>> facets_;
};

// Stanley-Reisner complex of a squarefree monomial ideal: facets are the
// complements of the minimal transversals of the generator supports. The
// zero ideal gives the full simplex.
SimplicialComplex complex_of(const MonomialIdeal& mi, const std::vector<EdgeId>& vertices);

SimplicialComplex link(const SimplicialComplex& d, EdgeId v);
SimplicialComplex deletion(const SimplicialComplex& d, EdgeId v);

// Recursion tree witnessing vertex decomposability: at each inner node the
// shedding vertex and subtrees for link and deletion; leaves mark the empty
// complex or a simplex.
struct VdNode {
    enum class Tag { Empty, Simplex, Shed };
    Tag tag = Tag::Empty;
    EdgeId shed = 0;
    std::shared_ptr<const VdNode> link_child, deletion_child;
};

struct VdResult {
    std::shared_ptr<const VdNode> witness;  // null when not vertex decomposable
    std::string obstruction;                // first failure when not VD
    bool ok() const { return witness != nullptr; }
};

// Memo table shared across a run; links and deletions recur heavily along a
// chain. Keyed on canonical facet lists.
struct VdMemo {
    std::map<std::string, VdResult> table;
};

// Exhaustive search over shedding vertices in ascending id order; purity and
// the dimension equalities checked at every node exactly as the recursive
// definition states.
VdResult is_vertex_decomposable(const SimplicialComplex& d, VdMemo& memo);

// Independent re-check of a witness tree, no search involved.
bool replay_witness(const SimplicialComplex& d, const VdNode& node);

// --- complex identity verifiers ------------------------------------------------

struct VdVerdict {
    bool ok = false;
    std::string diagnostics;
    std::shared_ptr<const VdNode> witness;
    int dim = -2;
    bool pure = false;
    int expected_dim = -2;  // edge count - height - 1
};

struct IdentityVerdict {
    bool ok = false;
    std::string diagnostics;
};

// Vertex decomposability of the complex attached to in_ord(I_e^G), with the
// witness replayed and the purity/dimension bookkeeping.
VdVerdict verify_vd(const Graph& g, const PathOrderedMatching& pom, const LexOrder& ord,
                    VdMemo& memo);

// For a non-maximal matching extended by edge ext (the order must have ext
// on top): the deletion and link identities relating the complexes of
// in(I_e^G), in(I_e^{G-ext}) and in(I_{e+}^G).
IdentityVerdict verify_extension_identities(const Graph& g, const PathOrderedMatching& pom,
                                            const PathOrderedMatching& extended, EdgeId ext,
                                            const LexOrder& ord);

// For a maximal matching with free variable x: the split identity at the
// initial-ideal level, the restriction identity of complexes, and {x} not
// being a face.
IdentityVerdict verify_split_identities(const Graph& g, const PathOrderedMatching& pom,
                                        EdgeId x, const LexOrder& ord);

}  // namespace bilcert

#endif
