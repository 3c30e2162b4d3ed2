#ifndef BILCERT_TORIC_HPP
#define BILCERT_TORIC_HPP

#include "bilcert/graph.hpp"
#include "bilcert/groebner.hpp"
#include "bilcert/poly.hpp"

namespace bilcert {

// Pure-difference binomial attached to an even cycle: the two alternating
// edge products. Both sides are squarefree of degree length/2 with disjoint
// supports, and the difference lies in the incidence kernel.
struct CycleBinomial {
    Cycle cycle;
    TwoTermPoly poly;
};

// Alternating-edge products of an even cycle, oriented by ord. The canonical
// cycle form makes the result independent of the traversal start.
CycleBinomial toric_binomial(const Cycle& c, const LexOrder& ord);

// P(G): generated by the binomials of all simple cycles. Forests give the
// zero ideal. Throws OddCycleError on non-bipartite input.
IdealPresentation toric_ideal(const Graph& g, const LexOrder& ord);
std::vector<TwoTermPoly> toric_generators(const Graph& g, const LexOrder& ord);

// Independent brute-force membership oracle through the incidence map
// sending each edge variable to the product of its endpoint variables: true
// iff both sides of p hit every vertex with equal multiplicity.
bool kernel_member(const TwoTermPoly& p, const Graph& g);

}  // namespace bilcert

#endif
