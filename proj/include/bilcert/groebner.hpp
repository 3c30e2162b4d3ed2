#ifndef BILCERT_GROEBNER_HPP
#define BILCERT_GROEBNER_HPP

#include <optional>
#include <vector>

#include "bilcert/poly.hpp"

namespace bilcert {

// Generators plus a term order, with the reduced Groebner basis computed on
// demand and cached. Generators are normalized monic; zeros are dropped.
class IdealPresentation {
public:
    IdealPresentation(std::vector<TwoTermPoly> generators, LexOrder order);

    const std::vector<TwoTermPoly>& generators() const { return gens_; }
    const LexOrder& order() const { return ord_; }
    bool is_zero_ideal() const { return reduced_gb().empty(); }

    // Unique reduced basis: monic, self-reduced, sorted by lead monomial
    // (ascending under the order).
    const std::vector<TwoTermPoly>& reduced_gb() const;

private:
    std::vector<TwoTermPoly> gens_;
    LexOrder ord_;
    mutable std::optional<std::vector<TwoTermPoly>> gb_;
};

// Buchberger algorithm specialized to the two-term class. Pair selection is
// the normal strategy: smallest lcm first, ties by generator index; pairs
// with coprime leads are skipped. Every intermediate polynomial provably
// stays in the class; ClassEscapeError guards the invariant at runtime.
std::vector<TwoTermPoly> buchberger(std::vector<TwoTermPoly> gens, const LexOrder& ord);

// Remainder of division by basis: no remaining monomial is divisible by any
// basis lead. Linear over the class; membership test = result is Zero.
TwoTermPoly normal_form(const TwoTermPoly& p, const std::vector<TwoTermPoly>& basis,
                        const LexOrder& ord);

TwoTermPoly spolynomial(const TwoTermPoly& f, const TwoTermPoly& g, const LexOrder& ord);

// Buchberger criterion, checked post-hoc: every S-polynomial of basis pairs
// reduces to zero against the basis.
bool is_groebner_basis(const std::vector<TwoTermPoly>& basis, const LexOrder& ord);

// Minimal generating monomials, an antichain under divisibility, sorted.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const IdealPresentation& ip);

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_scale(EdgeId v, const MonomialIdeal& a);
bool mi_equal(const MonomialIdeal& a, const MonomialIdeal& b);
bool mi_member(const Monomial& m, const MonomialIdeal& a);

// All inclusion-minimal transversals of the generator supports, each sorted,
// the list sorted lexicographically. Requires a squarefree input. The zero
// ideal has the empty set as its unique minimal prime.
std::vector<std::vector<EdgeId>> minimal_primes(const MonomialIdeal& a);

// Minimum transversal cardinality. All minimal primes equicardinal.
int height(const MonomialIdeal& a);
bool is_unmixed(const MonomialIdeal& a);

// Height of the presentation, read off its initial ideal (the artifact's
// height convention; agrees with the ideal's height by flat degeneration).
int height(const IdealPresentation& ip);

// True iff v lies in no minimal prime of the initial ideal. A variable that
// is a nonzerodivisor modulo the initial ideal is one modulo the ideal.
bool is_nzd_variable(EdgeId v, const IdealPresentation& ip);

// Exact equality via reduced-GB uniqueness; requires identical ambient order.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace bilcert

#endif
