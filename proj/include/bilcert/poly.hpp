#ifndef BILCERT_POLY_HPP
#define BILCERT_POLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bilcert/errors.hpp"
#include "bilcert/graph.hpp"

namespace bilcert {

// Sparse exponent vector over edge variables. The empty map is the unit
// monomial 1; zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial variable(EdgeId id);
    explicit Monomial(std::map<EdgeId, int> exponents);

    int exponent(EdgeId id) const;
    int degree() const;
    bool is_unit() const { return exps_.empty(); }
    bool is_variable() const;  // degree 1
    bool is_squarefree() const;
    std::vector<EdgeId> support() const;
    const std::map<EdgeId, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    std::optional<Monomial> divided_by(const Monomial& divisor) const;

    // Canonical rendering "e3*e7^2", factors sorted by edge id.
    std::string str() const;

    // Structural ordering (by exponent map); used for canonical sorting of
    // generator lists, not as a term order.
    auto operator<=>(const Monomial&) const = default;

private:
    std::map<EdgeId, int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Lexicographic term order given by a total priority list of edge ids
// (highest first); must be a permutation of the ambient edge-id set.
class LexOrder {
public:
    explicit LexOrder(std::vector<EdgeId> priority_high_first);

    // Plain descending-id order on the graph's edges.
    static LexOrder descending_ids(const Graph& g);
    // Matched edges promoted to the top in reverse matching order (last
    // matched edge highest), remaining edges by descending id.
    static LexOrder pom_promoted(const Graph& g, const std::vector<EdgeId>& pom_edges);

    const std::vector<EdgeId>& priority() const { return priority_; }
    bool contains(EdgeId id) const { return rank_.count(id) > 0; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool operator==(const LexOrder& other) const { return priority_ == other.priority_; }

private:
    std::vector<EdgeId> priority_;
    std::map<EdgeId, int> rank_;
};

// The closed polynomial class the engine works in: zero, a signed monomial,
// or a pure difference of two monomials. Coefficients are always +-1. The
// canonical (monic) form has sign +1; a Bino stores lead - trail with
// lead > trail under the order it was oriented by.
class TwoTermPoly {
public:
    enum class Kind { Zero, Mono, Bino };

    TwoTermPoly() : kind_(Kind::Zero), sign_(1) {}

    static TwoTermPoly zero() { return TwoTermPoly(); }
    static TwoTermPoly monomial(int sign, Monomial m);
    // sign * (a - b), normalized: Zero if a == b, else Bino with the
    // tau-larger side as lead and the sign adjusted accordingly.
    static TwoTermPoly difference(const Monomial& a, const Monomial& b,
                                  const LexOrder& ord, int sign = 1);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    int sign() const { return sign_; }
    const Monomial& lead() const;   // Mono: the monomial; Bino: lead side
    const Monomial& trail() const;  // Bino only
    int degree() const;             // degree of the lead (0 for Zero)

    TwoTermPoly scaled(const Monomial& m) const;  // multiply by a monomial
    TwoTermPoly monic() const;                    // sign forced to +1
    TwoTermPoly negated() const;

    std::set<EdgeId> support() const;
    std::string str() const;

    bool operator==(const TwoTermPoly&) const = default;

private:
    Kind kind_;
    int sign_;
    Monomial lead_, trail_;
};

// Normalizes two candidate sides into the canonical generator form: Zero on
// cancellation, otherwise the monic Bino with the tau-larger side leading.
TwoTermPoly orient(const Monomial& lead_candidate, const Monomial& trail_candidate,
                   const LexOrder& ord);

}  // namespace bilcert

#endif
