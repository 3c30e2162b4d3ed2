#include "bilcert/toric.hpp"

namespace bilcert {

CycleBinomial toric_binomial(const Cycle& c, const LexOrder& ord) {
    if (c.length() % 2 != 0)
        throw Error("toric binomial requires an even cycle");
    Monomial side_a, side_b;
    const auto& seq = c.edges();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Monomial& side = (i % 2 == 0) ? side_a : side_b;
        side = side * Monomial::variable(seq[i]);
    }
    return CycleBinomial{c, orient(side_a, side_b, ord)};
}

std::vector<TwoTermPoly> toric_generators(const Graph& g, const LexOrder& ord) {
    std::vector<TwoTermPoly> gens;
    for (const Cycle& c : enumerate_cycles(g))
        gens.push_back(toric_binomial(c, ord).poly);
    return gens;
}

IdealPresentation toric_ideal(const Graph& g, const LexOrder& ord) {
    return IdealPresentation(toric_generators(g, ord), ord);
}

namespace {

// Vertex-exponent vector of a monomial under e_t = {i,j} -> x_i x_j.
std::map<VertexId, int> incidence_image(const Monomial& m, const Graph& g) {
    std::map<VertexId, int> image;
    for (auto [id, e] : m.exponents()) {
        const Edge& edge = g.edge(id);  // throws on foreign variable
        image[edge.u] += e;
        image[edge.v] += e;
    }
    return image;
}

}  // namespace

bool kernel_member(const TwoTermPoly& p, const Graph& g) {
    switch (p.kind()) {
        case TwoTermPoly::Kind::Zero:
            return true;
        case TwoTermPoly::Kind::Mono:
            incidence_image(p.lead(), g);
            return false;
        case TwoTermPoly::Kind::Bino:
            return incidence_image(p.lead(), g) == incidence_image(p.trail(), g);
    }
    return false;
}

}  // namespace bilcert
