#include <doctest.h>

#include <random>

#include "bilcert/toric.hpp"
#include "corpus.hpp"

using namespace bilcert;

namespace {

Monomial m(std::map<EdgeId, int> exps) { return Monomial(std::move(exps)); }

}  // namespace

TEST_CASE("the square's binomial is the diagonal difference") {
    Graph g = corpus::graph(corpus::C4);
    LexOrder ord({1, 2, 3, 4});
    auto cycles = enumerate_cycles(g);
    REQUIRE(cycles.size() == 1);
    CycleBinomial cb = toric_binomial(cycles[0], ord);
    CHECK(cb.poly == orient(m({{1, 1}, {3, 1}}), m({{2, 1}, {4, 1}}), ord));
    CHECK(kernel_member(cb.poly, g));
}

TEST_CASE("cycle binomials are squarefree, homogeneous, disjoint, and in the kernel") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        Graph g = corpus::graph(text);
        LexOrder ord = LexOrder::descending_ids(g);
        for (const Cycle& c : enumerate_cycles(g)) {
            CycleBinomial cb = toric_binomial(c, ord);
            REQUIRE(cb.poly.kind() == TwoTermPoly::Kind::Bino);
            CHECK(cb.poly.lead().is_squarefree());
            CHECK(cb.poly.trail().is_squarefree());
            CHECK(cb.poly.lead().degree() == static_cast<int>(c.length()) / 2);
            CHECK(cb.poly.trail().degree() == static_cast<int>(c.length()) / 2);
            auto ls = cb.poly.lead().support();
            for (EdgeId id : cb.poly.trail().support())
                CHECK(std::find(ls.begin(), ls.end(), id) == ls.end());
            CHECK(kernel_member(cb.poly, g));
        }
    }
}

TEST_CASE("toric ideal generator counts") {
    LexOrder c4_ord({1, 2, 3, 4});
    CHECK(toric_ideal(corpus::graph(corpus::C4), c4_ord).generators().size() == 1);

    Graph k23 = corpus::graph(corpus::K23);
    CHECK(toric_generators(k23, LexOrder::descending_ids(k23)).size() == 3);

    Graph forest = corpus::graph(corpus::PATH3);
    CHECK(toric_ideal(forest, LexOrder::descending_ids(forest)).is_zero_ideal());

    CHECK_THROWS_AS(
        toric_ideal(corpus::graph(corpus::TRIANGLE),
                    LexOrder::descending_ids(corpus::graph(corpus::TRIANGLE))),
        OddCycleError);
}

TEST_CASE("kernel membership oracle") {
    Graph g = corpus::graph(corpus::C4);
    LexOrder ord({1, 2, 3, 4});
    CHECK(kernel_member(TwoTermPoly::zero(), g));
    CHECK(kernel_member(orient(m({{1, 1}, {3, 1}}), m({{2, 1}, {4, 1}}), ord), g));
    // adjacent-edge products on the wrong vertices
    CHECK(!kernel_member(orient(m({{1, 1}, {2, 1}}), m({{3, 1}, {4, 1}}), ord), g));
    CHECK(!kernel_member(TwoTermPoly::monomial(1, Monomial::variable(1)), g));
    CHECK_THROWS_AS(kernel_member(TwoTermPoly::monomial(1, Monomial::variable(9)), g),
                    UnknownEdgeError);
}

TEST_CASE("every reduced-basis element of P(G) stays in the kernel") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        Graph g = corpus::graph(text);
        IdealPresentation p = toric_ideal(g, LexOrder::descending_ids(g));
        for (const TwoTermPoly& b : p.reduced_gb()) CHECK(kernel_member(b, g));
        CHECK(initial_ideal(p).is_squarefree());
    }
}

TEST_CASE("normal-form membership agrees with the kernel oracle") {
    // P(G) is exactly the kernel of the incidence map, so a pure difference
    // reduces to zero precisely when both sides have the same image.
    std::mt19937 rng(91);
    for (const char* text : {corpus::C4, corpus::K23, corpus::K33, corpus::GRID_2X3}) {
        Graph g = corpus::graph(text);
        LexOrder ord = LexOrder::descending_ids(g);
        IdealPresentation p = toric_ideal(g, ord);
        auto cycles = enumerate_cycles(g);
        std::vector<EdgeId> ids = g.edge_ids();
        std::uniform_int_distribution<int> exp(0, 1);
        std::uniform_int_distribution<std::size_t> pick_cycle(0, cycles.size() - 1);
        std::uniform_int_distribution<int> coin(0, 1);

        auto random_monomial = [&] {
            std::map<EdgeId, int> exps;
            for (EdgeId id : ids) exps[id] = exp(rng);
            return Monomial(std::move(exps));
        };
        for (int round = 0; round < 200; ++round) {
            Monomial a, b;
            if (coin(rng)) {
                // scaled cycle binomial: guaranteed kernel member
                CycleBinomial cb = toric_binomial(cycles[pick_cycle(rng)], ord);
                Monomial m = random_monomial();
                a = cb.poly.lead() * m;
                b = cb.poly.trail() * m;
            } else {
                a = random_monomial();
                b = random_monomial();
            }
            TwoTermPoly diff = TwoTermPoly::difference(a, b, ord);
            bool oracle = kernel_member(diff, g);
            bool engine = normal_form(diff, p.reduced_gb(), ord).is_zero();
            CHECK(engine == oracle);
        }
    }
}

TEST_CASE("K23 basis matches the hand-computed reduced basis") {
    Graph g = corpus::graph(corpus::K23);
    // e6 > e5 > ... > e1; the three squares are already reduced.
    IdealPresentation p = toric_ideal(g, LexOrder::descending_ids(g));
    CHECK(p.reduced_gb().size() == 3);
    CHECK(p.reduced_gb() == p.generators());
    CHECK(is_groebner_basis(p.generators(), p.order()));
}
