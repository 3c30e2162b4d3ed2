#include <doctest.h>

#include <random>

#include "bilcert/poly.hpp"
#include "corpus.hpp"

using namespace bilcert;

namespace {

Monomial m(std::map<EdgeId, int> exps) { return Monomial(std::move(exps)); }

Monomial random_monomial(std::mt19937& rng, int max_var, int max_exp) {
    std::uniform_int_distribution<int> var_count(0, max_var);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::map<EdgeId, int> exps;
    int n = var_count(rng);
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> var(1, max_var);
        exps[var(rng)] = exp(rng);
    }
    return Monomial(std::move(exps));
}

}  // namespace

TEST_CASE("lex comparison follows the priority list") {
    LexOrder ord({2, 1});  // e2 > e1
    CHECK(ord.compare(Monomial::variable(1), Monomial::variable(1)) ==
          std::strong_ordering::equal);
    CHECK(ord.compare(m({{1, 3}}), Monomial::variable(2)) == std::strong_ordering::less);

    LexOrder ord123({1, 2, 3});  // e1 > e2 > e3
    CHECK(ord123.compare(m({{1, 1}, {3, 1}}), m({{1, 1}, {2, 1}})) ==
          std::strong_ordering::less);
}

TEST_CASE("foreign variables are rejected") {
    LexOrder ord({1, 2});
    CHECK_THROWS_AS(ord.compare(Monomial::variable(5), Monomial::variable(1)),
                    ForeignVariableError);
}

TEST_CASE("lcm and division") {
    CHECK(lcm(m({{1, 1}, {2, 1}}), m({{2, 2}})) == m({{1, 1}, {2, 2}}));
    CHECK(*m({{1, 1}, {2, 1}}).divided_by(Monomial::variable(2)) == Monomial::variable(1));
    CHECK(!Monomial::variable(1).divided_by(Monomial::variable(2)).has_value());
}

TEST_CASE("rendering is canonical") {
    CHECK(m({{3, 1}, {7, 2}}).str() == "e3*e7^2");
    CHECK(Monomial::unit().str() == "1");
    LexOrder ord({1, 2, 3, 4});
    CHECK(orient(m({{1, 1}, {3, 1}}), m({{2, 1}, {4, 1}}), ord).str() == "e1*e3 - e2*e4");
    CHECK(TwoTermPoly::monomial(-1, Monomial::variable(5)).str() == "-e5");
    CHECK(TwoTermPoly::zero().str() == "0");
}

TEST_CASE("orient normalizes the binomial") {
    LexOrder ord({1, 2, 3, 4});  // e1 highest
    Monomial a = m({{1, 1}, {3, 1}});
    Monomial b = m({{2, 1}, {4, 1}});

    CHECK(orient(a, a, ord).is_zero());

    TwoTermPoly p = orient(a, b, ord);
    CHECK(p.lead() == a);
    CHECK(p.trail() == b);

    TwoTermPoly q = orient(b, a, ord);
    CHECK(q == p);

    // already-oriented binomials are fixed points
    CHECK(orient(p.lead(), p.trail(), ord) == p);
}

TEST_CASE("difference keeps the sign of the true value") {
    LexOrder ord({1, 2});
    TwoTermPoly p = TwoTermPoly::difference(Monomial::variable(2), Monomial::variable(1), ord);
    CHECK(p.sign() == -1);  // e2 - e1 = -(e1 - e2)
    CHECK(p.lead() == Monomial::variable(1));
    CHECK(p.negated().sign() == 1);
}

TEST_CASE("comparison is a total order compatible with multiplication") {
    std::mt19937 rng(42);
    LexOrder ord({3, 1, 4, 2, 5});
    for (int round = 0; round < 500; ++round) {
        Monomial a = random_monomial(rng, 5, 3);
        Monomial b = random_monomial(rng, 5, 3);
        Monomial c = random_monomial(rng, 5, 3);
        auto ab = ord.compare(a, b);
        auto ba = ord.compare(b, a);
        if (ab == std::strong_ordering::less)
            CHECK(ba == std::strong_ordering::greater);
        else if (ab == std::strong_ordering::greater)
            CHECK(ba == std::strong_ordering::less);
        else
            CHECK(ba == std::strong_ordering::equal);
        CHECK(ord.compare(a * c, b * c) == ab);  // multiplicative
        if (ab == std::strong_ordering::equal) CHECK(a == b);
        // transitivity sample
        if (ab != std::strong_ordering::greater &&
            ord.compare(b, c) != std::strong_ordering::greater)
            CHECK(ord.compare(a, c) != std::strong_ordering::greater);
    }
}

TEST_CASE("divide undoes multiply") {
    std::mt19937 rng(43);
    for (int round = 0; round < 500; ++round) {
        Monomial a = random_monomial(rng, 6, 4);
        Monomial b = random_monomial(rng, 6, 4);
        auto q = (a * b).divided_by(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        CHECK(b.divides(a * b));
    }
}

TEST_CASE("degree and squarefree bookkeeping") {
    CHECK(m({{1, 2}, {2, 1}}).degree() == 3);
    CHECK(!m({{1, 2}}).is_squarefree());
    CHECK(m({{1, 1}, {9, 1}}).is_squarefree());
    CHECK(Monomial::variable(4).is_variable());
    CHECK(!Monomial::unit().is_variable());
}
