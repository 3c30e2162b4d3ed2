#include <doctest.h>

#include <algorithm>
#include <set>

#include "bilcert/pom.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bilcert;

namespace {

PathOrderedMatching find_pom(const Graph& g) {
    return extend_pom(g, PathOrderedMatching{});
}

// All k-subsets of the edge ids, each in ascending and descending order.
std::vector<std::vector<EdgeId>> ordered_subsets(const Graph& g, std::size_t max_size) {
    std::vector<EdgeId> ids = g.edge_ids();
    std::vector<std::vector<EdgeId>> out;
    for (std::size_t mask = 1; mask < (1u << ids.size()); ++mask) {
        std::vector<EdgeId> subset;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (mask & (1u << i)) subset.push_back(ids[i]);
        if (subset.size() > max_size) continue;
        out.push_back(subset);
        if (subset.size() > 1) {
            std::vector<EdgeId> reversed(subset.rbegin(), subset.rend());
            out.push_back(reversed);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("the ladder matching validates with the identity labeling") {
    Graph g = corpus::graph(corpus::LADDER5);
    PathOrderedMatching pom = validate_pom(g, {1, 2, 3, 4, 5});
    for (auto [old_v, new_v] : pom.labeling) CHECK(old_v == new_v);
    CHECK(pom.labeling.size() == 10);
}

TEST_CASE("a backward edge breaks condition (b)") {
    Graph g = parse_graph(std::string(corpus::LADDER5) + "2 6\n");
    try {
        validate_pom(g, {1, 2, 3, 4, 5});
        FAIL("expected PomError");
    } catch (const PomError& e) {
        CHECK(e.kind == PomError::Kind::ConditionB);
        CHECK(e.offending == 10);
    }
}

TEST_CASE("the square's diagonal matching fails condition (b) in either order") {
    Graph g = corpus::graph(corpus::C4);
    for (std::vector<EdgeId> edges : {std::vector<EdgeId>{1, 3}, std::vector<EdgeId>{3, 1}}) {
        try {
            validate_pom(g, edges);
            FAIL("expected PomError");
        } catch (const PomError& e) {
            CHECK(e.kind == PomError::Kind::ConditionB);
        }
    }
}

TEST_CASE("sharing a vertex is not a matching") {
    Graph g = corpus::graph(corpus::C4);
    CHECK_THROWS_AS(validate_pom(g, {1, 2}), PomError);
    CHECK_THROWS_AS(validate_pom(g, {1, 1}), PomError);
}

TEST_CASE("a missing connector breaks condition (a)") {
    // two parallel edges with no connector between them
    Graph g = parse_graph("1 2\n3 4\n");
    try {
        validate_pom(g, {1, 2});
        FAIL("expected PomError");
    } catch (const PomError& e) {
        CHECK(e.kind == PomError::Kind::ConditionA);
        CHECK(e.index == 1);
    }
}

TEST_CASE("validation agrees with the orientation-enumeration oracle") {
    for (const char* text : {corpus::C4, corpus::K23, corpus::GRID_2X3, corpus::C6}) {
        Graph g = corpus::graph(text);
        for (const auto& edges : ordered_subsets(g, 3)) {
            CAPTURE(edges);
            bool expected = oracles::is_pom_ordered(g, edges);
            CHECK(try_validate_pom(g, edges).has_value() == expected);
        }
    }
}

TEST_CASE("greedy extension reaches the brute-force maximum size") {
    SUBCASE("C4: a single edge is stuck") {
        Graph g = corpus::graph(corpus::C4);
        PathOrderedMatching pom = extend_pom(g, validate_pom(g, {1}));
        CHECK(pom.edges == std::vector<EdgeId>{1});
        CHECK(oracles::max_pom_size(g) == 1);
    }
    SUBCASE("complete bipartite graphs cap at one edge") {
        // every 2-matching in a complete bipartite graph has the backward
        // diagonal, so the maximum length is 1
        for (const char* text : {corpus::K23, corpus::K24, corpus::K33}) {
            Graph g = corpus::graph(text);
            CHECK(oracles::max_pom_size(g) == 1);
            CHECK(find_pom(g).length() == 1);
        }
    }
    SUBCASE("the grid admits a 2-matching") {
        Graph g = corpus::graph(corpus::GRID_2X3);
        CHECK(oracles::max_pom_size(g) == 2);
        CHECK(find_pom(g).length() == 2);
    }
    SUBCASE("the ladder is already maximal") {
        Graph g = corpus::graph(corpus::LADDER5);
        PathOrderedMatching pom = validate_pom(g, {1, 2, 3, 4, 5});
        CHECK(extend_pom(g, pom).edges == pom.edges);
        CHECK(oracles::max_pom_size(g) == 5);
    }
}

TEST_CASE("maximality testing") {
    Graph c4 = corpus::graph(corpus::C4);
    CHECK(is_maximal(c4, validate_pom(c4, {1})));

    Graph ladder = corpus::graph(corpus::LADDER5);
    CHECK(!is_maximal(ladder, validate_pom(ladder, {1, 2, 3, 4})));
    CHECK(is_maximal(ladder, validate_pom(ladder, {1, 2, 3, 4, 5})));

    // singletons in a complete bipartite graph are maximal: the oracle finds
    // no two-edge path ordered matching at all
    Graph k23 = corpus::graph(corpus::K23);
    CHECK(oracles::max_pom_size(k23) == 1);
    CHECK(is_maximal(k23, validate_pom(k23, {1})));
}

TEST_CASE("maximality agrees with the subset oracle on small graphs") {
    for (const char* text : {corpus::C4, corpus::K23, corpus::GRID_2X3}) {
        Graph g = corpus::graph(text);
        for (EdgeId id : g.edge_ids()) {
            bool oracle_max = true;
            for (EdgeId other : g.edge_ids()) {
                if (other == id) continue;
                if (oracles::is_pom_set(g, {id, other})) oracle_max = false;
            }
            CAPTURE(id);
            CHECK(is_maximal(g, validate_pom(g, {id})) == oracle_max);
        }
    }
}

TEST_CASE("cofactors of the square") {
    Graph g = corpus::graph(corpus::C4);
    auto members = compute_M(g, validate_pom(g, {1}));
    REQUIRE(members.size() == 1);
    CHECK(members[0].m == Monomial::variable(3));
    CHECK(members[0].indices == std::vector<int>{1});
}

TEST_CASE("forests have no cofactors") {
    Graph g = corpus::graph(corpus::PATH3);
    CHECK(compute_M(g, validate_pom(g, {1})).empty());
}

TEST_CASE("cofactor witnesses reconstruct their cycles") {
    for (const char* text : {corpus::C4, corpus::K23, corpus::K33, corpus::GRID_2X3}) {
        Graph g = corpus::graph(text);
        PathOrderedMatching pom = find_pom(g);
        LexOrder ord = LexOrder::pom_promoted(g, pom.edges);
        for (const MSetMember& member : compute_M(g, pom)) {
            Monomial rebuilt = member.m;
            for (int i : member.indices)
                rebuilt = rebuilt * Monomial::variable(pom.edges[static_cast<std::size_t>(i) - 1]);
            // one alternating side of the witness cycle must be exactly m * prod e_i
            Monomial sides[2];
            const auto& seq = member.witness.edges();
            for (std::size_t i = 0; i < seq.size(); ++i)
                sides[i % 2] = sides[i % 2] * Monomial::variable(seq[i]);
            bool matches = rebuilt == sides[0] || rebuilt == sides[1];
            CHECK(matches);
            Monomial other = rebuilt == sides[0] ? sides[1] : sides[0];
            CHECK(kernel_member(orient(rebuilt, other, ord), g));
        }
    }
}

TEST_CASE("the matching ideal of the square is the free variable") {
    Graph g = corpus::graph(corpus::C4);
    PathOrderedMatching pom = validate_pom(g, {1});
    LexOrder ord = LexOrder::pom_promoted(g, pom.edges);
    IdealPresentation ideal = build_I(g, pom, ord);
    CHECK(ideal.reduced_gb() ==
          std::vector<TwoTermPoly>{TwoTermPoly::monomial(1, Monomial::variable(3))});
}

TEST_CASE("the empty matching gives the toric ideal") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        Graph g = corpus::graph(text);
        LexOrder ord = LexOrder::descending_ids(g);
        CHECK(ideal_equal(build_I(g, PathOrderedMatching{}, ord), toric_ideal(g, ord)));
    }
}

TEST_CASE("the matching ideal has the toric ideal's height") {
    Graph g = corpus::graph(corpus::K23);
    PathOrderedMatching pom = find_pom(g);
    LexOrder ord = LexOrder::pom_promoted(g, pom.edges);
    CHECK(height(build_I(g, pom, ord)) == 2);
    CHECK(height(toric_ideal(g, ord)) == 2);
}

TEST_CASE("free variables") {
    Graph c4 = corpus::graph(corpus::C4);
    CHECK(find_free_variable(c4, validate_pom(c4, {1})) == 3);

    Graph k33 = corpus::graph(corpus::K33);
    PathOrderedMatching pom = find_pom(k33);
    EdgeId x = find_free_variable(k33, pom);
    CHECK(k33.has_edge(x));
    CHECK(try_validate_pom(delete_edge(k33, x), pom.edges).has_value());

    Graph path = corpus::graph(corpus::PATH3);
    CHECK_THROWS_AS(find_free_variable(path, validate_pom(path, {1})),
                    NoFreeVariableError);
}

TEST_CASE("leafless graphs with maximal matchings always expose a free variable") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        Graph g = strip_leaves(corpus::graph(text));
        if (enumerate_cycles(g).empty()) continue;
        PathOrderedMatching pom = find_pom(g);
        REQUIRE(is_maximal(g, pom));
        bool has_variable = false;
        for (const MSetMember& member : compute_M(g, pom))
            if (member.m.is_variable()) has_variable = true;
        CHECK(has_variable);
    }
}

TEST_CASE("raw generators are already a basis under the promoted order") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        Graph g = strip_leaves(corpus::graph(text));
        if (enumerate_cycles(g).empty()) continue;
        PathOrderedMatching pom = find_pom(g);
        for (std::size_t s = 1; s <= pom.length(); ++s) {
            std::vector<EdgeId> prefix(pom.edges.begin(), pom.edges.begin() + s);
            PathOrderedMatching p = validate_pom(g, prefix);
            LexOrder ord = LexOrder::pom_promoted(g, prefix);
            IdealPresentation ideal = build_I(g, p, ord);
            CHECK(is_groebner_basis(ideal.generators(), ord));
        }
    }
}

TEST_CASE("dropping two-sided cofactors keeps the lead ideal and the ideal") {
    for (const char* text : {corpus::GRID_2X3, corpus::K33, corpus::C6}) {
        Graph g = corpus::graph(text);
        PathOrderedMatching pom = find_pom(g);
        LexOrder ord = LexOrder::pom_promoted(g, pom.edges);
        IdealPresentation full = build_I(g, pom, ord);

        std::set<EdgeId> matched(pom.edges.begin(), pom.edges.end());
        std::vector<TwoTermPoly> filtered =
            toric_generators(delete_edges(g, matched), ord);
        std::vector<Monomial> kept;
        for (const Cycle& c : enumerate_cycles(g)) {
            Monomial cofactor[2];
            bool matched_on[2] = {false, false};
            const auto& seq = c.edges();
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (matched.count(seq[i]))
                    matched_on[i % 2] = true;
                else
                    cofactor[i % 2] = cofactor[i % 2] * Monomial::variable(seq[i]);
            }
            if (matched_on[0] && matched_on[1]) continue;  // two-sided cycle: dropped
            for (int side = 0; side < 2; ++side)
                if (matched_on[side]) kept.push_back(cofactor[side]);
        }
        MonomialIdeal minimalized(std::move(kept));
        for (const Monomial& m : minimalized.generators())
            filtered.push_back(TwoTermPoly::monomial(1, m));

        IdealPresentation reduced_set(filtered, ord);
        CHECK(ideal_equal(reduced_set, full));
        std::vector<Monomial> leads;
        for (const TwoTermPoly& p : filtered) leads.push_back(p.lead());
        CHECK(mi_equal(MonomialIdeal(std::move(leads)), initial_ideal(full)));
    }
}
