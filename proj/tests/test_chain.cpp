#include <doctest.h>

#include <variant>

#include "bilcert/chain.hpp"
#include "corpus.hpp"

using namespace bilcert;

namespace {

const BiliaisonStep* nth_biliaison(const ChainCertificate& cert, int n) {
    int seen = 0;
    for (const ChainStep& step : cert.steps)
        if (const auto* b = std::get_if<BiliaisonStep>(&step))
            if (seen++ == n) return b;
    return nullptr;
}

const VariableSplitStep* nth_split(const ChainCertificate& cert, int n) {
    int seen = 0;
    for (const ChainStep& step : cert.steps)
        if (const auto* s = std::get_if<VariableSplitStep>(&step))
            if (seen++ == n) return s;
    return nullptr;
}

}  // namespace

TEST_CASE("the square's chain is one biliaison and one split onto (e3)") {
    ChainCertificate cert = run_chain(corpus::graph(corpus::C4));
    CHECK(cert.height_original == 1);
    CHECK(cert.biliaisons == 1);
    CHECK(cert.splits == 1);
    CHECK(cert.leaf_strips >= 1);  // the split leaves a path that gets stripped
    CHECK(cert.complete_intersection == std::vector<EdgeId>{3});
    CHECK(cert.all_verified());

    const BiliaisonStep* step = nth_biliaison(cert, 0);
    REQUIRE(step != nullptr);
    CHECK(step->s == 1);
    CHECK(step->pom.edges == std::vector<EdgeId>{1});
    CHECK(step->ideal_prev.height == 1);
    CHECK(step->ideal_cur.height == 1);
    CHECK(step->ideal_j.height == 0);
    CHECK(step->ideal_cur.reduced_gb == std::vector<std::string>{"e3"});
    CHECK(step->gb_step.ok);
    CHECK(step->initial_bdl.ok);
    CHECK(step->iso_equalities.ok);
    CHECK(step->vd.ok);
    CHECK(step->vd_identities.ok);
    REQUIRE(step->vd_base.has_value());
    CHECK(step->vd_base->ok);

    const VariableSplitStep* split = nth_split(cert, 0);
    REQUIRE(split != nullptr);
    CHECK(split->x == 3);
    CHECK(split->ideal_full.height == 1);
    CHECK(split->ideal_minus.height == 0);
    CHECK(split->ideal_restored.height == 1);
    CHECK(split->key_split.ok);
    CHECK(split->split_identities.ok);
    CHECK(cert.heights.ok);
}

TEST_CASE("forests terminate immediately with an empty complete intersection") {
    ChainCertificate cert = run_chain(corpus::graph(corpus::PATH3));
    CHECK(cert.height_original == 0);
    CHECK(cert.biliaisons == 0);
    CHECK(cert.splits == 0);
    CHECK(cert.complete_intersection.empty());
    CHECK(cert.all_verified());
    CHECK(std::holds_alternative<TerminalStep>(cert.steps.back()));
}

TEST_CASE("complete intersections have exactly height-many distinct variables") {
    for (auto [name, text] : corpus::acceptance_corpus()) {
        CAPTURE(name);
        ChainCertificate cert = run_chain(corpus::graph(text));
        CHECK(cert.all_verified());
        CHECK(static_cast<int>(cert.complete_intersection.size()) == cert.height_original);
        std::set<EdgeId> distinct(cert.complete_intersection.begin(),
                                  cert.complete_intersection.end());
        CHECK(distinct.size() == cert.complete_intersection.size());
        CHECK(cert.splits <= static_cast<int>(cert.original.edge_count()));
        CHECK(std::holds_alternative<TerminalStep>(cert.steps.back()));
    }
}

TEST_CASE("specific corpus heights") {
    CHECK(run_chain(corpus::graph(corpus::K23)).complete_intersection.size() == 2);
    CHECK(run_chain(corpus::graph(corpus::K33)).complete_intersection.size() == 4);
    CHECK(run_chain(corpus::graph(corpus::TWO_C4)).complete_intersection.size() == 2);
    CHECK(run_chain(corpus::graph(corpus::GRID_2X3)).complete_intersection.size() == 2);
}

TEST_CASE("certificates are byte-identical across runs") {
    for (const char* text : {corpus::C4, corpus::K23, corpus::GRID_2X3}) {
        ChainCertificate a = run_chain(corpus::graph(text));
        ChainCertificate b = run_chain(corpus::graph(text));
        CHECK(certificate_to_string(a) == certificate_to_string(b));
    }
}

TEST_CASE("skipping verification still emits the skeleton") {
    ChainOptions opts;
    opts.verify = false;
    ChainCertificate cert = run_chain(corpus::graph(corpus::K23), opts);
    CHECK(cert.splits == 2);
    CHECK(cert.complete_intersection.size() == 2);
    CHECK(!cert.all_verified());  // nothing was verified
    CHECK(cert.heights.ok);      // bookkeeping still runs
}

TEST_CASE("non-bipartite inputs are rejected up front") {
    CHECK_THROWS_AS(run_chain(corpus::graph(corpus::TRIANGLE)), OddCycleError);
}

TEST_CASE("a seeded first-stage matching still verifies") {
    ChainOptions opts;
    opts.seed_pom = {4};
    ChainCertificate cert = run_chain(corpus::graph(corpus::GRID_2X3), opts);
    CHECK(cert.all_verified());
    CHECK(cert.complete_intersection.size() == 2);
    const VariableSplitStep* split = nth_split(cert, 0);
    REQUIRE(split != nullptr);
    CHECK(split->pom.contains(4));
}

TEST_CASE("every stage's first step carries the base vertex decomposability verdict") {
    ChainCertificate cert = run_chain(corpus::graph(corpus::K33));
    for (const ChainStep& step : cert.steps) {
        if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
            if (b->s == 1) {
                REQUIRE(b->vd_base.has_value());
                CHECK(b->vd_base->ok);
            } else {
                CHECK(!b->vd_base.has_value());
            }
            CHECK(b->vd.witness != nullptr);
        }
    }
}

TEST_CASE("leaf stripping is recorded and preserves the height") {
    ChainCertificate cert = run_chain(corpus::graph(corpus::C4_PENDANT));
    CHECK(cert.height_original == 1);
    REQUIRE(!cert.steps.empty());
    const auto* strip = std::get_if<LeafStripStep>(&cert.steps.front());
    REQUIRE(strip != nullptr);
    CHECK(strip->removed_edges == std::vector<EdgeId>{5});
    CHECK(cert.all_verified());
    CHECK(cert.complete_intersection.size() == 1);
}

TEST_CASE("disconnected graphs skip the formula but keep consistent heights") {
    ChainCertificate cert = run_chain(corpus::graph(corpus::TWO_C4));
    CHECK(cert.height_original == 2);
    CHECK(cert.heights.ok);
    CHECK(cert.all_verified());
}
