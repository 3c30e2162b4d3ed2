#ifndef BILCERT_CHAIN_HPP
#define BILCERT_CHAIN_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bilcert/graph.hpp"
#include "bilcert/groebner.hpp"
#include "bilcert/pom.hpp"
#include "bilcert/simplicial.hpp"

namespace bilcert {

struct Verdict {
    bool ok = false;
    std::string diagnostics;
};

// Data shared by several step kinds: heights plus squarefree/unmixed flags
// of one ideal's initial ideal.
struct IdealRecord {
    std::vector<std::string> generators;
    std::vector<std::string> reduced_gb;
    int height = 0;
    int min_generator_degree = 0;
    bool squarefree = false;
    bool unmixed = false;
};

struct LeafStripStep {
    int stage;
    Graph before, after;
    std::vector<EdgeId> removed_edges;
};

// Links I_{e(s-1)} and I_{e(s)} inside one stage, under the order with e_s
// promoted above everything else.
struct BiliaisonStep {
    int stage;
    int s;  // 1-based position within the stage's matching
    Graph graph;
    PathOrderedMatching pom;  // the prefix e(s)
    std::vector<EdgeId> order;
    IdealRecord ideal_prev, ideal_cur, ideal_j;
    Verdict gb_step, initial_bdl, iso_equalities, vd_identities;
    VdVerdict vd;                  // position s
    std::optional<VdVerdict> vd_base;  // position 0, carried by the s == 1 step
};

struct VariableSplitStep {
    int stage;
    Graph graph;
    PathOrderedMatching pom;  // the stage's maximal matching
    EdgeId x;
    IdealRecord ideal_full, ideal_minus, ideal_restored;
    Verdict key_split;
    IdentityVerdict split_identities;
};

struct TerminalStep {
    int stage;
    Graph graph;
    std::vector<EdgeId> complete_intersection;
};

using ChainStep = std::variant<LeafStripStep, BiliaisonStep, VariableSplitStep, TerminalStep>;

struct ChainFailure {
    int step_index = -1;
    std::string verdict_name;
    std::string diagnostics;
};

struct ChainCertificate {
    Graph original;
    int height_original = 0;
    bool verify_enabled = true;
    std::vector<ChainStep> steps;
    std::vector<EdgeId> complete_intersection;
    int biliaisons = 0, splits = 0, leaf_strips = 0;
    Verdict heights;  // the cross-step height bookkeeping verdict
    std::optional<ChainFailure> failure;

    bool all_verified() const { return verify_enabled && !failure && heights.ok; }
};

struct ChainOptions {
    bool verify = true;
    std::size_t max_cycles = 1u << 20;
    // Grow the first stage's matching from these edges instead of from
    // scratch; they must survive leaf stripping and validate as a matching.
    std::vector<EdgeId> seed_pom;
};

// Builds the full descending chain from P(G) to a complete intersection:
// strip leaves, link down along a deterministic maximal matching, split off
// a free variable, recurse on the smaller graph. Every step identity is
// verified unless options.verify is off; the first failing verdict aborts
// the chain and is recorded in the certificate.
ChainCertificate run_chain(const Graph& g, const ChainOptions& options = {});

// Deterministic maximal matching: grown from the seed (default empty, i.e.
// from the smallest edge id), insertion positions tried left to right.
PathOrderedMatching pick_maximal_pom(const Graph& g, const std::vector<EdgeId>& seed = {});

// --- per-step verifiers -----------------------------------------------------

// The raw generator set of the presentation is already a Groebner basis: its
// lead monomials generate the initial ideal.
Verdict verify_gb_step(const IdealPresentation& ideal);

// in(I_prev) = e_s * in(I_cur) + in(J), with e_s a nonzerodivisor modulo
// in(J) and in(J) squarefree.
Verdict verify_initial_bdl(const IdealPresentation& ideal_prev,
                           const IdealPresentation& ideal_cur,
                           const IdealPresentation& ideal_j, EdgeId es);

// The two multiplication identities behind the degree-1 biliaison, checked
// as exact reduced-GB equalities for every qualifying cycle.
Verdict verify_iso_equalities(const Graph& g, const PathOrderedMatching& pom_prefix,
                              const LexOrder& ord, const IdealPresentation& ideal_prev,
                              const IdealPresentation& ideal_cur,
                              const IdealPresentation& ideal_j);

// I_e^G equals I_e^{G-x} + (x) in the ambient ring of g.
Verdict verify_key_split(const IdealPresentation& ideal_full,
                         const IdealPresentation& ideal_restored);

// Cross-step bookkeeping: constant heights within a stage, drop-by-one
// across splits, q - n + 1 for connected stages, squarefree and unmixed
// initial ideals throughout.
Verdict verify_heights(const ChainCertificate& cert);

nlohmann::ordered_json certificate_to_json(const ChainCertificate& cert);
std::string certificate_to_string(const ChainCertificate& cert);
std::string certificate_to_text(const ChainCertificate& cert);

}  // namespace bilcert

#endif
