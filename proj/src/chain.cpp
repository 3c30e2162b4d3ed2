#include "bilcert/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bilcert/toric.hpp"

namespace bilcert {

namespace {

std::string edge_name(EdgeId id) { return "e" + std::to_string(id); }

std::string join_edges(const std::vector<EdgeId>& ids) {
    std::string out;
    for (EdgeId id : ids) {
        if (!out.empty()) out += " ";
        out += edge_name(id);
    }
    return out.empty() ? "()" : out;
}

IdealRecord make_record(const IdealPresentation& ip) {
    IdealRecord rec;
    for (const TwoTermPoly& g : ip.generators()) rec.generators.push_back(g.str());
    for (const TwoTermPoly& g : ip.reduced_gb()) rec.reduced_gb.push_back(g.str());
    MonomialIdeal in = initial_ideal(ip);
    rec.squarefree = in.is_squarefree();
    if (rec.squarefree) {
        rec.height = height(in);
        rec.unmixed = is_unmixed(in);
    } else {
        rec.height = -1;
    }
    rec.min_generator_degree = 0;
    for (const TwoTermPoly& g : ip.reduced_gb()) {
        int d = g.degree();
        if (rec.min_generator_degree == 0 || d < rec.min_generator_degree)
            rec.min_generator_degree = d;
    }
    return rec;
}

std::string render_mi(const MonomialIdeal& mi) {
    std::string out = "(";
    for (std::size_t i = 0; i < mi.generators().size(); ++i) {
        if (i) out += ", ";
        out += mi.generators()[i].str();
    }
    return out + ")";
}

}  // namespace

// --- verifiers --------------------------------------------------------------

Verdict verify_gb_step(const IdealPresentation& ideal) {
    std::vector<Monomial> raw_leads;
    for (const TwoTermPoly& g : ideal.generators()) raw_leads.push_back(g.lead());
    MonomialIdeal raw(std::move(raw_leads));
    MonomialIdeal in = initial_ideal(ideal);
    Verdict v;
    v.ok = mi_equal(raw, in);
    v.diagnostics = v.ok ? "raw generator leads generate the initial ideal"
                         : "raw leads " + render_mi(raw) + " differ from " + render_mi(in);
    return v;
}

Verdict verify_initial_bdl(const IdealPresentation& ideal_prev,
                           const IdealPresentation& ideal_cur,
                           const IdealPresentation& ideal_j, EdgeId es) {
    Verdict v;
    MonomialIdeal in_prev = initial_ideal(ideal_prev);
    MonomialIdeal in_cur = initial_ideal(ideal_cur);
    MonomialIdeal in_j = initial_ideal(ideal_j);
    if (!in_j.is_squarefree()) {
        v.diagnostics = "in(J) is not squarefree";
        return v;
    }
    MonomialIdeal rhs = mi_sum(mi_scale(es, in_cur), in_j);
    if (!mi_equal(in_prev, rhs)) {
        v.diagnostics = "in(I_prev) = " + render_mi(in_prev) + " but " + edge_name(es) +
                        "*in(I_cur) + in(J) = " + render_mi(rhs);
        return v;
    }
    if (!is_nzd_variable(es, ideal_j)) {
        v.diagnostics = edge_name(es) + " is a zerodivisor modulo in(J)";
        return v;
    }
    v.ok = true;
    v.diagnostics = "basic double link identity holds with nonzerodivisor " + edge_name(es);
    return v;
}

namespace {

// Alternating sides of a cycle as monomials plus which matched edges sit on
// each side.
struct CycleSides {
    Monomial side[2];
    std::vector<EdgeId> matched_on[2];
};

CycleSides split_cycle(const Cycle& c, const std::set<EdgeId>& matched) {
    CycleSides out;
    const auto& seq = c.edges();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int side = static_cast<int>(i % 2);
        out.side[side] = out.side[side] * Monomial::variable(seq[i]);
        if (matched.count(seq[i])) out.matched_on[side].push_back(seq[i]);
    }
    return out;
}

}  // namespace

Verdict verify_iso_equalities(const Graph& g, const PathOrderedMatching& pom_prefix,
                              const LexOrder& ord, const IdealPresentation& ideal_prev,
                              const IdealPresentation& ideal_cur,
                              const IdealPresentation& ideal_j) {
    Verdict v;
    const EdgeId es = pom_prefix.edges.back();
    std::set<EdgeId> prev_edges(pom_prefix.edges.begin(), pom_prefix.edges.end() - 1);
    std::set<EdgeId> all_matched(pom_prefix.edges.begin(), pom_prefix.edges.end());

    // The cycle binomials of I_cur live in the graph with every matched edge
    // deleted, the same graph that provides J's binomial part; products of a
    // binomial multiplier with them land in J and may be absorbed there.
    std::vector<TwoTermPoly> cur_monomials;
    for (const TwoTermPoly& h : ideal_cur.generators()) {
        if (h.kind() == TwoTermPoly::Kind::Mono) {
            cur_monomials.push_back(h);
        } else if (std::find(ideal_j.generators().begin(), ideal_j.generators().end(), h) ==
                   ideal_j.generators().end()) {
            v.diagnostics = "cycle generator " + h.str() + " of I_cur missing from J";
            return v;
        }
    }

    auto lhs_ideal = [&](const Monomial& mc) {
        std::vector<TwoTermPoly> gens;
        for (const TwoTermPoly& h : ideal_prev.generators()) gens.push_back(h.scaled(mc));
        gens.insert(gens.end(), ideal_j.generators().begin(), ideal_j.generators().end());
        return IdealPresentation(std::move(gens), ord);
    };

    int checked_a = 0, checked_b = 0;

    // Identity for cycles avoiding the earlier matched edges and passing
    // through e_s: m_c * I_prev + J = T_c * I_cur + J.
    for (const Cycle& c : enumerate_cycles(delete_edges(g, prev_edges))) {
        if (!c.contains(es)) continue;
        CycleSides sides = split_cycle(c, all_matched);
        int s = sides.matched_on[0].empty() ? 1 : 0;
        Monomial mc = *sides.side[s].divided_by(Monomial::variable(es));
        Monomial nc = sides.side[1 - s];
        TwoTermPoly tc = TwoTermPoly::difference(sides.side[s], nc, ord).monic();
        if (tc.degree() - mc.degree() != 1) {
            v.diagnostics = "degree bookkeeping broken on cycle " + join_edges(c.edges());
            return v;
        }
        std::vector<TwoTermPoly> rhs;
        for (const TwoTermPoly& mu : cur_monomials) rhs.push_back(tc.scaled(mu.lead()));
        rhs.insert(rhs.end(), ideal_j.generators().begin(), ideal_j.generators().end());
        if (!ideal_equal(lhs_ideal(mc), IdealPresentation(std::move(rhs), ord))) {
            v.diagnostics = "multiplication identity fails for cycle " + join_edges(c.edges());
            return v;
        }
        ++checked_a;
    }

    // Identity for cycles through e_s and earlier matched edges, normalized
    // so that one side carries all of them: m_c * I_prev + J = e_s m_c * I_cur + J.
    for (const Cycle& c : enumerate_cycles(g)) {
        if (!c.contains(es)) continue;
        CycleSides sides = split_cycle(c, all_matched);
        if (!sides.matched_on[0].empty() && !sides.matched_on[1].empty()) continue;
        int s = sides.matched_on[0].empty() ? 1 : 0;
        if (sides.matched_on[s].size() < 2) continue;  // no earlier matched edge
        Monomial mc = sides.side[s];
        for (EdgeId m : sides.matched_on[s]) mc = *mc.divided_by(Monomial::variable(m));
        Monomial multiplier = mc * Monomial::variable(es);
        std::vector<TwoTermPoly> rhs;
        for (const TwoTermPoly& h : ideal_cur.generators()) rhs.push_back(h.scaled(multiplier));
        rhs.insert(rhs.end(), ideal_j.generators().begin(), ideal_j.generators().end());
        if (!ideal_equal(lhs_ideal(mc), IdealPresentation(std::move(rhs), ord))) {
            v.diagnostics = "scaled identity fails for cycle " + join_edges(c.edges());
            return v;
        }
        ++checked_b;
    }

    v.ok = true;
    std::ostringstream note;
    note << "multiplication identities hold (" << checked_a << " direct, " << checked_b
         << " scaled cycles)";
    if (checked_a + checked_b == 0) note << " [vacuous]";
    v.diagnostics = note.str();
    return v;
}

Verdict verify_key_split(const IdealPresentation& ideal_full,
                         const IdealPresentation& ideal_restored) {
    Verdict v;
    v.ok = ideal_equal(ideal_full, ideal_restored);
    v.diagnostics = v.ok ? "I_e^G = I_e^{G-x} + (x)"
                         : "reduced bases differ between I_e^G and I_e^{G-x} + (x)";
    return v;
}

// --- deterministic maximal matching ----------------------------------------

PathOrderedMatching pick_maximal_pom(const Graph& g, const std::vector<EdgeId>& seed) {
    PathOrderedMatching pom = extend_pom(g, validate_pom(g, seed));
    while (!is_maximal(g, pom)) {
        bool adopted = false;
        for (EdgeId cand : g.edge_ids()) {
            if (pom.contains(cand)) continue;
            std::vector<EdgeId> augmented = pom.edges;
            augmented.push_back(cand);
            std::sort(augmented.begin(), augmented.end());
            do {
                if (auto valid = try_validate_pom(g, augmented)) {
                    pom = *valid;
                    adopted = true;
                    break;
                }
            } while (std::next_permutation(augmented.begin(), augmented.end()));
            if (adopted) break;
        }
        if (!adopted) break;
        pom = extend_pom(g, pom);
    }
    return pom;
}

// --- the chain ---------------------------------------------------------------

ChainCertificate run_chain(const Graph& g, const ChainOptions& options) {
    ChainCertificate cert;
    cert.original = g;
    cert.verify_enabled = options.verify;
    cert.height_original = height(toric_ideal(g, LexOrder::descending_ids(g)));

    VdMemo memo;
    Graph current = g;
    int stage = 0;

    auto fail = [&](const std::string& name, const std::string& diagnostics) {
        cert.failure = ChainFailure{static_cast<int>(cert.steps.size()) - 1, name, diagnostics};
    };

    for (;;) {
        Graph stripped = strip_leaves(current);
        if (!(stripped == current)) {
            LeafStripStep step{stage, current, stripped, {}};
            for (const Edge& e : current.edges())
                if (!stripped.has_edge(e.id)) step.removed_edges.push_back(e.id);
            cert.steps.push_back(step);
            ++cert.leaf_strips;
            current = stripped;
        }

        if (enumerate_cycles(current, options.max_cycles).empty()) {
            cert.steps.push_back(TerminalStep{stage, current, cert.complete_intersection});
            break;
        }

        PathOrderedMatching pom =
            pick_maximal_pom(current, stage == 0 ? options.seed_pom : std::vector<EdgeId>{});
        const int r = static_cast<int>(pom.length());

        bool aborted = false;
        for (int s = 1; s <= r && !aborted; ++s) {
            std::vector<EdgeId> prefix(pom.edges.begin(), pom.edges.begin() + s);
            std::vector<EdgeId> prefix_prev(pom.edges.begin(), pom.edges.begin() + s - 1);
            BiliaisonStep step;
            step.stage = stage;
            step.s = s;
            step.graph = current;
            LexOrder ord = LexOrder::pom_promoted(current, prefix);
            step.order = ord.priority();

            PathOrderedMatching pom_s, pom_prev;
            try {
                pom_s = validate_pom(current, prefix);
                pom_prev = validate_pom(current, prefix_prev);
            } catch (const PomError& e) {
                step.gb_step.diagnostics = std::string("hypothesis violation: ") + e.what();
                cert.steps.push_back(step);
                fail("gb_step", step.gb_step.diagnostics);
                aborted = true;
                break;
            }
            step.pom = pom_s;

            IdealPresentation ideal_cur = build_I(current, pom_s, ord);
            IdealPresentation ideal_prev = build_I(current, pom_prev, ord);
            IdealPresentation ideal_j =
                build_I(delete_edge(current, prefix.back()), pom_prev, ord);
            step.ideal_cur = make_record(ideal_cur);
            step.ideal_prev = make_record(ideal_prev);
            step.ideal_j = make_record(ideal_j);

            if (options.verify) {
                step.gb_step = verify_gb_step(ideal_cur);
                step.initial_bdl =
                    verify_initial_bdl(ideal_prev, ideal_cur, ideal_j, prefix.back());
                step.iso_equalities = verify_iso_equalities(current, pom_s, ord, ideal_prev,
                                                            ideal_cur, ideal_j);
                IdentityVerdict ext =
                    verify_extension_identities(current, pom_prev, pom_s, prefix.back(), ord);
                step.vd_identities = Verdict{ext.ok, ext.diagnostics};
                step.vd = verify_vd(current, pom_s, ord, memo);
                if (s == 1) step.vd_base = verify_vd(current, pom_prev, ord, memo);
            }
            cert.steps.push_back(step);
            ++cert.biliaisons;

            if (options.verify) {
                const std::pair<const char*, const Verdict*> checks[] = {
                    {"gb_step", &step.gb_step},
                    {"initial_bdl", &step.initial_bdl},
                    {"iso_equalities", &step.iso_equalities},
                    {"vd_identities", &step.vd_identities},
                };
                for (auto [name, verdict] : checks) {
                    if (!verdict->ok) {
                        fail(name, verdict->diagnostics);
                        aborted = true;
                        break;
                    }
                }
                if (!aborted && !step.vd.ok) {
                    fail("vd", step.vd.diagnostics);
                    aborted = true;
                }
                if (!aborted && step.vd_base && !step.vd_base->ok) {
                    fail("vd_base", step.vd_base->diagnostics);
                    aborted = true;
                }
            }
        }
        if (aborted) break;

        EdgeId x = 0;
        try {
            x = find_free_variable(current, pom);
        } catch (const NoFreeVariableError& e) {
            fail("find_free_variable", e.what());
            break;
        }

        VariableSplitStep split;
        split.stage = stage;
        split.graph = current;
        split.pom = pom;
        split.x = x;
        LexOrder ord = LexOrder::pom_promoted(current, pom.edges);
        IdealPresentation ideal_full = build_I(current, pom, ord);
        Graph smaller = delete_edge(current, x);
        IdealPresentation ideal_minus = build_I(smaller, pom, ord);
        std::vector<TwoTermPoly> restored_gens = ideal_minus.generators();
        restored_gens.push_back(TwoTermPoly::monomial(1, Monomial::variable(x)));
        IdealPresentation ideal_restored(std::move(restored_gens), ord);
        split.ideal_full = make_record(ideal_full);
        split.ideal_minus = make_record(ideal_minus);
        split.ideal_restored = make_record(ideal_restored);
        if (options.verify) {
            split.key_split = verify_key_split(ideal_full, ideal_restored);
            split.split_identities = verify_split_identities(current, pom, x, ord);
        }
        cert.steps.push_back(split);
        ++cert.splits;
        if (options.verify) {
            if (!split.key_split.ok) {
                fail("key_split", split.key_split.diagnostics);
                break;
            }
            if (!split.split_identities.ok) {
                fail("split_identities", split.split_identities.diagnostics);
                break;
            }
        }

        cert.complete_intersection.push_back(x);
        current = smaller;
        ++stage;
        if (stage > static_cast<int>(g.edge_count())) {
            fail("termination", "chain exceeded the edge-count bound");
            break;
        }
    }

    cert.heights = verify_heights(cert);
    return cert;
}

// --- height bookkeeping -------------------------------------------------------

Verdict verify_heights(const ChainCertificate& cert) {
    Verdict v;
    std::ostringstream why;
    bool ok = true;
    auto check = [&](bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            if (why.tellp() > 0) why << "; ";
            why << msg;
        }
    };

    std::map<int, int> stage_height;
    auto note_stage = [&](int stage, int h) {
        auto [it, inserted] = stage_height.emplace(stage, h);
        if (!inserted)
            check(it->second == h, "conflicting heights in stage " + std::to_string(stage));
    };
    auto check_ideal = [&](const IdealRecord& rec, const std::string& where) {
        check(rec.squarefree, where + ": initial ideal not squarefree");
        check(rec.unmixed, where + ": initial ideal not unmixed");
    };

    for (const ChainStep& step : cert.steps) {
        if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
            std::string at = "stage " + std::to_string(b->stage) + " s=" + std::to_string(b->s);
            check_ideal(b->ideal_prev, at + " I_prev");
            check_ideal(b->ideal_cur, at + " I_cur");
            check_ideal(b->ideal_j, at + " J");
            note_stage(b->stage, b->ideal_prev.height);
            check(b->ideal_cur.height == b->ideal_prev.height,
                  at + ": height changes along the biliaison");
            check(b->ideal_j.height == b->ideal_prev.height - 1,
                  at + ": J does not have height one less");
            if (b->graph.is_connected()) {
                int expected = static_cast<int>(b->graph.edge_count()) -
                               static_cast<int>(b->graph.vertex_count()) + 1;
                check(b->ideal_prev.height == expected,
                      at + ": q - n + 1 formula fails on a connected stage");
            }
        } else if (const auto* s = std::get_if<VariableSplitStep>(&step)) {
            std::string at = "stage " + std::to_string(s->stage) + " split";
            check_ideal(s->ideal_full, at + " I");
            check_ideal(s->ideal_minus, at + " I_minus");
            check_ideal(s->ideal_restored, at + " I_restored");
            note_stage(s->stage, s->ideal_full.height);
            check(s->ideal_minus.height == s->ideal_full.height - 1,
                  at + ": removing x does not drop the height by one");
            check(s->ideal_restored.height == s->ideal_full.height,
                  at + ": adding (x) does not restore the height");
        }
    }

    for (auto it = stage_height.begin(); it != stage_height.end(); ++it) {
        auto next = std::next(it);
        if (next != stage_height.end() && next->first == it->first + 1)
            check(next->second == it->second - 1,
                  "height does not drop by one from stage " + std::to_string(it->first));
    }
    if (!stage_height.empty())
        check(stage_height.begin()->second == cert.height_original,
              "first stage height differs from the original height");
    check(static_cast<int>(cert.complete_intersection.size()) == cert.height_original,
          "complete intersection size " +
              std::to_string(cert.complete_intersection.size()) +
              " differs from height " + std::to_string(cert.height_original));

    v.ok = ok;
    v.diagnostics = ok ? "heights consistent across the chain" : why.str();
    return v;
}

// --- serialization -----------------------------------------------------------

namespace {

using json = nlohmann::ordered_json;

json graph_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    auto& edges = j["edges"] = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
    return j;
}

json edges_json(const std::vector<EdgeId>& ids) {
    json out = json::array();
    for (EdgeId id : ids) out.push_back(edge_name(id));
    return out;
}

json pom_json(const PathOrderedMatching& pom) {
    json j;
    j["edges"] = edges_json(pom.edges);
    json labeling = json::object();
    for (auto [old_v, new_v] : pom.labeling)
        labeling[std::to_string(old_v)] = new_v;
    j["labeling"] = labeling;
    return j;
}

json verdict_json(const Verdict& v) {
    return json{{"ok", v.ok}, {"diagnostics", v.diagnostics}};
}

json identity_verdict_json(const IdentityVerdict& v) {
    return json{{"ok", v.ok}, {"diagnostics", v.diagnostics}};
}

json witness_json(const VdNode& node) {
    switch (node.tag) {
        case VdNode::Tag::Empty:
            return json{{"kind", "empty"}};
        case VdNode::Tag::Simplex:
            return json{{"kind", "simplex"}};
        case VdNode::Tag::Shed:
            return json{{"kind", "shed"},
                        {"vertex", edge_name(node.shed)},
                        {"link", witness_json(*node.link_child)},
                        {"deletion", witness_json(*node.deletion_child)}};
    }
    return json();
}

json vd_verdict_json(const VdVerdict& v) {
    json j;
    j["ok"] = v.ok;
    j["dim"] = v.dim;
    j["expected_dim"] = v.expected_dim;
    j["pure"] = v.pure;
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    j["diagnostics"] = v.diagnostics;
    return j;
}

json record_json(const IdealRecord& rec) {
    json j;
    j["generators"] = rec.generators;
    j["reduced_gb"] = rec.reduced_gb;
    j["height"] = rec.height;
    j["min_degree"] = rec.min_generator_degree;
    j["squarefree"] = rec.squarefree;
    j["unmixed"] = rec.unmixed;
    return j;
}

struct StepWriter {
    bool verify;

    json operator()(const LeafStripStep& s) const {
        json j;
        j["kind"] = "leaf_strip";
        j["stage"] = s.stage;
        j["graph"] = graph_json(s.before);
        j["removed_edges"] = edges_json(s.removed_edges);
        j["graph_after"] = graph_json(s.after);
        return j;
    }
    json operator()(const BiliaisonStep& s) const {
        json j;
        j["kind"] = "biliaison_down";
        j["stage"] = s.stage;
        j["s"] = s.s;
        j["graph"] = graph_json(s.graph);
        j["pom"] = pom_json(s.pom);
        j["order"] = edges_json(s.order);
        j["ideals"] = json{{"I_prev", record_json(s.ideal_prev)},
                           {"I_cur", record_json(s.ideal_cur)},
                           {"J", record_json(s.ideal_j)}};
        if (verify) {
            json verdicts;
            verdicts["gb_step"] = verdict_json(s.gb_step);
            verdicts["initial_bdl"] = verdict_json(s.initial_bdl);
            verdicts["iso_equalities"] = verdict_json(s.iso_equalities);
            verdicts["vd_identities"] = verdict_json(s.vd_identities);
            verdicts["vd"] = vd_verdict_json(s.vd);
            if (s.vd_base) verdicts["vd_base"] = vd_verdict_json(*s.vd_base);
            j["verdicts"] = verdicts;
        }
        return j;
    }
    json operator()(const VariableSplitStep& s) const {
        json j;
        j["kind"] = "variable_split";
        j["stage"] = s.stage;
        j["graph"] = graph_json(s.graph);
        j["pom"] = pom_json(s.pom);
        j["x"] = edge_name(s.x);
        j["ideals"] = json{{"I", record_json(s.ideal_full)},
                           {"I_minus", record_json(s.ideal_minus)},
                           {"I_restored", record_json(s.ideal_restored)}};
        if (verify) {
            j["verdicts"] = json{{"key_split", verdict_json(s.key_split)},
                                 {"split_identities", identity_verdict_json(s.split_identities)}};
        }
        return j;
    }
    json operator()(const TerminalStep& s) const {
        json j;
        j["kind"] = "terminal";
        j["stage"] = s.stage;
        j["graph"] = graph_json(s.graph);
        j["complete_intersection"] = edges_json(s.complete_intersection);
        return j;
    }
};

}  // namespace

nlohmann::ordered_json certificate_to_json(const ChainCertificate& cert) {
    json j;
    j["schema"] = "liaison-cert/1";
    j["graph"] = graph_json(cert.original);
    j["height"] = cert.height_original;
    j["verify"] = cert.verify_enabled;
    auto& steps = j["steps"] = json::array();
    for (const ChainStep& step : cert.steps)
        steps.push_back(std::visit(StepWriter{cert.verify_enabled}, step));
    j["complete_intersection"] = edges_json(cert.complete_intersection);
    json summary;
    summary["biliaisons"] = cert.biliaisons;
    summary["splits"] = cert.splits;
    summary["leaf_strips"] = cert.leaf_strips;
    summary["heights"] = verdict_json(cert.heights);
    summary["all_verified"] = cert.verify_enabled ? json(cert.all_verified()) : json(nullptr);
    j["summary"] = summary;
    j["failure"] = cert.failure
                       ? json{{"step", cert.failure->step_index},
                              {"verdict", cert.failure->verdict_name},
                              {"diagnostics", cert.failure->diagnostics}}
                       : json(nullptr);
    return j;
}

std::string certificate_to_string(const ChainCertificate& cert) {
    return certificate_to_json(cert).dump(2) + "\n";
}

std::string certificate_to_text(const ChainCertificate& cert) {
    std::ostringstream out;
    out << "chain certificate for graph with " << cert.original.vertex_count()
        << " vertices, " << cert.original.edge_count() << " edges\n";
    out << "height of P(G): " << cert.height_original << "\n";
    for (const ChainStep& step : cert.steps) {
        if (const auto* l = std::get_if<LeafStripStep>(&step)) {
            out << "  [stage " << l->stage << "] strip leaves: removed "
                << join_edges(l->removed_edges) << "\n";
        } else if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
            out << "  [stage " << b->stage << "] biliaison s=" << b->s << " pom "
                << join_edges(b->pom.edges) << " heights " << b->ideal_prev.height << "/"
                << b->ideal_cur.height << "/" << b->ideal_j.height;
            if (cert.verify_enabled)
                out << " verdicts "
                    << (b->gb_step.ok && b->initial_bdl.ok && b->iso_equalities.ok &&
                                b->vd_identities.ok && b->vd.ok
                            ? "ok"
                            : "FAIL");
            out << "\n";
        } else if (const auto* s = std::get_if<VariableSplitStep>(&step)) {
            out << "  [stage " << s->stage << "] split x=" << edge_name(s->x);
            if (cert.verify_enabled)
                out << " verdicts "
                    << (s->key_split.ok && s->split_identities.ok ? "ok" : "FAIL");
            out << "\n";
        } else if (const auto* t = std::get_if<TerminalStep>(&step)) {
            out << "  [stage " << t->stage << "] terminal, complete intersection ("
                << join_edges(t->complete_intersection) << ")\n";
        }
    }
    out << "summary: " << cert.biliaisons << " biliaisons, " << cert.splits << " splits, "
        << cert.leaf_strips << " leaf strips\n";
    out << "heights: " << (cert.heights.ok ? "ok" : "FAIL") << " ("
        << cert.heights.diagnostics << ")\n";
    if (cert.verify_enabled)
        out << "all verified: " << (cert.all_verified() ? "yes" : "NO") << "\n";
    if (cert.failure)
        out << "failure: " << cert.failure->verdict_name << ": " << cert.failure->diagnostics
            << "\n";
    return out.str();
}

}  // namespace bilcert
