#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilcert/chain.hpp"
#include "bilcert/graph.hpp"
#include "bilcert/pom.hpp"
#include "bilcert/simplicial.hpp"
#include "bilcert/toric.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bilcert::Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw bilcert::Error("cannot open output file: " + output_path);
    out << text;
}

std::string edge_name(bilcert::EdgeId id) { return "e" + std::to_string(id); }

std::string join_edges(const std::vector<bilcert::EdgeId>& ids) {
    std::string out;
    for (auto id : ids) {
        if (!out.empty()) out += " ";
        out += edge_name(id);
    }
    return out;
}

std::vector<bilcert::EdgeId> parse_id_list(const std::string& spec) {
    std::vector<bilcert::EdgeId> ids;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        if (!token.empty() && token.front() == 'e') token.erase(0, 1);
        try {
            ids.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw bilcert::Error("bad edge id in list: \"" + token + "\"");
        }
    }
    return ids;
}

bilcert::LexOrder make_order(const bilcert::Graph& g, const std::string& spec) {
    if (spec.empty()) return bilcert::LexOrder::descending_ids(g);
    std::vector<bilcert::EdgeId> priority = parse_id_list(spec);
    bilcert::LexOrder ord(priority);
    auto ids = g.edge_ids();
    if (priority.size() != ids.size())
        throw bilcert::Error("--order must list every edge id exactly once");
    for (auto id : ids)
        if (!ord.contains(id))
            throw bilcert::Error("--order is missing edge id " + edge_name(id));
    return ord;
}

json order_json(const bilcert::LexOrder& ord) {
    json out = json::array();
    for (auto id : ord.priority()) out.push_back(edge_name(id));
    return out;
}

json poly_list_json(const std::vector<bilcert::TwoTermPoly>& polys) {
    json out = json::array();
    for (const auto& p : polys) out.push_back(p.str());
    return out;
}

json witness_json(const bilcert::VdNode& node) {
    using Tag = bilcert::VdNode::Tag;
    switch (node.tag) {
        case Tag::Empty:
            return json{{"kind", "empty"}};
        case Tag::Simplex:
            return json{{"kind", "simplex"}};
        case Tag::Shed:
            return json{{"kind", "shed"},
                        {"vertex", edge_name(node.shed)},
                        {"link", witness_json(*node.link_child)},
                        {"deletion", witness_json(*node.deletion_child)}};
    }
    return json();
}

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string order_spec;
    std::string seed_spec;
    std::size_t max_cycles = 1u << 20;
    bool no_verify = false;
    std::string pom_mode;
};

int cmd_cycles(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    auto cycles = bilcert::enumerate_cycles(g, opt.max_cycles);
    if (opt.format == "json") {
        json j;
        j["count"] = cycles.size();
        auto& list = j["cycles"] = json::array();
        for (const auto& c : cycles) {
            json seq = json::array();
            for (auto id : c.edges()) seq.push_back(edge_name(id));
            list.push_back(seq);
        }
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::string out;
        for (const auto& c : cycles) out += join_edges(c.edges()) + "\n";
        emit(out, opt.output);
    }
    return 0;
}

int cmd_toric(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    bilcert::LexOrder ord = make_order(g, opt.order_spec);
    auto gens = bilcert::toric_generators(g, ord);
    if (opt.format == "json") {
        json j;
        j["order"] = order_json(ord);
        j["generators"] = poly_list_json(gens);
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::string out;
        for (const auto& p : gens) out += p.str() + "\n";
        emit(out, opt.output);
    }
    return 0;
}

int cmd_gb(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    bilcert::LexOrder ord = make_order(g, opt.order_spec);
    bilcert::IdealPresentation ideal = bilcert::toric_ideal(g, ord);
    bilcert::MonomialIdeal in = bilcert::initial_ideal(ideal);
    int h = bilcert::height(ideal);
    if (opt.format == "json") {
        json j;
        j["order"] = order_json(ord);
        j["generators"] = poly_list_json(ideal.generators());
        j["reduced_gb"] = poly_list_json(ideal.reduced_gb());
        auto& init = j["initial_ideal"] = json::array();
        for (const auto& m : in.generators()) init.push_back(m.str());
        j["height"] = h;
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        out << "order:";
        for (auto id : ord.priority()) out << " " << edge_name(id);
        out << "\nreduced groebner basis:\n";
        for (const auto& p : ideal.reduced_gb()) out << "  " << p.str() << "\n";
        out << "initial ideal: (";
        for (std::size_t i = 0; i < in.generators().size(); ++i)
            out << (i ? ", " : "") << in.generators()[i].str();
        out << ")\nheight: " << h << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int cmd_pom(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    bilcert::bipartition(g);  // domain check up front
    std::vector<bilcert::EdgeId> seed = parse_id_list(opt.seed_spec);
    for (auto id : seed) g.edge(id);

    bilcert::PathOrderedMatching pom;
    if (opt.pom_mode == "validate") {
        pom = bilcert::validate_pom(g, seed);
    } else {
        pom = bilcert::extend_pom(g, bilcert::validate_pom(g, seed));
    }
    bool maximal = bilcert::is_maximal(g, pom);

    if (opt.format == "json") {
        json j;
        j["edges"] = json::array();
        for (auto id : pom.edges) j["edges"].push_back(edge_name(id));
        json labeling = json::object();
        for (auto [old_v, new_v] : pom.labeling) labeling[std::to_string(old_v)] = new_v;
        j["labeling"] = labeling;
        j["maximal"] = maximal;
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        out << "pom: " << join_edges(pom.edges) << "\n";
        out << "labeling:";
        for (auto [old_v, new_v] : pom.labeling) out << " " << old_v << "->" << new_v;
        out << "\nmaximal: " << (maximal ? "yes" : "no") << "\n";
        emit(out.str(), opt.output);
    }
    return 0;
}

int cmd_chain(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    bilcert::ChainOptions chain_opts;
    chain_opts.verify = !opt.no_verify;
    chain_opts.max_cycles = opt.max_cycles;
    chain_opts.seed_pom = parse_id_list(opt.seed_spec);
    bilcert::ChainCertificate cert = bilcert::run_chain(g, chain_opts);
    if (opt.format == "json")
        emit(bilcert::certificate_to_string(cert), opt.output);
    else
        emit(bilcert::certificate_to_text(cert), opt.output);
    if (chain_opts.verify && !cert.all_verified()) return 3;
    return 0;
}

int cmd_vd(const Options& opt) {
    bilcert::Graph g = bilcert::parse_graph(read_input(opt.input));
    std::vector<bilcert::EdgeId> seed = parse_id_list(opt.seed_spec);
    bilcert::PathOrderedMatching pom = bilcert::validate_pom(g, seed);
    bilcert::LexOrder ord = opt.order_spec.empty() && !pom.edges.empty()
                                ? bilcert::LexOrder::pom_promoted(g, pom.edges)
                                : make_order(g, opt.order_spec);
    bilcert::VdMemo memo;
    bilcert::VdVerdict verdict = bilcert::verify_vd(g, pom, ord, memo);

    if (opt.format == "json") {
        json j;
        j["ok"] = verdict.ok;
        j["dim"] = verdict.dim;
        j["expected_dim"] = verdict.expected_dim;
        j["pure"] = verdict.pure;
        j["witness"] = verdict.witness ? witness_json(*verdict.witness) : json(nullptr);
        j["diagnostics"] = verdict.diagnostics;
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        out << "vertex decomposable: " << (verdict.ok ? "yes" : "no") << "\n";
        out << "dim: " << verdict.dim << " (expected " << verdict.expected_dim << ")\n";
        out << "pure: " << (verdict.pure ? "yes" : "no") << "\n";
        if (verdict.witness && verdict.witness->tag == bilcert::VdNode::Tag::Shed)
            out << "shedding vertex: " << edge_name(verdict.witness->shed) << "\n";
        if (!verdict.diagnostics.empty()) out << "diagnostics: " << verdict.diagnostics << "\n";
        emit(out.str(), opt.output);
    }
    return verdict.ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric-ideal and liaison-chain toolkit for bipartite graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_order) {
        cmd->add_option("input", opt.input, "edge-list or JSON graph file ('-' for stdin)")
            ->required();
        cmd->add_option("-f,--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("-o,--output", opt.output, "write the report to a file");
        cmd->add_option("--max-cycles", opt.max_cycles,
                        "abort if the graph has more simple cycles than this");
        if (with_order)
            cmd->add_option("--order", opt.order_spec,
                            "term order as a comma-separated priority list, highest first");
    };

    add_common(app.add_subcommand("cycles", "list all simple cycles"), false);
    add_common(app.add_subcommand("toric", "print the generators of P(G)"), true);
    add_common(app.add_subcommand("gb", "reduced Groebner basis, initial ideal and height"),
               true);

    CLI::App* pom_cmd = app.add_subcommand("pom", "path ordered matchings");
    pom_cmd->add_option("mode", opt.pom_mode, "find, validate or extend")
        ->required()
        ->check(CLI::IsMember({"find", "validate", "extend"}));
    add_common(pom_cmd, false);
    pom_cmd->add_option("--seed-pom", opt.seed_spec,
                        "ordered edge-id list, e.g. \"1,2,3\"");

    CLI::App* chain_cmd =
        app.add_subcommand("chain", "build and verify the full biliaison chain");
    add_common(chain_cmd, false);
    chain_cmd->add_flag("--no-verify", opt.no_verify,
                        "emit the chain skeleton without running the verifiers");
    chain_cmd->add_option("--seed-pom", opt.seed_spec,
                          "grow the first stage's matching from these edges");

    CLI::App* vd_cmd = app.add_subcommand("vd", "vertex decomposability certificate");
    add_common(vd_cmd, true);
    vd_cmd->add_option("--seed-pom", opt.seed_spec, "matching defining I_e^G (default empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand("cycles")) return cmd_cycles(opt);
        if (app.got_subcommand("toric")) return cmd_toric(opt);
        if (app.got_subcommand("gb")) return cmd_gb(opt);
        if (app.got_subcommand("pom")) return cmd_pom(opt);
        if (app.got_subcommand("chain")) return cmd_chain(opt);
        if (app.got_subcommand("vd")) return cmd_vd(opt);
    } catch (const bilcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
