#pragma once

// Command-line driver. Kept header-only so the test suites can run commands
// in-process and compare their output byte for byte.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input or
// arguments, 3 the input does not meet a command's hypothesis.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bc4/bc4.hpp"

namespace bc4::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "bc4-report/1";

enum ExitCode : int { kOk = 0, kPropertyFailed = 1, kInputError = 2, kRefused = 3 };

using Json = nlohmann::ordered_json;

inline Hypergraph load(const std::string& path) {
    if (path == "-") return read_hypergraph(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open " + path);
    return read_hypergraph(in);
}

inline Json report_header(const std::string& command, const Hypergraph& h) {
    Json j;
    j["schema"] = kSchema;
    j["tool"] = std::string("bc4 ") + kToolVersion;
    j["command"] = command;
    j["input"] = {{"n", h.vertex_count()}, {"m", h.edge_count()}, {"digest", "fnv1a64:" + digest(h)}};
    return j;
}

inline Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

inline Json cycle_json(const Hypergraph& h, const BergeCycleWitness& w) {
    Json edges = Json::array();
    for (auto i : w.hyperedges) edges.push_back(triple_json(h.edge(i)));
    return {{"vertices", w.vertices}, {"edge_indices", w.hyperedges}, {"hyperedges", edges}};
}

inline Json claim_json(const ClaimCheck& c, bool hypothesis) {
    return {{"lhs", c.lhs},
            {"rhs", c.rhs},
            {"pass", c.pass},
            {"status", hypothesis ? (c.pass ? "pass" : "fail") : "hypothesis not met"}};
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_shadow(const std::string& path, std::ostream& out) {
    const Hypergraph h = load(path);
    const ShadowGraph g = shadow(h);
    const DegreeProfile p = degrees(h, g);
    Json j = report_header("shadow", h);
    Json pairs = Json::array();
    for (auto [x, y] : g.edges()) pairs.push_back(Json::array({x, y}));
    Json degs = Json::array();
    for (Vertex v = 0; v < p.vertices.size(); ++v) {
        const auto& r = p.vertices[v];
        degs.push_back({{"v", v}, {"d", r.d}, {"d_s", r.d_s}, {"d_ex", r.d_ex}});
    }
    j["result"] = {{"pair_count", g.edge_count()}, {"pairs", pairs}, {"three_paths", count_3paths(g)},
                   {"degrees", degs}};
    emit(out, j);
    return kOk;
}

inline int cmd_check(const std::string& path, std::size_t length, std::ostream& out) {
    const Hypergraph h = load(path);
    const auto w = find_berge_cycle(h, length);
    Json j = report_header("check", h);
    j["result"] = {{"length", length}, {"status", w ? "cycle" : "free"}};
    if (w) j["result"]["witness"] = cycle_json(h, *w);
    emit(out, j);
    return kOk;
}

inline int cmd_blocks(const std::string& path, std::ostream& out) {
    const Hypergraph h = load(path);
    const BlockDecomposition d = decompose(h);
    Json j = report_header("blocks", h);
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
        Json edges = Json::array();
        for (auto i : b.edge_indices) edges.push_back(triple_json(h.edge(i)));
        blocks.push_back({{"edge_indices", b.edge_indices},
                          {"edges", edges},
                          {"vertices", b.vertex_set},
                          {"classification", std::string(to_string(b.classification))},
                          {"leaf_edges", b.leaf_edges}});
    }
    j["result"] = {{"block_count", d.blocks.size()}, {"blocks", blocks}, {"block_degrees", block_degrees(h, d)}};
    emit(out, j);
    return kOk;
}

inline int cmd_census(const std::string& path, DiagonalRule rule, std::ostream& out) {
    const Hypergraph h = load(path);
    const bool free = is_bc4_free(h);
    const CensusReport c = census(h, rule);
    Json j = report_header("census", h);
    Json pairs = Json::array();
    for (auto& [p, k] : c.per_pair_good_counts) pairs.push_back(Json::array({p[0], p[1], k}));
    j["result"] = {
        {"bc4_free", free},
        {"hypothesis", free ? "met" : "not met"},
        {"diagonal_rule", std::string(to_string(rule))},
        {"total_3paths", c.total_3paths},
        {"good_3paths", c.good_3paths},
        {"nongood_3paths", c.nongood_3paths},
        {"four_cycles", c.four_cycles},
        {"rare_4cycles", c.rare_4cycles},
        {"cycles_without_representative", c.cycles_without_representative},
        {"per_pair_good_counts", pairs},
        {"claims",
         {{"claim1", claim_json(c.claim1, free)},
          {"claim2", claim_json(c.claim2, free)},
          {"claim3", claim_json(c.claim3, free)},
          {"nongood", claim_json(c.nongood, free)}}},
    };
    emit(out, j);
    return free && !c.all_claims_pass() ? kPropertyFailed : kOk;
}

inline int cmd_verify(const std::string& path, std::ostream& out) {
    const Hypergraph h = load(path);
    Json j = report_header("verify", h);
    try {
        const BoundReport r = verify_chain(h);
        Json ineqs = Json::array();
        for (const auto& rec : r.inequalities)
            ineqs.push_back({{"label", rec.label},
                             {"relation", to_string(rec.relation)},
                             {"lhs", to_string(rec.lhs)},
                             {"rhs", to_string(rec.rhs)},
                             {"pass", rec.pass}});
        j["result"] = {{"status", "verified"},
                       {"edge_count", r.edge_count},
                       {"inequalities", ineqs},
                       {"block_excess_sum", to_string(r.block_excess_sum)},
                       {"upper_bound",
                        {{"exact", r.upper_bound_n.str()},
                         {"decimal", r.upper_bound_n.to_decimal(6)},
                         {"floor", r.upper_bound_n.floor().str()}}},
                       {"within_upper_bound", r.within_upper_bound},
                       {"all_pass", r.all_pass()}};
        emit(out, j);
        return r.all_pass() ? kOk : kPropertyFailed;
    } catch (const Refusal& e) {
        j["result"] = {{"status", "refused"}, {"reason", e.what()}};
        if (e.witness()) j["result"]["witness"] = cycle_json(h, *e.witness());
        if (!e.isolated().empty()) j["result"]["isolated_vertices"] = e.isolated();
        emit(out, j);
        return kRefused;
    }
}

inline int cmd_construct(std::uint64_t q, std::ostream& out) {
    const Hypergraph h = lower_bound_construction(q);
    const std::vector<std::string> comments{"bc4 construct q=" + std::to_string(q),
                                            "projective plane incidence, line class cloned"};
    out << to_text(h, comments);
    return kOk;
}

inline int cmd_random(std::size_t n, std::size_t m, std::uint64_t seed, std::ostream& out) {
    const Hypergraph h = random_bc4free(n, m, seed);
    const std::vector<std::string> comments{"bc4 random n=" + std::to_string(n) + " target_m=" + std::to_string(m) +
                                            " seed=" + std::to_string(seed)};
    out << to_text(h, comments);
    return kOk;
}

inline int cmd_search(std::size_t n_max, std::uint64_t budget, unsigned threads, std::ostream& out) {
    SearchOptions opt;
    opt.threads = threads;
    out << format_ex_table(ex_table(n_max, budget, opt));
    return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Berge C4 analysis of 3-uniform hypergraphs", "bc4"};
    app.set_version_flag("--version", std::string("bc4 ") + kToolVersion);
    app.require_subcommand(1);

    std::string path;
    std::size_t length = 4;
    std::string diagonal = "induced";
    std::uint64_t q = 0, seed = 0, budget = 1000000;
    std::size_t n = 0, m = 0, n_max = 0;
    unsigned threads = 1;

    auto* shadow_cmd = app.add_subcommand("shadow", "2-shadow edge list and degree profile");
    shadow_cmd->add_option("input", path, "hypergraph file ('-' for stdin)")->required();
    auto* check_cmd = app.add_subcommand("check", "search for a Berge cycle");
    check_cmd->add_option("input", path, "hypergraph file")->required();
    check_cmd->add_option("--length", length, "cycle length")->capture_default_str();
    auto* blocks_cmd = app.add_subcommand("blocks", "block decomposition");
    blocks_cmd->add_option("input", path, "hypergraph file")->required();
    auto* census_cmd = app.add_subcommand("census", "3-path and 4-cycle census with claim checks");
    census_cmd->add_option("input", path, "hypergraph file")->required();
    census_cmd->add_option("--diagonal", diagonal, "rare-cycle rule")
        ->check(CLI::IsMember({"induced", "any-edges"}))
        ->capture_default_str();
    auto* verify_cmd = app.add_subcommand("verify", "evaluate the inequality chain");
    verify_cmd->add_option("input", path, "hypergraph file")->required();
    auto* construct_cmd = app.add_subcommand("construct", "lower-bound construction from PG(2,q)");
    construct_cmd->add_option("--q", q, "prime power")->required();
    auto* random_cmd = app.add_subcommand("random", "greedy random BC4-free hypergraph");
    random_cmd->add_option("--n", n, "vertex count")->required();
    random_cmd->add_option("--m", m, "target edge count")->required();
    random_cmd->add_option("--seed", seed, "generator seed")->required();
    auto* search_cmd = app.add_subcommand("search", "table of exact ex_3(n, BC4)");
    search_cmd->add_option("--n-max", n_max, "largest n")->required();
    search_cmd->add_option("--budget", budget, "branch-and-bound node budget per n")->capture_default_str();
    search_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*shadow_cmd) return cmd_shadow(path, out);
        if (*check_cmd) return cmd_check(path, length, out);
        if (*blocks_cmd) return cmd_blocks(path, out);
        if (*census_cmd)
            return cmd_census(path, diagonal == "induced" ? DiagonalRule::Induced : DiagonalRule::AnyEdges, out);
        if (*verify_cmd) return cmd_verify(path, out);
        if (*construct_cmd) return cmd_construct(q, out);
        if (*random_cmd) return cmd_random(n, m, seed, out);
        if (*search_cmd) return cmd_search(n_max, budget, threads, out);
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace bc4::cli
