// Command-line surface: repair / verify / reduce / gen / cut / stats over the
// edge-list graph format. Reports are JSON with stable field order; all
// rationals travel as exact strings, never floats.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mrep/approx.hpp"
#include "mrep/apsp.hpp"
#include "mrep/complete.hpp"
#include "mrep/cycles.hpp"
#include "mrep/dmr.hpp"
#include "mrep/exact.hpp"
#include "mrep/fpt.hpp"
#include "mrep/generators.hpp"
#include "mrep/io.hpp"
#include "mrep/reductions.hpp"
#include "mrep/verifier.hpp"

using json = nlohmann::ordered_json;
using namespace mrep;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;

struct CliError : std::runtime_error {
    CliError(int code_, const std::string& what) : std::runtime_error(what), code(code_) {}
    int code;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CliError(kExitInput, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError(kExitInput, "cannot write '" + path + "'");
    out << text;
}

long long env_or(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    return value ? std::atoll(value) : fallback;
}

RepairMode parse_omega(const std::string& text) {
    if (text == "decrease") return RepairMode::Decrease;
    if (text == "increase") return RepairMode::Increase;
    if (text == "general") return RepairMode::General;
    throw CliError(kExitInput, "unknown omega '" + text + "'");
}

std::vector<VertexPair> parse_pairs(const std::vector<std::string>& tokens) {
    std::vector<VertexPair> pairs;
    for (const auto& tok : tokens) {
        std::istringstream in(tok);
        int u, v;
        char sep;
        if (!(in >> u >> sep >> v) || sep != ':' || !in.eof()) {
            throw CliError(kExitInput, "expected 'u:v', got '" + tok + "'");
        }
        pairs.push_back(make_pair_sorted(u, v));
    }
    return pairs;
}

EdgeSet parse_edge_list(const std::string& text) {
    std::vector<std::string> tokens;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) tokens.push_back(tok);
    auto pairs = parse_pairs(tokens);
    return EdgeSet(pairs.begin(), pairs.end());
}

json edges_json(const EdgeSet& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

json deltas_json(const std::map<VertexPair, Rat>& deltas) {
    json out = json::array();
    for (const auto& [e, d] : deltas) out.push_back({e.first, e.second, format_rational(d)});
    return out;
}

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled) {}
    long long elapsed_ms() const {
        if (!enabled_) return 0;
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json stats_json(const InstanceStats& stats, bool full) {
    json out;
    out["deficit_max"] = format_rational(stats.deficit_max);
    out["kappa"] = stats.distinct_deficits;
    out["L"] = stats.max_light_edges;
    if (full) out["broken_cycle_count"] = stats.broken_cycle_count;
    return out;
}

void emit_report(const json& report) { std::cout << report.dump(2) << "\n"; }

// ---- repair ----------------------------------------------------------------

struct RepairArgs {
    std::string algo;
    std::string omega;  // empty: per-algo default
    std::string input = "-";
    int sigma = 0;
    std::optional<int> kmax;
    std::uint64_t seed = 0;  // accepted for interface symmetry; all solvers deterministic
    bool stats = false;
    bool no_timing = false;
    int cap = 0;
};

RepairMode default_omega(const std::string& algo) {
    if (algo == "dmr") return RepairMode::Decrease;
    if (algo == "iomr") return RepairMode::Increase;
    return RepairMode::General;
}

void reject_combo(const std::string& algo, RepairMode omega, bool ok) {
    if (!ok) {
        throw CliError(kExitInput, "algo '" + algo + "' does not support omega '" +
                                       repair_mode_name(omega) + "'");
    }
}

RepairPlan run_solver(const RepairArgs& args, const WeightedGraph& g, RepairMode omega) {
    const std::string& algo = args.algo;
    if (algo == "dmr") {
        reject_combo(algo, omega, omega == RepairMode::Decrease);
        return decrease_repair(g);
    }
    if (algo == "exact") {
        int cap = args.cap > 0 ? args.cap : static_cast<int>(env_or("MREP_SUBSET_CAP", 16));
        return brute_force_repair(g, omega, cap);
    }
    if (algo == "fpt") {
        reject_combo(algo, omega, omega != RepairMode::Decrease);
        if (args.sigma < 3) throw CliError(kExitInput, "fpt requires --sigma >= 3");
        FptOptions opts;
        opts.k_max = args.kmax;
        opts.chordality_check_max_n =
            static_cast<int>(env_or("MREP_CHORDAL_CHECK_MAX", opts.chordality_check_max_n));

        const WeightedGraph* target = &g;
        std::optional<ReductionArtifact> art;
        if (omega == RepairMode::Increase) {
            art = increase_to_general(g);
            target = &art->output;
        }
        auto sol = fpt_solve(*target, args.sigma, opts);
        if (!sol) {
            throw CliError(kExitInfeasible,
                           args.kmax ? "no solution within --kmax"
                                     : "search exhausted; is the graph really " +
                                           std::to_string(args.sigma) + "-chordal?");
        }
        if (!sol->chordality_checked) {
            std::cerr << "warning: graph too large to verify " << args.sigma
                      << "-chordality; trusting the flag\n";
        }
        if (omega == RepairMode::General) return std::move(sol->plan);

        // Increase-only rides the reduction: its optimal general support is a
        // light cover of the source graph.
        EdgeSet support = sol->plan.support();
        for (auto [u, v] : support) {
            if (u >= g.vertex_count() || v >= g.vertex_count()) {
                throw std::logic_error("optimal support touched a gadget edge");
            }
        }
        auto plan = verify_support(g, support, RepairMode::Increase);
        if (!plan) throw std::logic_error("reduced support is not a light cover");
        return std::move(*plan);
    }
    if (algo == "spc") {
        reject_combo(algo, omega, omega != RepairMode::Decrease);
        return spc(g, omega);
    }
    if (algo == "deficit") {
        reject_combo(algo, omega, omega != RepairMode::Decrease);
        return deficit_greedy(g, omega);
    }
    if (algo == "5cycle") {
        reject_combo(algo, omega, omega == RepairMode::General);
        return five_cycle_cover(g);
    }
    throw CliError(kExitInput, "unknown algo '" + algo + "'");
}

int cmd_repair(const RepairArgs& args) {
    auto g = parse_graph(read_input(args.input));
    RepairMode omega = args.omega.empty() ? default_omega(args.algo) : parse_omega(args.omega);
    Stopwatch timer(!args.no_timing);

    json report;
    report["algo"] = args.algo;
    report["omega"] = repair_mode_name(omega);

    if (args.algo == "iomr") {
        reject_combo(args.algo, omega, omega == RepairMode::Increase);
        auto result = iomr_fixed(graph_to_matrix(g));
        EdgeSet support;
        std::map<VertexPair, Rat> deltas;
        WeightedGraph repaired(g.vertex_count());
        for (const auto& e : g.edges()) {
            const Rat& now = result.repaired.at(e.u, e.v);
            if (now != e.w) {
                support.insert(e.pair());
                deltas[e.pair()] = now - e.w;
            }
            repaired.add_edge(e.u, e.v, now);
        }
        report["support"] = edges_json(support);
        report["deltas"] = deltas_json(deltas);
        report["support_size"] = result.modified_entries;
        report["wall_ms"] = timer.elapsed_ms();
        report["metric_ok"] = is_metric(repaired);
    } else {
        RepairPlan plan = run_solver(args, g, omega);
        report["support"] = edges_json(plan.support());
        report["deltas"] = deltas_json(plan.delta);
        report["support_size"] = plan.support_size();
        report["wall_ms"] = timer.elapsed_ms();
        report["metric_ok"] = is_metric(plan.repaired);
    }

    if (args.stats) {
        auto breakdown = enumerate_broken_cycles(g, env_or("MREP_CYCLE_BUDGET", 1000000));
        report["stats"] = stats_json(breakdown.stats, false);
    }
    emit_report(report);
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& input, const std::string& support_text,
               const std::string& omega_text, bool no_timing) {
    auto g = parse_graph(read_input(input));
    RepairMode omega = parse_omega(omega_text);
    if (omega == RepairMode::Decrease) {
        throw CliError(kExitInput, "verify supports omega general|increase");
    }
    EdgeSet support = parse_edge_list(support_text);
    Stopwatch timer(!no_timing);

    json report;
    report["algo"] = "verify";
    report["omega"] = repair_mode_name(omega);
    report["requested_support"] = edges_json(support);
    auto plan = verify_support(g, support, omega);
    report["feasible"] = plan.has_value();
    if (!plan) {
        report["wall_ms"] = timer.elapsed_ms();
        emit_report(report);
        return kExitInfeasible;
    }
    report["support"] = edges_json(plan->support());
    report["deltas"] = deltas_json(plan->delta);
    report["support_size"] = plan->support_size();
    report["wall_ms"] = timer.elapsed_ms();
    report["metric_ok"] = is_metric(plan->repaired);
    emit_report(report);
    return 0;
}

// ---- reduce ----------------------------------------------------------------

void write_artifact(const ReductionArtifact& art, const std::string& out_path,
                    const std::string& provenance_path) {
    write_output(out_path, emit_graph(art.output));
    if (provenance_path.empty()) return;

    json prov;
    prov["kind"] = art.kind;
    prov["opt_relation"] = art.opt_relation;
    prov["source_vertices"] =
        art.output.vertex_count() -
        static_cast<int>(art.gadget_vertex.size());
    prov["output_vertices"] = art.output.vertex_count();
    if (art.kind == "inc2gen") {
        json heavies = json::array();
        for (auto [u, v] : art.heavy_edges) heavies.push_back({u, v});
        prov["heavy_edges"] = heavies;
        prov["gadget_weight"] = format_rational(art.gadget_weight);
        json gadgets = json::object();
        for (const auto& [vid, origin] : art.gadget_vertex) {
            gadgets[std::to_string(vid)] = {origin.first, origin.second};
        }
        prov["gadget_vertices"] = gadgets;
    } else if (art.kind == "multicut") {
        json pairs = json::array();
        for (auto [s, t] : art.demand_pairs) pairs.push_back({s, t});
        prov["pairs"] = pairs;
    } else {
        prov["source"] = art.source;
        prov["sink"] = art.sink;
        prov["length_bound"] = art.length_bound;
    }
    if (!art.committed_edges.empty()) {
        json committed = json::array();
        for (auto [u, v] : art.committed_edges) committed.push_back({u, v});
        prov["committed_edges"] = committed;
        prov["committed_count"] = art.committed_edges.size();
        prov["opt_relation"] =
            art.opt_relation + " + " + std::to_string(art.committed_edges.size()) +
            " committed cut edges on the source side";
    }
    write_output(provenance_path, prov.dump(2) + "\n");
}

// ---- gen -------------------------------------------------------------------

// ---- main ------------------------------------------------------------------

int dispatch(int argc, char** argv) {
    CLI::App app{"graph metric repair toolkit"};
    app.require_subcommand(1);

    // repair
    RepairArgs rep;
    auto* repair = app.add_subcommand("repair", "repair a graph to satisfy a metric");
    repair->add_option("--algo", rep.algo, "dmr|fpt|spc|deficit|exact|5cycle|iomr")->required();
    repair->add_option("--omega", rep.omega, "decrease|increase|general");
    repair->add_option("--sigma", rep.sigma, "chordless cycle bound for fpt");
    int kmax_value = -1;
    repair->add_option("--kmax", kmax_value, "stop fpt after this support size");
    repair->add_option("--seed", rep.seed, "unused; solvers are deterministic");
    repair->add_option("--cap", rep.cap, "edge cap for --algo exact");
    repair->add_flag("--stats", rep.stats, "include desk-scale instance stats");
    repair->add_flag("--no-timing", rep.no_timing, "report wall_ms as 0");
    repair->add_option("input", rep.input, "graph file or - for stdin");

    // verify
    std::string v_input = "-", v_support, v_omega = "general";
    bool v_no_timing = false;
    auto* verify = app.add_subcommand("verify", "check a candidate support");
    verify->add_option("--support", v_support, "comma-separated u:v edges")->required();
    verify->add_option("--omega", v_omega, "general|increase");
    verify->add_flag("--no-timing", v_no_timing, "report wall_ms as 0");
    verify->add_option("input", v_input, "graph file or - for stdin");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build repair instances from other problems");
    reduce->require_subcommand(1);
    std::string r_input = "-", r_output, r_prov;
    bool r_force = false;
    std::vector<std::string> r_pairs;
    int r_source = -1, r_sink = -1, r_length = -1;

    auto* r_mc = reduce->add_subcommand("multicut", "MULTICUT to increase-only repair");
    r_mc->add_option("--pair", r_pairs, "demand pair u:v (repeatable)")->required();
    auto* r_lb = reduce->add_subcommand("lbcut", "length-bounded cut to increase-only repair");
    r_lb->add_option("--source", r_source)->required();
    r_lb->add_option("--sink", r_sink)->required();
    r_lb->add_option("--length", r_length, "path length bound L")->required();
    auto* r_i2g = reduce->add_subcommand("inc2gen", "increase-only to general repair");
    for (auto* sub : {r_mc, r_lb, r_i2g}) {
        sub->add_option("input", r_input, "graph file or - for stdin");
        sub->add_option("-o,--output", r_output, "output graph path (default stdout)");
        sub->add_option("--provenance", r_prov, "write a JSON provenance sidecar here");
    }
    for (auto* sub : {r_mc, r_lb}) {
        sub->add_flag("--force", r_force,
                      "delete demand edges, committing them to the cut");
    }

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    int g_n = 0, g_m = 0, g_wmax = 10, g_sigma = 3;
    std::uint64_t g_seed = 0;
    std::string g_eps = "1/1024", g_out;

    auto* g_random = gen->add_subcommand("random", "seeded random graph");
    g_random->add_option("--n", g_n)->required();
    g_random->add_option("--m", g_m)->required();
    g_random->add_option("--wmax", g_wmax, "weights drawn from 1..wmax");
    g_random->add_option("--seed", g_seed);
    auto* g_chordal = gen->add_subcommand("chordal", "seeded sigma-chordal graph");
    g_chordal->add_option("--n", g_n)->required();
    g_chordal->add_option("--sigma", g_sigma)->required();
    g_chordal->add_option("--wmax", g_wmax, "weights drawn from 1..wmax");
    g_chordal->add_option("--seed", g_seed);
    auto* g_iomr = gen->add_subcommand("iomr-adversarial", "doubling-column gap family");
    g_iomr->add_option("--n", g_n)->required();
    g_iomr->add_option("--epsilon", g_eps, "replacement for zero entries");
    auto* g_foot = gen->add_subcommand("footnote-kn", "K_n with one weight-(n+1) edge");
    g_foot->add_option("--n", g_n)->required();
    for (auto* sub : {g_random, g_chordal, g_iomr, g_foot}) {
        sub->add_option("-o,--output", g_out, "output path (default stdout)");
    }

    // cut
    auto* cut = app.add_subcommand("cut", "exact cut oracles");
    cut->require_subcommand(1);
    std::string c_input = "-";
    std::vector<std::string> c_pairs;
    int c_source = -1, c_sink = -1, c_length = -1, c_cap = 0;
    bool c_exact = false;
    auto* c_mc = cut->add_subcommand("multicut", "minimum multicut by subset search");
    c_mc->add_option("--pair", c_pairs, "demand pair u:v (repeatable)")->required();
    auto* c_lb = cut->add_subcommand("lbcut", "minimum length-bounded cut by subset search");
    c_lb->add_option("--source", c_source)->required();
    c_lb->add_option("--sink", c_sink)->required();
    c_lb->add_option("--length", c_length, "path length bound L")->required();
    for (auto* sub : {c_mc, c_lb}) {
        sub->add_flag("--exact", c_exact, "acknowledge exponential subset search");
        sub->add_option("--cap", c_cap, "edge cap for the search");
        sub->add_option("input", c_input, "graph file or - for stdin");
    }

    // stats
    std::string s_input = "-";
    long long s_budget = 0;
    auto* stats = app.add_subcommand("stats", "exhaustive broken-cycle diagnostics");
    stats->add_option("--budget", s_budget, "cycle enumeration budget");
    stats->add_option("input", s_input, "graph file or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : 0;
    }

    if (repair->parsed()) {
        if (repair->count("--kmax")) rep.kmax = kmax_value;
        return cmd_repair(rep);
    }
    if (verify->parsed()) return cmd_verify(v_input, v_support, v_omega, v_no_timing);

    if (reduce->parsed()) {
        auto g = parse_graph(read_input(r_input));
        ReductionArtifact art{"", WeightedGraph(0), ""};
        std::vector<VertexPair> committed;
        if (r_mc->parsed()) {
            auto pairs = parse_pairs(r_pairs);
            if (r_force) {
                EdgeSet drop;
                for (auto [s, t] : pairs) {
                    if (g.has_edge(s, t)) drop.insert({s, t});
                }
                committed.assign(drop.begin(), drop.end());
                g = remove_edges(g, drop);
            }
            art = multicut_to_mr(g, pairs);
        } else if (r_lb->parsed()) {
            if (r_force && r_source >= 0 && r_sink >= 0 && g.has_edge(r_source, r_sink)) {
                committed.push_back(make_pair_sorted(r_source, r_sink));
                g = remove_edges(g, {make_pair_sorted(r_source, r_sink)});
            }
            art = lbcut_to_mr(g, r_source, r_sink, r_length);
        } else {
            art = increase_to_general(g);
        }
        art.committed_edges = committed;
        write_artifact(art, r_output, r_prov);
        return 0;
    }

    if (gen->parsed()) {
        WeightedGraph out(0);
        if (g_random->parsed()) {
            out = gen_random(g_n, g_m, g_wmax, g_seed);
        } else if (g_chordal->parsed()) {
            out = gen_chordal(g_n, g_sigma, g_wmax, g_seed);
        } else if (g_iomr->parsed()) {
            auto eps = parse_rational(g_eps);
            if (!eps) throw CliError(kExitInput, "malformed --epsilon");
            out = matrix_to_graph(iomr_adversarial(g_n), *eps);
        } else {
            out = gen_footnote_kn(g_n);
        }
        write_output(g_out, emit_graph(out));
        return 0;
    }

    if (cut->parsed()) {
        if (!c_exact) throw CliError(kExitInput, "the cut oracles require --exact");
        auto g = parse_graph(read_input(c_input));
        int cap = c_cap > 0 ? c_cap : static_cast<int>(env_or("MREP_SUBSET_CAP", 16));
        json report;
        EdgeSet result;
        if (c_mc->parsed()) {
            report["problem"] = "multicut";
            result = brute_multicut(g, parse_pairs(c_pairs), cap);
        } else {
            report["problem"] = "lbcut";
            result = brute_lbcut(g, c_source, c_sink, c_length, cap);
        }
        report["size"] = result.size();
        report["cut"] = edges_json(result);
        emit_report(report);
        return 0;
    }

    if (stats->parsed()) {
        auto g = parse_graph(read_input(s_input));
        long long budget = s_budget > 0 ? s_budget : env_or("MREP_CYCLE_BUDGET", 1000000);
        auto report = enumerate_broken_cycles(g, budget);
        emit_report(stats_json(report.stats, true));
        return 0;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CycleBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SubsetCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}
