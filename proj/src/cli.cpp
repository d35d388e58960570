#include "tfes/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "tfes/io.hpp"
#include "tfes/reach.hpp"
#include "tfes/reduce.hpp"
#include "tfes/solve_branch.hpp"
#include "tfes/solve_dp.hpp"
#include "tfes/solve_exhaustive.hpp"

namespace tfes {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProblemVariant variant_from_name(const std::string& name) {
    if (name == "stfes") return kStfes;
    if (name == "tfes") return kTfes;
    if (name == "stfcs") return kStfcs;
    return kTfcs;
}

void print_generated(std::ostream& out, const std::string& header, const ReductionOutput& r) {
    out << "c generator " << header << '\n';
    out << "c k " << r.k << '\n';
    for (const auto& [id, role] : r.vertex_legend) out << "c vertex " << id << ' ' << role << '\n';
    out << serialize_instance(r.graph);
}

int run_solve(const TemporalGraph& g, ProblemVariant variant, std::string algo,
              std::optional<int> k, bool force, std::ostream& out, std::ostream& err) {
    if (algo == "auto") {
        const bool dp_usable =
            variant.target == ProblemTarget::edge_set && g.vertex_count() <= 4 && is_simple(g);
        algo = dp_usable ? "dp" : "branch";
    }
    if (algo == "dp") {
        if (variant.target != ProblemTarget::edge_set) {
            err << "error: the dp algorithm solves edge-set variants only\n";
            return exit_code::usage;
        }
        if (!is_simple(g))
            err << "warning: instance has parallel time-edges; dp also forbids two-edge "
                   "round trips, which are not temporal cycles, so its minimum can exceed "
                   "the true optimum\n";
    }

    if (k) {
        bool yes = false;
        if (algo == "branch")
            yes = solve_branch(g, *k, variant).has_value();
        else if (algo == "dp")
            yes = dp_decide(g, *k, variant.model);
        else if (variant.target == ProblemTarget::edge_set)
            yes = solve_exhaustive_edges(g, variant.model, *k, force).has_value();
        else
            yes = solve_exhaustive_connections(g, variant.model, *k, force).has_value();
        out << (yes ? "YES" : "NO") << '\n';
        return yes ? exit_code::ok : exit_code::no;
    }

    Solution solution;
    if (algo == "branch") {
        solution = solve_branch_optimum(g, variant);
    } else if (algo == "dp") {
        DpOutcome dp = dp_solve(g, variant.model);
        solution = Solution{ProblemTarget::edge_set, std::move(dp.witness), {}};
    } else if (variant.target == ProblemTarget::edge_set) {
        solution = *solve_exhaustive_edges(g, variant.model, std::nullopt, force);
    } else {
        solution = *solve_exhaustive_connections(g, variant.model, std::nullopt, force);
    }
    out << "min " << solution.size() << '\n' << serialize_solution(solution);
    return exit_code::ok;
}

int run_verify(const TemporalGraph& g, ProblemVariant variant, const std::string& solution_text,
               std::ostream& out) {
    bool ok;
    if (variant.target == ProblemTarget::edge_set)
        ok = verify_feedback_edge_set(g, parse_edge_solution(solution_text), variant.model);
    else
        ok = verify_feedback_connection_set(g, parse_connection_solution(solution_text),
                                            variant.model);
    out << (ok ? "YES" : "NO") << '\n';
    return ok ? exit_code::ok : exit_code::no;
}

int run_stats(const TemporalGraph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << '\n';
    out << "m " << g.edge_count() << '\n';
    out << "tau " << g.lifetime() << '\n';
    out << "simple " << (is_simple(g) ? "yes" : "no") << '\n';
    const auto strict = shortest_cycle(g, PathModel::strict);
    const auto loose = shortest_cycle(g, PathModel::non_strict);
    out << "shortest_strict_cycle ";
    if (strict)
        out << strict->length() << '\n';
    else
        out << "none\n";
    out << "shortest_nonstrict_cycle ";
    if (loose)
        out << loose->length() << '\n';
    else
        out << "none\n";
    return exit_code::ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solvers, verifiers and instance generators for temporal feedback edge and "
                 "connection sets"};
    app.name("tfes");
    app.require_subcommand(1);

    const std::vector<std::string> variant_names{"tfes", "stfes", "tfcs", "stfcs"};

    auto* solve = app.add_subcommand("solve", "compute a minimum feedback set or decide a budget");
    std::string solve_variant, solve_algo = "auto", solve_input;
    std::optional<int> solve_k;
    bool solve_force = false;
    solve->add_option("--variant", solve_variant, "problem variant")
        ->required()
        ->check(CLI::IsMember(variant_names));
    solve->add_option("--algo", solve_algo, "solver (default: auto)")
        ->check(CLI::IsMember({"branch", "dp", "exhaustive", "auto"}));
    solve->add_option("--k", solve_k, "budget; prints YES/NO instead of a minimum")
        ->check(CLI::NonNegativeNumber);
    solve->add_option("--input", solve_input, "instance file")->required();
    solve->add_flag("--force", solve_force, "override the exhaustive enumeration guard");

    auto* verify = app.add_subcommand("verify", "check a feedback set against an instance");
    std::string verify_variant, verify_input, verify_solution;
    verify->add_option("--variant", verify_variant, "problem variant")
        ->required()
        ->check(CLI::IsMember(variant_names));
    verify->add_option("--input", verify_input, "instance file")->required();
    verify->add_option("--solution", verify_solution, "solution file")->required();

    auto* generate = app.add_subcommand("generate", "emit instances of the reduction families");
    generate->require_subcommand(1);

    auto* sat3 = generate->add_subcommand("sat3", "3-SAT hardness instance");
    std::string sat3_cnf, sat3_model;
    bool sat3_pad = false;
    sat3->add_option("--cnf", sat3_cnf, "DIMACS CNF file")->required();
    sat3->add_option("--model", sat3_model, "strict or nonstrict")
        ->required()
        ->check(CLI::IsMember({"strict", "nonstrict"}));
    sat3->add_flag("--pad", sat3_pad, "pad short clauses by repeating the last literal");

    auto* multicut = generate->add_subcommand("multicut", "multicut-in-DAGs hardness instance");
    std::string multicut_dag;
    int multicut_k = 0;
    multicut->add_option("--dag", multicut_dag, "DAG + terminal pairs file")->required();
    multicut->add_option("--k", multicut_k, "budget (sets gadget multiplicity)")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* layers3 = generate->add_subcommand("layers3", "three identical layers of a static graph");
    std::string layers3_graph;
    layers3->add_option("--graph", layers3_graph, "static graph file")->required();

    auto* random = generate->add_subcommand("random", "seeded random temporal graph");
    int random_n = 0, random_tau = 0;
    double random_p = 0.0;
    std::uint64_t random_seed = 0;
    random->add_option("--n", random_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    random->add_option("--tau", random_tau, "lifetime")->required()->check(CLI::NonNegativeNumber);
    random->add_option("--p", random_p, "per-slot edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", random_seed, "generator seed")->required();

    auto* stats = app.add_subcommand("stats", "report instance statistics");
    std::string stats_input;
    stats->add_option("--input", stats_input, "instance file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (solve->parsed())
            return run_solve(parse_instance(read_file(solve_input)),
                             variant_from_name(solve_variant), solve_algo, solve_k, solve_force,
                             out, err);
        if (verify->parsed())
            return run_verify(parse_instance(read_file(verify_input)),
                              variant_from_name(verify_variant), read_file(verify_solution), out);
        if (stats->parsed()) return run_stats(parse_instance(read_file(stats_input)), out);
        if (sat3->parsed()) {
            CnfFormula phi = parse_cnf(read_file(sat3_cnf));
            if (sat3_pad) phi = pad_clauses(phi);
            const auto r = sat3_model == "strict" ? sat_to_strict(phi) : sat_to_nonstrict(phi);
            print_generated(out, "sat3 " + sat3_model, r);
            return exit_code::ok;
        }
        if (multicut->parsed()) {
            const DagInstance inst = parse_dag(read_file(multicut_dag));
            print_generated(out, "multicut k=" + std::to_string(multicut_k),
                            multicut_dag_to_tfes(inst.dag, inst.pairs, multicut_k));
            return exit_code::ok;
        }
        if (layers3->parsed()) {
            const StaticGraph sg = parse_static_graph(read_file(layers3_graph));
            out << "c generator layers3\n" << serialize_instance(static_to_three_layers(sg));
            return exit_code::ok;
        }
        if (random->parsed()) {
            out << "c generator random n=" << random_n << " tau=" << random_tau
                << " p=" << random_p << " seed=" << random_seed << '\n'
                << serialize_instance(
                       random_temporal_graph(random_n, random_tau, random_p, random_seed));
            return exit_code::ok;
        }
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::guard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input;
    }
    err << "error: no subcommand dispatched\n";
    return exit_code::usage;
}

}  // namespace tfes
