// brimsim command-line front end: instance generation, solving, budget
// sweeps, exact oracles, perturbation comparisons, and distance tables.
// All randomized behavior is reproducible through --seed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brimsim/brute_force.hpp"
#include "brimsim/config.hpp"
#include "brimsim/errors.hpp"
#include "brimsim/generator.hpp"
#include "brimsim/gset.hpp"
#include "brimsim/harness.hpp"
#include "brimsim/registry.hpp"

namespace {

using namespace brimsim;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_fault = 2;

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << payload;
}

std::string instance_id(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "inf") {
            values.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(std::string("bad ") + what + " list entry '" + item + "'");
        }
    }
    if (values.empty()) throw ConfigError(std::string("empty ") + what + " list");
    return values;
}

std::string spins_to_string(const SpinVector& spins) {
    std::string s;
    s.reserve(spins.size());
    for (int v : spins) s += v > 0 ? '+' : '-';
    return s;
}

struct CommonFlags {
    std::string instance;
    std::string solver;
    std::string config;
    std::uint32_t runs = 1;
    std::optional<std::uint64_t> seed;
    std::string out;
    unsigned workers = 1;
    std::optional<double> budget;
    std::optional<int> quant_bits;
    bool timings = false;

    void attach(CLI::App* cmd, bool with_solver = true) {
        cmd->add_option("--instance", instance, "instance file (Gset format)")
            ->required();
        if (with_solver)
            cmd->add_option("--solver", solver, "solver: brim | sa | asa | oim");
        cmd->add_option("--config", config, "flat key-value config file");
        cmd->add_option("--runs", runs, "runs per batch (consecutive seeds)");
        cmd->add_option("--seed", seed, "base seed");
        cmd->add_option("--out", out, "output path (default: stdout)");
        cmd->add_option("--workers", workers, "worker threads for batches");
        cmd->add_option("--budget", budget,
                        "model-time budget: t_end for brim/oim, sweeps for sa, "
                        "cycles for asa");
        cmd->add_option("--quant-bits", quant_bits,
                        "coupling DAC resolution in bits (0 = exact weights)");
        cmd->add_flag("--timings", timings, "include wall-clock times in CSV output");
    }

    SolverConfig make_config() const {
        SolverConfig cfg;
        if (!config.empty()) cfg = load_config_file(config);
        if (!solver.empty()) cfg.solver = parse_solver_kind(solver);
        if (seed) cfg.seed = *seed;
        if (budget) cfg.set_budget(*budget);
        if (quant_bits) cfg.quant_bits = *quant_bits;
        return cfg;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"behavioral simulator and benchmark harness for bistable "
                 "resistively-coupled Ising machines"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run a solver batch, emit run reports");
    CommonFlags solve_flags;
    solve_flags.attach(solve_cmd);
    std::string trace_out;
    solve_cmd->add_option("--trace-out", trace_out,
                          "trajectory CSV path (requires --runs 1)");
    std::uint32_t trace_stride = 10;
    solve_cmd->add_option("--trace-stride", trace_stride,
                          "steps between trace samples");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a random instance");
    std::uint32_t gen_n = 16;
    double gen_density = 0.5;
    std::string gen_weights = "pm1";
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--density", gen_density, "edge probability in (0, 1]")
        ->required();
    gen_cmd->add_option("--weights", gen_weights, "pm1 | int:lo:hi | real:lo:hi");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output path (default: stdout)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact max-cut by enumeration");
    std::string oracle_instance, oracle_out;
    std::uint32_t oracle_cap = 30;
    unsigned oracle_workers = 1;
    oracle_cmd->add_option("--instance", oracle_instance, "instance file")->required();
    oracle_cmd->add_option("--cap", oracle_cap, "largest allowed vertex count");
    oracle_cmd->add_option("--workers", oracle_workers, "enumeration threads");
    oracle_cmd->add_option("--out", oracle_out, "output path (default: stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "solution quality vs. budget");
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);
    std::string budgets_text;
    sweep_cmd->add_option("--budgets", budgets_text, "comma-separated budgets, increasing")
        ->required();

    // ab-perturb
    auto* ab_cmd = app.add_subcommand("ab-perturb",
                                      "paired runs with/without perturbation");
    CommonFlags ab_flags;
    ab_flags.attach(ab_cmd, /*with_solver=*/false);
    std::string periods_text = "10";
    ab_cmd->add_option("--periods", periods_text, "comma-separated perturbation periods");

    // table
    auto* table_cmd = app.add_subcommand("table", "best-of-k distance table");
    std::vector<std::string> table_instances;
    std::string table_solvers = "brim";
    std::string table_registry = "data/best_known.txt";
    std::string table_config, table_out;
    std::uint32_t table_runs = 50;
    std::optional<std::uint64_t> table_seed;
    unsigned table_workers = 1;
    bool table_timings = false;
    table_cmd->add_option("--instances", table_instances, "instance files")->required();
    table_cmd->add_option("--solvers", table_solvers, "comma-separated solver names");
    table_cmd->add_option("--registry", table_registry, "best-known registry file");
    table_cmd->add_option("--config", table_config, "flat key-value config file");
    table_cmd->add_option("--runs", table_runs, "runs per (solver, instance)");
    table_cmd->add_option("--seed", table_seed, "base seed");
    table_cmd->add_option("--out", table_out, "output path (default: stdout)");
    table_cmd->add_option("--workers", table_workers, "worker threads");
    table_cmd->add_flag("--timings", table_timings, "(accepted for symmetry; unused)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*solve_cmd) {
            SolverConfig cfg = solve_flags.make_config();
            if (!trace_out.empty()) {
                if (solve_flags.runs != 1)
                    throw ConfigError("--trace-out requires --runs 1");
                cfg.trace_stride = trace_stride;
            }
            const Graph g = load_gset_file(solve_flags.instance);
            const std::string id = instance_id(solve_flags.instance);
            if (!trace_out.empty()) {
                const SolveOutcome outcome = solve_one(g, cfg, cfg.seed, id);
                std::string csv = "t";
                for (std::uint32_t i = 0; i < g.n(); ++i)
                    csv += ",v" + std::to_string(i);
                csv += ",gain,energy\n";
                for (std::size_t r = 0; r < outcome.trace.times.size(); ++r) {
                    csv += format_number(outcome.trace.times[r]);
                    for (const double v : outcome.trace.states[r])
                        csv += "," + format_number(v);
                    csv += "," + format_number(outcome.trace.gains[r]);
                    csv += "," + format_number(outcome.trace.energies[r]);
                    csv += '\n';
                }
                write_output(trace_out, csv);
                write_output(solve_flags.out,
                             batch_csv({outcome.report}, solve_flags.timings));
            } else {
                const BatchResult batch = run_batch(g, cfg, id, solve_flags.runs,
                                                    solve_flags.workers);
                write_output(solve_flags.out,
                             batch_csv(batch.reports, solve_flags.timings));
            }
        } else if (*gen_cmd) {
            const Graph g =
                gen_random_graph(gen_n, gen_density, WeightModel::parse(gen_weights),
                                 gen_seed);
            write_output(gen_out, serialize_gset(g));
        } else if (*oracle_cmd) {
            const Graph g = load_gset_file(oracle_instance);
            BruteForceOptions opts;
            opts.max_n = oracle_cap;
            opts.threads = oracle_workers;
            const BruteForceResult r = brute_force_maxcut(g, opts);
            std::string csv = "instance,n,best_cut,spins\n";
            csv += instance_id(oracle_instance) + "," + std::to_string(g.n()) + "," +
                   format_number(r.best_cut) + "," + spins_to_string(r.spins) + "\n";
            write_output(oracle_out, csv);
        } else if (*sweep_cmd) {
            SolverConfig cfg = sweep_flags.make_config();
            const Graph g = load_gset_file(sweep_flags.instance);
            const auto budgets = parse_number_list(budgets_text, "budget");
            const auto curve =
                sweep_anneal_time(g, cfg, instance_id(sweep_flags.instance), budgets,
                                  sweep_flags.runs, sweep_flags.workers);
            write_output(sweep_flags.out, sweep_csv(curve));
        } else if (*ab_cmd) {
            SolverConfig cfg = ab_flags.make_config();
            cfg.solver = SolverKind::brim;
            const Graph g = load_gset_file(ab_flags.instance);
            const auto periods = parse_number_list(periods_text, "period");
            const auto series = perturbation_ab_test(g, cfg, periods, ab_flags.runs,
                                                     ab_flags.workers);
            write_output(ab_flags.out, ab_csv(series));
        } else if (*table_cmd) {
            SolverConfig base;
            if (!table_config.empty()) base = load_config_file(table_config);
            if (table_seed) base.seed = *table_seed;
            std::vector<SolverConfig> solvers;
            std::stringstream ss(table_solvers);
            std::string name;
            while (std::getline(ss, name, ',')) {
                SolverConfig cfg = base;
                cfg.solver = parse_solver_kind(name);
                solvers.push_back(cfg);
            }
            if (solvers.empty()) throw ConfigError("empty solver list");
            std::vector<std::pair<std::string, Graph>> instances;
            for (const auto& path : table_instances)
                instances.emplace_back(instance_id(path), load_gset_file(path));
            const BestKnownRegistry registry = BestKnownRegistry::load_file(table_registry);
            const DistanceTable table =
                distance_table(instances, solvers, table_runs, registry, table_workers);
            for (const auto& event : table.registry_update_events)
                std::cerr << "registry update candidate: " << event << '\n';
            write_output(table_out, distance_csv(table));
        }
    } catch (const SimulationFault& e) {
        std::cerr << "simulation fault at t=" << e.t() << ", node " << e.index() << ": "
                  << e.what() << '\n';
        return exit_fault;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
