#include "brimsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "brimsim/asa.hpp"
#include "brimsim/coupling.hpp"
#include "brimsim/errors.hpp"
#include "brimsim/kuramoto.hpp"
#include "brimsim/sa.hpp"

namespace brimsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Runs jobs 0..count-1 across a small pool; results must be written into
/// per-index slots so the outcome is independent of scheduling.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& job) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = unsigned(std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double instance_energy(const Graph& g, double cut) {
    return g.total_weight() - 2.0 * cut;
}

} // namespace

SolveOutcome solve_one(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                       const std::string& instance_id) {
    SolveOutcome out;
    out.report.solver = to_string(cfg.solver);
    out.report.instance = instance_id;
    out.report.seed = seed;
    out.report.budget = cfg.budget();

    const auto started = std::chrono::steady_clock::now();
    switch (cfg.solver) {
    case SolverKind::brim: {
        CouplingMatrix j = maxcut_to_ising(g);
        if (cfg.mode == BrimMode::normalized) j = j.normalized();
        if (cfg.quant_bits > 0) j = quantize_weights(j, cfg.quant_bits);
        BrimConfig bc(std::move(j));
        bc.mode = cfg.mode;
        bc.lambda = cfg.lambda;
        bc.params = cfg.params;
        bc.schedule = cfg.schedule;
        bc.perturb.period = cfg.perturb_period;
        bc.perturb.nodes_per_event = cfg.perturb_nodes;
        bc.perturb.rng_seed = splitmix64(seed ^ splitmix64(cfg.perturb_seed));
        bc.t_end = cfg.t_end;
        bc.integrator = cfg.integrator;
        bc.dt = cfg.dt;
        bc.rel_tol = cfg.rel_tol;
        bc.abs_tol = cfg.abs_tol;
        bc.dt_min = cfg.dt_min;
        bc.init_amplitude = cfg.init_amplitude;
        bc.rng_seed = seed;
        bc.trace_stride = cfg.trace_stride;
        BrimResult r = integrate(bc);
        out.report.spins = readout(r.final_state);
        out.best_spins = std::move(r.best_spins);
        out.trace = std::move(r.trace);
        break;
    }
    case SolverKind::sa: {
        SaSchedule sched = default_sa_schedule(g, cfg.sa_sweeps);
        if (cfg.sa_t0 > 0.0) {
            sched.t0 = cfg.sa_t0;
            sched.t_end = cfg.sa_t_end > 0.0 ? cfg.sa_t_end : 1e-3 * cfg.sa_t0;
        } else if (cfg.sa_t_end > 0.0) {
            sched.t_end = cfg.sa_t_end;
        }
        sched.decay = cfg.sa_decay;
        SaResult r = sa_solve(g, sched, seed);
        out.report.spins = r.spins;
        out.best_spins = std::move(r.spins);
        out.trace.energies = std::move(r.energy_trace);
        for (std::size_t k = 0; k < out.trace.energies.size(); ++k) {
            out.trace.times.push_back(double(k));
            out.trace.gains.push_back(1.0);
        }
        break;
    }
    case SolverKind::asa: {
        AsaResult r = asa_solve(g, AsaParams{cfg.asa_cycles, cfg.asa_p0}, seed);
        out.report.spins = r.spins;
        out.best_spins = std::move(r.spins);
        break;
    }
    case SolverKind::oim: {
        CouplingMatrix j = maxcut_to_ising(g).normalized();
        if (cfg.quant_bits > 0) j = quantize_weights(j, cfg.quant_bits);
        OimConfig oc(std::move(j));
        oc.t_end = cfg.t_end;
        oc.dt = cfg.dt;
        oc.rng_seed = seed;
        oc.trace_stride = cfg.trace_stride;
        OimResult r = oim_solve(oc);
        out.report.spins = std::move(r.spins);
        out.best_spins = std::move(r.best_spins);
        out.trace = std::move(r.trace);
        break;
    }
    }
    const auto finished = std::chrono::steady_clock::now();
    out.report.wall_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();

    out.report.cut = cut_value(g, out.report.spins);
    out.report.energy = instance_energy(g, out.report.cut);
    out.best_cut = cut_value(g, out.best_spins);
    out.best_energy = instance_energy(g, out.best_cut);
    return out;
}

BatchResult run_batch(const Graph& g, const SolverConfig& cfg,
                      const std::string& instance_id, std::uint32_t runs,
                      unsigned workers) {
    if (runs < 1) throw ContractViolation("need at least one run");
    BatchResult batch;
    batch.reports.resize(runs);
    parallel_for(runs, workers, [&](std::size_t k) {
        batch.reports[k] = solve_one(g, cfg, cfg.seed + k, instance_id).report;
    });
    batch.best_index = 0;
    for (std::size_t k = 1; k < batch.reports.size(); ++k)
        if (batch.reports[k].cut > batch.reports[batch.best_index].cut)
            batch.best_index = k;
    return batch;
}

std::string batch_csv(const std::vector<RunReport>& reports, bool with_wall) {
    std::string out = run_report_csv_header;
    out += '\n';
    for (const auto& r : reports) {
        out += to_csv_row(r, with_wall);
        out += '\n';
    }
    return out;
}

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace

std::vector<SweepPoint> sweep_anneal_time(const Graph& g, SolverConfig cfg,
                                          const std::string& instance_id,
                                          const std::vector<double>& budgets,
                                          std::uint32_t runs, unsigned workers) {
    if (budgets.empty()) throw ContractViolation("sweep needs at least one budget");
    for (std::size_t i = 1; i < budgets.size(); ++i)
        if (!(budgets[i] > budgets[i - 1]))
            throw ContractViolation("budgets must be strictly increasing");

    std::vector<SweepPoint> curve;
    curve.reserve(budgets.size());
    for (const double budget : budgets) {
        cfg.set_budget(budget);
        const BatchResult batch = run_batch(g, cfg, instance_id, runs, workers);
        std::vector<double> energies;
        energies.reserve(batch.reports.size());
        for (const auto& r : batch.reports) energies.push_back(r.energy);
        SweepPoint p;
        p.budget = budget;
        p.best_energy = batch.best().energy;
        p.median_energy = median(std::move(energies));
        p.runs = runs;
        curve.push_back(p);
    }
    return curve;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = "budget,best_energy,median_energy,runs";
    out += '\n';
    for (const auto& p : points) {
        out += format_number(p.budget);
        out += ',';
        out += format_number(p.best_energy);
        out += ',';
        out += format_number(p.median_energy);
        out += ',';
        out += std::to_string(p.runs);
        out += '\n';
    }
    return out;
}

DistanceTable distance_table(const std::vector<std::pair<std::string, Graph>>& instances,
                             const std::vector<SolverConfig>& solvers, std::uint32_t runs,
                             const BestKnownRegistry& registry, unsigned workers) {
    DistanceTable table;
    for (const auto& cfg : solvers) table.solver_names.push_back(to_string(cfg.solver));

    for (const auto& [id, graph] : instances) {
        const auto entry = registry.lookup(id);
        if (!entry)
            throw ConfigError("registry has no best-known value for instance '" + id + "'");
        table.instance_ids.push_back(id);
        table.best_known.push_back(entry->value);
        std::vector<double> cuts, dists;
        for (const auto& cfg : solvers) {
            const BatchResult batch = run_batch(graph, cfg, id, runs, workers);
            const double best_cut = batch.best().cut;
            const double dist = entry->value - best_cut;
            cuts.push_back(best_cut);
            dists.push_back(dist);
            if (dist < 0.0) {
                table.registry_update_events.push_back(
                    id + ": " + to_string(cfg.solver) + " found cut " +
                    format_number(best_cut) + " above registered best " +
                    format_number(entry->value));
            }
        }
        table.best_cuts.push_back(std::move(cuts));
        table.distances.push_back(std::move(dists));
    }
    return table;
}

std::string distance_csv(const DistanceTable& table) {
    std::string out = "instance,best";
    for (const auto& name : table.solver_names) out += "," + name;
    out += '\n';
    for (std::size_t i = 0; i < table.instance_ids.size(); ++i) {
        out += table.instance_ids[i];
        out += ',';
        out += format_number(table.best_known[i]);
        for (const double d : table.distances[i]) {
            out += ',';
            out += format_number(d);
        }
        out += '\n';
    }
    return out;
}

std::vector<AbSeries> perturbation_ab_test(const Graph& g, const SolverConfig& base,
                                           const std::vector<double>& periods,
                                           std::uint32_t pair_count, unsigned workers) {
    if (base.solver != SolverKind::brim)
        throw ConfigError("the perturbation comparison only applies to the brim solver");
    if (pair_count < 1) throw ContractViolation("need at least one pair");

    std::vector<AbSeries> series(periods.size());
    for (std::size_t s = 0; s < periods.size(); ++s) {
        series[s].period = periods[s];
        series[s].pairs.resize(pair_count);
    }
    parallel_for(periods.size() * pair_count, workers, [&](std::size_t job) {
        const std::size_t s = job / pair_count;
        const std::size_t k = job % pair_count;
        const std::uint64_t seed = base.seed + k;

        SolverConfig off = base;
        off.perturb_period = 0.0;
        SolverConfig on = base;
        on.perturb_period = periods[s];

        AbPair pair;
        pair.seed = seed;
        pair.energy_without = solve_one(g, off, seed, "ab").best_energy;
        pair.energy_with = solve_one(g, on, seed, "ab").best_energy;
        series[s].pairs[k] = pair;
    });
    return series;
}

std::string ab_csv(const std::vector<AbSeries>& series) {
    std::string out = "period,seed,best_energy_without,best_energy_with";
    out += '\n';
    for (const auto& s : series) {
        for (const auto& p : s.pairs) {
            out += std::isfinite(s.period) ? format_number(s.period) : std::string("inf");
            out += ',';
            out += std::to_string(p.seed);
            out += ',';
            out += format_number(p.energy_without);
            out += ',';
            out += format_number(p.energy_with);
            out += '\n';
        }
    }
    return out;
}

} // namespace brimsim
