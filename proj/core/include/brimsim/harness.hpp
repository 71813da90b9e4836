#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brimsim/brim.hpp"
#include "brimsim/config.hpp"
#include "brimsim/graph.hpp"
#include "brimsim/registry.hpp"
#include "brimsim/report.hpp"

namespace brimsim {

/// One finished run. The report carries the final (sa/asa: best-seen)
/// assignment in instance units; best_* fields track the best thresholded
/// state the machine passed through anywhere along the run.
struct SolveOutcome {
    RunReport report;
    Trace trace; // populated when trace_stride > 0
    SpinVector best_spins;
    double best_cut = 0.0;
    double best_energy = 0.0;
};

/// Runs one seeded solve of the configured solver on an instance.
SolveOutcome solve_one(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                       const std::string& instance_id);

struct BatchResult {
    std::vector<RunReport> reports; // ordered by seed: cfg.seed .. cfg.seed+k-1
    std::size_t best_index = 0;     // maximum cut; ties go to the lowest seed

    const RunReport& best() const { return reports[best_index]; }
};

/// k independent runs with consecutive seeds. Workers only change the
/// execution order, never the results.
BatchResult run_batch(const Graph& g, const SolverConfig& cfg,
                      const std::string& instance_id, std::uint32_t runs,
                      unsigned workers = 1);

std::string batch_csv(const std::vector<RunReport>& reports, bool with_wall = false);

/// Solution quality against the run-time budget, one point per budget.
struct SweepPoint {
    double budget = 0.0;
    double best_energy = 0.0;
    double median_energy = 0.0;
    std::uint32_t runs = 0;
};

/// Budgets must be strictly increasing. Each point aggregates the final
/// Ising energies of `runs` seeded runs.
std::vector<SweepPoint> sweep_anneal_time(const Graph& g, SolverConfig cfg,
                                          const std::string& instance_id,
                                          const std::vector<double>& budgets,
                                          std::uint32_t runs, unsigned workers = 1);

std::string sweep_csv(const std::vector<SweepPoint>& points);

/// Best-of-k distance from the registered best-known value, per solver and
/// instance.
struct DistanceTable {
    std::vector<std::string> solver_names;
    std::vector<std::string> instance_ids;
    std::vector<double> best_known;                 // per instance
    std::vector<std::vector<double>> best_cuts;     // [instance][solver]
    std::vector<std::vector<double>> distances;     // [instance][solver]
    std::vector<std::string> registry_update_events; // negative distances
};

/// Missing registry entries are configuration errors. Negative distances
/// (a solver beat the registry) are recorded and flagged, not rejected.
DistanceTable distance_table(const std::vector<std::pair<std::string, Graph>>& instances,
                             const std::vector<SolverConfig>& solvers, std::uint32_t runs,
                             const BestKnownRegistry& registry, unsigned workers = 1);

std::string distance_csv(const DistanceTable& table);

/// Paired comparison of perturbation settings. Both arms of a pair share
/// the initialization seed and differ only in the perturbation period;
/// energies are the best seen over the whole trajectory.
struct AbPair {
    std::uint64_t seed = 0;
    double energy_without = 0.0;
    double energy_with = 0.0;
};

struct AbSeries {
    double period = 0.0;
    std::vector<AbPair> pairs;
};

std::vector<AbSeries> perturbation_ab_test(const Graph& g, const SolverConfig& base,
                                           const std::vector<double>& periods,
                                           std::uint32_t pair_count,
                                           unsigned workers = 1);

std::string ab_csv(const std::vector<AbSeries>& series);

} // namespace brimsim
