#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "brimsim/graph.hpp"

namespace brimsim {

/// One solver run, the unit of benchmark output. cut and energy always
/// refer to the original instance (energy = total_weight - 2 * cut), no
/// matter how the machine scaled or quantized its couplings internally.
struct RunReport {
    std::string solver;
    std::string instance;
    std::uint64_t seed = 0;
    double budget = 0.0;  // model-time budget
    double wall_ms = 0.0; // host time; excluded from CSV unless asked for
    SpinVector spins;
    double cut = 0.0;
    double energy = 0.0;
    std::optional<double> distance; // best_known - cut, when registered
};

/// Shortest round-trip decimal rendering; integers print without a point.
std::string format_number(double v);

inline constexpr const char* run_report_csv_header =
    "solver,instance,seed,budget,wall_ms,cut,energy,distance";

/// One CSV row. Wall time is host-dependent, so it stays empty by default
/// to keep batch output byte-reproducible; distance is empty when the
/// registry has no entry for the instance.
std::string to_csv_row(const RunReport& r, bool with_wall = false);

} // namespace brimsim
