#pragma once

#include <cstdint>
#include <string>

#include "brimsim/graph.hpp"

namespace brimsim {

/// Edge weight distribution for generated instances.
struct WeightModel {
    enum class Kind { plus_minus_one, int_range, real_range };

    Kind kind = Kind::plus_minus_one;
    double lo = -1.0; // inclusive for int_range, inclusive lower for real_range
    double hi = 1.0;  // inclusive for int_range, exclusive upper for real_range

    static WeightModel pm1() { return {Kind::plus_minus_one, 0, 0}; }
    static WeightModel ints(std::int64_t lo, std::int64_t hi) {
        return {Kind::int_range, double(lo), double(hi)};
    }
    static WeightModel reals(double lo, double hi) { return {Kind::real_range, lo, hi}; }

    /// Parses "pm1", "int:lo:hi" or "real:lo:hi". Throws ConfigError.
    static WeightModel parse(const std::string& spec);
    std::string to_string() const;
};

/// Erdos-Renyi style instance generator: every unordered pair is included
/// independently with probability `density`, weights drawn from the model.
/// Fully reproducible for a fixed seed (corpora ship as scripts, not data).
/// Connectivity is not enforced. Requires n >= 2 and density in (0, 1];
/// violations throw ContractViolation.
Graph gen_random_graph(std::uint32_t n, double density, const WeightModel& model,
                       std::uint64_t seed);

} // namespace brimsim
