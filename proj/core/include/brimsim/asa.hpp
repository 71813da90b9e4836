#pragma once

#include <cstdint>

#include "brimsim/graph.hpp"

namespace brimsim {

/// Idealized digital annealer: all-to-all connectivity, one sequential
/// greedy update of every node per cycle, followed by random flips whose
/// probability decays linearly from p0 to 0 across cycles.
struct AsaParams {
    std::uint64_t cycles = 100;
    double p0 = 0.2;
};

struct AsaResult {
    SpinVector spins; // best-seen assignment
    double best_cut = 0.0;
};

/// Deterministic per seed. Requires cycles >= 1 and p0 in [0, 1].
AsaResult asa_solve(const Graph& g, const AsaParams& params, std::uint64_t seed);

} // namespace brimsim
