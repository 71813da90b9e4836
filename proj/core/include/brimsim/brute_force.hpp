#pragma once

#include <cstdint>

#include "brimsim/graph.hpp"

namespace brimsim {

struct BruteForceResult {
    double best_cut = 0.0;
    SpinVector spins; // one maximizer, deterministic tie-break
};

struct BruteForceOptions {
    /// Hard size cap; callers must raise it explicitly for larger graphs.
    std::uint32_t max_n = 30;
    /// Worker threads for partitioning the enumeration. The result is
    /// identical for any count.
    unsigned threads = 1;
};

/// Exhaustive Max-Cut. Enumerates 2^(n-1) spin assignments with vertex 0
/// pinned to +1 (cuts are invariant under global spin flip), walking the
/// assignments in Gray-code order so each step is an O(degree) update.
///
/// Tie-break: among equal-cut maximizers the lexicographically smallest
/// spin vector wins, where +1 orders before -1, so the all-(+1) vector is
/// the smallest overall.
///
/// Throws ContractViolation when g.n() exceeds opts.max_n.
BruteForceResult brute_force_maxcut(const Graph& g, const BruteForceOptions& opts = {});

} // namespace brimsim
