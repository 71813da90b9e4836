#pragma once

#include <cstdint>
#include <random>

namespace brimsim {

// std::mt19937_64 produces an identical stream everywhere, but the standard
// distributions do not. These replacements keep generated corpora and run
// seeds portable across compilers.

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_double(rng);
}

/// Uniform integer in [lo, hi], inclusive. Uses rejection to stay unbiased.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    if (span == 0) return std::int64_t(rng()); // full 64-bit range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + std::int64_t(x % span);
}

/// +1 or -1 with equal probability.
inline int rademacher(std::mt19937_64& rng) {
    return (rng() >> 63) ? -1 : +1;
}

} // namespace brimsim
