#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "brimsim/graph.hpp"

namespace brimsim {

enum class TempDecay { geometric, linear };

/// Classic simulated-annealing schedule over cut value. One sweep proposes
/// n single-spin flips.
struct SaSchedule {
    std::uint64_t sweeps = 1000;
    double t0 = 1.0;    // initial temperature
    double t_end = 1e-3; // final temperature, in (0, t0)
    TempDecay decay = TempDecay::geometric;
};

/// Default temperatures for an instance: t0 = max|W| * mean degree,
/// t_end = 1e-3 * t0 (near-free initial acceptance, near-greedy finish).
SaSchedule default_sa_schedule(const Graph& g, std::uint64_t sweeps);

/// Temperature before sweep k, k in [0, sweeps).
double sa_temperature(const SaSchedule& s, std::uint64_t k);

/// Metropolis rule on cut maximization: accept when delta_cut >= 0, else
/// with probability exp(delta_cut / temperature).
bool metropolis_accept(double delta_cut, double temperature, std::mt19937_64& rng);

struct SaResult {
    SpinVector spins;   // best-seen assignment, not the final one
    double best_cut = 0.0;
    std::vector<double> energy_trace; // Ising energy after each sweep (index 0 = initial)
};

/// Runs single-flip Metropolis annealing. Deterministic per seed.
SaResult sa_solve(const Graph& g, const SaSchedule& sched, std::uint64_t seed);

} // namespace brimsim
