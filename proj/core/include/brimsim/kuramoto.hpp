#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brimsim/brim.hpp"
#include "brimsim/coupling.hpp"
#include "brimsim/graph.hpp"

namespace brimsim {

/// Oscillator phases, stored unwrapped; all energy functions depend on
/// phase differences only.
struct PhaseState {
    std::vector<double> phi;
    double t = 0.0;
};

/// dphi_i/dt = sum_j J_ij sin(phi_j - phi_i). Translation invariant.
std::vector<double> kuramoto_derivative(const PhaseState& state, const CouplingMatrix& j);

/// H = -sum_{i<j} J_ij cos(phi_j - phi_i); bounded by sum |J_ij| and equal
/// to the Ising energy whenever every phase is a multiple of pi.
double kuramoto_lyapunov(const PhaseState& state, const CouplingMatrix& j);

/// Rounds each phase to the nearest multiple of pi; even multiples map to
/// +1, odd to -1.
SpinVector phase_readout(const PhaseState& state);

struct OimConfig {
    CouplingMatrix coupling;
    double t_end = 50.0;
    double dt = 0.01;
    /// Initial phases: explicit when set, otherwise uniform in [0, 2*pi).
    std::optional<std::vector<double>> init_values;
    std::uint64_t rng_seed = 1;
    std::uint32_t trace_stride = 0;

    explicit OimConfig(CouplingMatrix j) : coupling(std::move(j)) {}
};

struct OimResult {
    PhaseState final_state;
    SpinVector spins; // readout of the final state
    Trace trace;      // states hold phases; the gain column is fixed at 1
    std::size_t steps = 0;
    SpinVector best_spins;
    double best_energy = 0.0;
};

/// Fixed-step integration of the phase dynamics, same determinism contract
/// as the bistable machine. Throws SimulationFault on non-finite states.
OimResult oim_solve(const OimConfig& cfg);

} // namespace brimsim
