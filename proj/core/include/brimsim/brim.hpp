#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brimsim/coupling.hpp"
#include "brimsim/graph.hpp"
#include "brimsim/schedule.hpp"
#include "brimsim/ziv.hpp"

namespace brimsim {

/// Physical node constants (Eq.-level model). Normalized runs ignore these.
struct NodeParams {
    double capacitance = 0.5;        // C; the state capacitor pair contributes 2C
    double leak_resistance = 1e12;   // R; may be infinity for a leak-free node
    double coupling_resistance = 1.0; // R_C; R_ij = R_C / |W_ij|
    ZivParams ziv;
};

/// Snapshot of the machine: node voltages plus the model clock.
struct NodeState {
    std::vector<double> v;
    double t = 0.0;
};

/// Scheduled state flips used to escape basins of attraction. Events fire
/// at t = k * period exactly; each event negates `nodes_per_event` distinct
/// uniformly chosen node voltages.
struct PerturbPolicy {
    double period = 0.0; // <= 0 or infinity disables perturbation
    std::uint32_t nodes_per_event = 1;
    std::uint64_t rng_seed = 0;

    bool enabled() const;
};

enum class BrimMode {
    normalized, // v_stable = 1, tau = 1, dv/dt = c*J*v + lambda*(v - v^3)
    physical,   // Eq.-level currents with explicit C, R, R_C and ZIV element
};

enum class IntegratorKind { fixed_rk4, adaptive_rk45 };

struct BrimConfig {
    CouplingMatrix coupling;
    BrimMode mode = BrimMode::normalized;
    /// Bistability strength (normalized mode). Kept below the full coupling
    /// gain by default: once c exceeds lambda, the spurious parallel fixed
    /// point of a frustrated pair vanishes.
    double lambda = 0.5;
    NodeParams params;   // physical mode
    AnnealSchedule schedule;
    PerturbPolicy perturb;
    double t_end = 50.0;

    IntegratorKind integrator = IntegratorKind::fixed_rk4;
    double dt = 0.01;        // fixed step; initial step for the adaptive mode
    double rel_tol = 1e-6;   // adaptive mode
    double abs_tol = 1e-9;   // adaptive mode
    double dt_min = 1e-12;   // adaptive underflow guard

    /// Initial voltages: explicit vector when set, otherwise uniform random
    /// in [-init_amplitude, +init_amplitude] per node.
    std::optional<std::vector<double>> init_values;
    double init_amplitude = 0.1;
    std::uint64_t rng_seed = 1;

    /// Trace sampling stride in accepted steps; 0 disables the trace.
    /// t = 0 and t = t_end are always included when enabled.
    std::uint32_t trace_stride = 0;

    explicit BrimConfig(CouplingMatrix j) : coupling(std::move(j)) {}
};

/// Sampled trajectory. `states` rows align with `times`; `energies` holds
/// the Ising energy of the thresholded state under the machine coupling.
struct Trace {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<double> gains;
    std::vector<double> energies;
};

struct BrimResult {
    NodeState final_state;
    Trace trace;
    std::size_t steps = 0;
    /// Best thresholded state seen at any accepted step, by machine energy.
    SpinVector best_spins;
    double best_energy = 0.0;
    double best_t = 0.0;
};

/// Right-hand side in normalized units: dv_i/dt = c * sum_j J_ij v_j
/// + lambda * (v_i - v_i^3). Pure; throws SimulationFault on non-finite
/// input state.
std::vector<double> node_derivative_normalized(const NodeState& state,
                                               const CouplingMatrix& j, double gain,
                                               double lambda);

/// Right-hand side with explicit circuit currents:
///   dv_i/dt = (1/2C) [ c * I_X - I_R - I_ZIV ]
///   I_X   = sum_{j != i} (-sign(W_ij) / R_ij) v_j,  R_ij = R_C / |W_ij|
///   I_R   = (1/R + sum_j 1/R_ij) v_i
///   I_ZIV = g(2 v_i)
std::vector<double> node_derivative_physical(const NodeState& state, const Graph& g,
                                             const NodeParams& params, double gain);

/// Negates the selected node voltages; time is unchanged. Duplicate or
/// out-of-range indices throw ContractViolation.
NodeState perturb(const NodeState& state, const std::vector<std::uint32_t>& indices);

/// Thresholds voltages against 0: spin_i = +1 for v_i > 0, -1 for v_i < 0,
/// and +1 at exactly 0.
SpinVector readout(const NodeState& state);

/// Energy function of the normalized dynamics:
///   H(v) = -c * sum_{i<j} J_ij v_i v_j + sum_i lambda * (v_i^4/4 - v_i^2/2)
/// Nonincreasing along trajectories at constant gain, and its gradient is
/// the negated right-hand side.
double lyapunov_value(const NodeState& state, const CouplingMatrix& j, double lambda,
                      double gain);

/// Runs the machine from t = 0 to t = t_end. Integration steps are split
/// so perturbation events land at their exact times; fixed-step runs are
/// bitwise deterministic for a fixed seed. Throws SimulationFault on
/// non-finite states or adaptive step underflow.
BrimResult integrate(const BrimConfig& cfg);

} // namespace brimsim
