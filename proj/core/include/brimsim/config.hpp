#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "brimsim/brim.hpp"
#include "brimsim/sa.hpp"

namespace brimsim {

enum class SolverKind { brim, sa, asa, oim };

SolverKind parse_solver_kind(const std::string& name); // throws ConfigError
std::string to_string(SolverKind kind);

/// Flat key-value run configuration covering every solver. Files hold
/// "key = value" lines ('#' starts a comment); unknown keys are errors.
/// Flags override file values, file values override these defaults.
struct SolverConfig {
    SolverKind solver = SolverKind::brim;

    // dynamics (brim, oim)
    BrimMode mode = BrimMode::normalized;
    double lambda = 0.5;
    NodeParams params;
    AnnealSchedule schedule;
    double perturb_period = 0.0; // 0 disables
    std::uint32_t perturb_nodes = 1;
    std::uint64_t perturb_seed = 0;
    double t_end = 50.0;
    IntegratorKind integrator = IntegratorKind::fixed_rk4;
    double dt = 0.01;
    double rel_tol = 1e-6;
    double abs_tol = 1e-9;
    double dt_min = 1e-12;
    double init_amplitude = 0.1;
    std::uint32_t trace_stride = 0;
    int quant_bits = 0; // 0 disables coupling quantization

    // simulated annealing
    std::uint64_t sa_sweeps = 10000;
    double sa_t0 = 0.0;    // 0 = derive from the instance
    double sa_t_end = 0.0; // 0 = 1e-3 * t0
    TempDecay sa_decay = TempDecay::geometric;

    // idealized digital annealer
    std::uint64_t asa_cycles = 1000;
    double asa_p0 = 0.2;

    std::uint64_t seed = 1; // base seed; run k uses seed + k

    /// Model-time budget of one run under the active solver: t_end for the
    /// dynamical machines, sweeps for sa, cycles for asa.
    double budget() const;
    void set_budget(double b); // routes to the matching knob

    /// Applies one "key = value" assignment. Throws ConfigError on unknown
    /// keys or unparsable values.
    void set(const std::string& key, const std::string& value);

    std::string serialize() const;
};

SolverConfig load_config(std::istream& in);
SolverConfig load_config_file(const std::string& path);

} // namespace brimsim
