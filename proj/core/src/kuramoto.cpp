#include "brimsim/kuramoto.hpp"

#include <cmath>
#include <numbers>

#include "brimsim/errors.hpp"
#include "brimsim/ode.hpp"
#include "brimsim/rng.hpp"
#include "spin_tracker.hpp"

namespace brimsim {

namespace {

void check_finite(const std::vector<double>& v, double t) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i])) throw SimulationFault("non-finite phase", t, i);
}

int spin_of_phase(double phi) {
    const long long k = std::llround(phi / std::numbers::pi);
    return (k % 2) == 0 ? +1 : -1;
}

} // namespace

std::vector<double> kuramoto_derivative(const PhaseState& state, const CouplingMatrix& j) {
    if (state.phi.size() != j.n())
        throw ContractViolation("phase vector length does not match coupling size");
    check_finite(state.phi, state.t);
    std::vector<double> dphidt(j.n(), 0.0);
    for (std::uint32_t i = 0; i < j.n(); ++i) {
        double acc = 0.0;
        for (std::uint32_t k = 0; k < j.n(); ++k)
            if (k != i) acc += j(i, k) * std::sin(state.phi[k] - state.phi[i]);
        dphidt[i] = acc;
    }
    return dphidt;
}

double kuramoto_lyapunov(const PhaseState& state, const CouplingMatrix& j) {
    if (state.phi.size() != j.n())
        throw ContractViolation("phase vector length does not match coupling size");
    double h = 0.0;
    for (std::uint32_t a = 0; a < j.n(); ++a)
        for (std::uint32_t b = a + 1; b < j.n(); ++b)
            h -= j(a, b) * std::cos(state.phi[b] - state.phi[a]);
    return h;
}

SpinVector phase_readout(const PhaseState& state) {
    SpinVector s(state.phi.size());
    for (std::size_t i = 0; i < state.phi.size(); ++i) s[i] = spin_of_phase(state.phi[i]);
    return s;
}

OimResult oim_solve(const OimConfig& cfg) {
    if (!(cfg.t_end > 0.0)) throw ContractViolation("t_end must be positive");
    if (!(cfg.dt > 0.0)) throw ContractViolation("dt must be positive");
    if (cfg.init_values && cfg.init_values->size() != cfg.coupling.n())
        throw ContractViolation("initial phase length does not match node count");

    const std::uint32_t n = cfg.coupling.n();
    const CsrMatrix csr = CsrMatrix::from(cfg.coupling);

    PhaseState state;
    state.t = 0.0;
    if (cfg.init_values) {
        state.phi = *cfg.init_values;
    } else {
        std::mt19937_64 rng(cfg.rng_seed);
        state.phi.resize(n);
        for (auto& p : state.phi) p = uniform_double(rng, 0.0, 2.0 * std::numbers::pi);
    }
    check_finite(state.phi, 0.0);

    // sin(phi_j - phi_i) = sin(phi_j) cos(phi_i) - cos(phi_j) sin(phi_i), so one
    // pass of row sums over J sin(phi) and J cos(phi) covers all couplings.
    std::vector<double> sin_phi(n), cos_phi(n), js(n), jc(n);
    auto rhs = [&](double, const std::vector<double>& y, std::vector<double>& dydt) {
        for (std::uint32_t i = 0; i < n; ++i) {
            sin_phi[i] = std::sin(y[i]);
            cos_phi[i] = std::cos(y[i]);
        }
        csr.multiply(sin_phi, js);
        csr.multiply(cos_phi, jc);
        dydt.resize(n);
        for (std::uint32_t i = 0; i < n; ++i)
            dydt[i] = js[i] * cos_phi[i] - jc[i] * sin_phi[i];
    };

    auto spins_now = [&]() {
        SpinVector s(n);
        for (std::uint32_t i = 0; i < n; ++i) s[i] = spin_of_phase(state.phi[i]);
        return s;
    };

    detail::SpinTracker tracker(csr, spins_now());
    auto track = [&]() {
        for (std::uint32_t i = 0; i < n; ++i)
            tracker.set_spin(i, spin_of_phase(state.phi[i]));
    };

    OimResult result;
    result.best_spins = tracker.spins();
    result.best_energy = tracker.energy();

    const bool tracing = cfg.trace_stride > 0;
    auto record = [&]() {
        if (!tracing) return;
        result.trace.times.push_back(state.t);
        result.trace.states.push_back(state.phi);
        result.trace.gains.push_back(1.0);
        result.trace.energies.push_back(tracker.energy());
    };
    record();

    Rk4Stepper rk4(n);
    double t = 0.0;
    const double snap_eps = 1e-12 * std::max(1.0, cfg.t_end);
    while (t < cfg.t_end) {
        const double remaining = cfg.t_end - t;
        if (remaining <= snap_eps) break;
        const double dt = std::min(cfg.dt, remaining);
        rk4.step(rhs, t, dt, state.phi);
        t += dt;
        if (cfg.t_end - t <= snap_eps) t = cfg.t_end;
        state.t = t;
        check_finite(state.phi, t);
        ++result.steps;
        track();
        if (tracker.energy() < result.best_energy) {
            result.best_energy = tracker.energy();
            result.best_spins = tracker.spins();
        }
        if (tracing && result.steps % cfg.trace_stride == 0) record();
    }
    state.t = cfg.t_end;
    if (tracing && (result.trace.times.empty() || result.trace.times.back() != state.t))
        record();

    result.spins = phase_readout(state);
    result.final_state = std::move(state);
    return result;
}

} // namespace brimsim
