#include "brimsim/brim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "brimsim/errors.hpp"
#include "brimsim/ode.hpp"
#include "brimsim/rng.hpp"
#include "spin_tracker.hpp"

namespace brimsim {

bool PerturbPolicy::enabled() const {
    return period > 0.0 && std::isfinite(period);
}

namespace {

void check_finite(const std::vector<double>& v, double t) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            throw SimulationFault("non-finite node voltage", t, i);
}

SpinVector threshold(const std::vector<double>& v) {
    SpinVector s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] < 0.0 ? -1 : +1;
    return s;
}

void track_voltages(detail::SpinTracker& tracker, const std::vector<double>& v) {
    for (std::uint32_t i = 0; i < v.size(); ++i)
        tracker.set_spin(i, v[i] < 0.0 ? -1 : +1);
}

/// Right-hand side for both model flavors, evaluated against a CSR view.
struct Rhs {
    const CsrMatrix& j;
    const AnnealSchedule& schedule;
    BrimMode mode;
    double lambda = 1.0;
    // physical-mode constants
    double inv_2c = 1.0;
    double leak_conductance = 0.0;
    double inv_rc = 1.0;
    std::vector<double> coupling_leak; // sum_j |J_ij| / R_C per node
    ZivParams ziv;
    std::vector<double> tmp;

    void operator()(double t, const std::vector<double>& y, std::vector<double>& dydt) {
        const double gain = anneal_gain(t, schedule);
        j.multiply(y, tmp);
        dydt.resize(y.size());
        if (mode == BrimMode::normalized) {
            for (std::size_t i = 0; i < y.size(); ++i)
                dydt[i] = gain * tmp[i] + lambda * (y[i] - y[i] * y[i] * y[i]);
        } else {
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double coupling_current = gain * inv_rc * tmp[i];
                const double leak_current = (leak_conductance + coupling_leak[i]) * y[i];
                const double ziv_c = ziv_current(2.0 * y[i], ziv);
                dydt[i] = inv_2c * (coupling_current - leak_current - ziv_c);
            }
        }
    }
};

void validate(const BrimConfig& cfg) {
    validate(cfg.schedule);
    if (cfg.mode == BrimMode::normalized) {
        if (!(cfg.lambda > 0.0)) throw ContractViolation("lambda must be positive");
    } else {
        const NodeParams& p = cfg.params;
        if (!(p.capacitance > 0.0) || !(p.leak_resistance > 0.0) ||
            !(p.coupling_resistance > 0.0))
            throw ContractViolation("node constants C, R, R_C must be positive");
        validate(p.ziv);
    }
    if (!(cfg.t_end > 0.0)) throw ContractViolation("t_end must be positive");
    if (cfg.integrator == IntegratorKind::fixed_rk4) {
        if (!(cfg.dt > 0.0)) throw ContractViolation("fixed-step dt must be positive");
    } else {
        if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
            throw ContractViolation("adaptive tolerances must be positive");
        if (!(cfg.dt > 0.0)) throw ContractViolation("initial dt must be positive");
    }
    if (cfg.perturb.enabled() && cfg.perturb.nodes_per_event > cfg.coupling.n())
        throw ContractViolation("nodes_per_event exceeds node count");
    if (cfg.perturb.enabled() && cfg.perturb.nodes_per_event == 0)
        throw ContractViolation("nodes_per_event must be >= 1");
    if (cfg.init_values && cfg.init_values->size() != cfg.coupling.n())
        throw ContractViolation("initial state length does not match node count");
    if (!cfg.init_values && !(cfg.init_amplitude > 0.0))
        throw ContractViolation("init_amplitude must be positive");
}

std::vector<std::uint32_t> pick_nodes(std::mt19937_64& rng, std::uint32_t n,
                                      std::uint32_t count) {
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::uint32_t k = 0; k < count; ++k) {
        const auto pick = std::uint32_t(uniform_int(rng, k, n - 1));
        std::swap(idx[k], idx[pick]);
    }
    idx.resize(count);
    return idx;
}

} // namespace

std::vector<double> node_derivative_normalized(const NodeState& state,
                                               const CouplingMatrix& j, double gain,
                                               double lambda) {
    if (state.v.size() != j.n())
        throw ContractViolation("state length does not match coupling size");
    check_finite(state.v, state.t);
    std::vector<double> dvdt(state.v.size());
    for (std::uint32_t i = 0; i < j.n(); ++i) {
        double acc = 0.0;
        for (std::uint32_t k = 0; k < j.n(); ++k) acc += j(i, k) * state.v[k];
        const double v = state.v[i];
        dvdt[i] = gain * acc + lambda * (v - v * v * v);
    }
    return dvdt;
}

std::vector<double> node_derivative_physical(const NodeState& state, const Graph& g,
                                             const NodeParams& params, double gain) {
    if (state.v.size() != g.n())
        throw ContractViolation("state length does not match graph size");
    check_finite(state.v, state.t);
    validate(params.ziv);

    const double inv_rc = 1.0 / params.coupling_resistance;
    std::vector<double> coupling(g.n(), 0.0), leak(g.n(), 0.0);
    for (const auto& e : g.edges()) {
        // I_X contribution: -sign(W) / R_ij = -W / R_C
        coupling[e.i] += -e.w * inv_rc * state.v[e.j];
        coupling[e.j] += -e.w * inv_rc * state.v[e.i];
        leak[e.i] += std::abs(e.w) * inv_rc;
        leak[e.j] += std::abs(e.w) * inv_rc;
    }
    const double inv_2c = 1.0 / (2.0 * params.capacitance);
    const double g_leak = 1.0 / params.leak_resistance;
    std::vector<double> dvdt(g.n());
    for (std::uint32_t i = 0; i < g.n(); ++i) {
        const double i_r = (g_leak + leak[i]) * state.v[i];
        const double i_ziv = ziv_current(2.0 * state.v[i], params.ziv);
        dvdt[i] = inv_2c * (gain * coupling[i] - i_r - i_ziv);
    }
    return dvdt;
}

NodeState perturb(const NodeState& state, const std::vector<std::uint32_t>& indices) {
    NodeState out = state;
    std::vector<bool> seen(state.v.size(), false);
    for (auto i : indices) {
        if (i >= state.v.size())
            throw ContractViolation("perturbation index " + std::to_string(i) +
                                    " out of range");
        if (seen[i])
            throw ContractViolation("duplicate perturbation index " + std::to_string(i));
        seen[i] = true;
        out.v[i] = -out.v[i];
    }
    return out;
}

SpinVector readout(const NodeState& state) {
    SpinVector s(state.v.size());
    for (std::size_t i = 0; i < state.v.size(); ++i) s[i] = state.v[i] < 0.0 ? -1 : +1;
    return s;
}

double lyapunov_value(const NodeState& state, const CouplingMatrix& j, double lambda,
                      double gain) {
    if (state.v.size() != j.n())
        throw ContractViolation("state length does not match coupling size");
    double h = 0.0;
    for (std::uint32_t a = 0; a < j.n(); ++a)
        for (std::uint32_t b = a + 1; b < j.n(); ++b)
            h -= gain * j(a, b) * state.v[a] * state.v[b];
    for (double v : state.v) h += lambda * (0.25 * v * v * v * v - 0.5 * v * v);
    return h;
}

BrimResult integrate(const BrimConfig& cfg) {
    validate(cfg);
    const std::uint32_t n = cfg.coupling.n();
    const CsrMatrix csr = CsrMatrix::from(cfg.coupling);

    Rhs rhs{csr, cfg.schedule, cfg.mode};
    double v_clip;
    if (cfg.mode == BrimMode::normalized) {
        rhs.lambda = cfg.lambda;
        v_clip = 2.0;
    } else {
        rhs.inv_2c = 1.0 / (2.0 * cfg.params.capacitance);
        rhs.leak_conductance = 1.0 / cfg.params.leak_resistance;
        rhs.inv_rc = 1.0 / cfg.params.coupling_resistance;
        rhs.coupling_leak = csr.row_abs_sums();
        for (double& x : rhs.coupling_leak) x *= rhs.inv_rc;
        rhs.ziv = cfg.params.ziv;
        v_clip = cfg.params.ziv.v_stable;
    }
    rhs.tmp.resize(n);

    // initial state
    NodeState state;
    state.t = 0.0;
    if (cfg.init_values) {
        state.v = *cfg.init_values;
    } else {
        std::mt19937_64 init_rng(cfg.rng_seed);
        state.v.resize(n);
        for (auto& v : state.v)
            v = uniform_double(init_rng, -cfg.init_amplitude, cfg.init_amplitude);
    }
    check_finite(state.v, 0.0);
    for (double& v : state.v) v = std::clamp(v, -v_clip, v_clip);

    detail::SpinTracker tracker(csr, threshold(state.v));

    BrimResult result;
    result.best_spins = tracker.spins();
    result.best_energy = tracker.energy();
    result.best_t = 0.0;

    auto note_best = [&]() {
        if (tracker.energy() < result.best_energy) {
            result.best_energy = tracker.energy();
            result.best_spins = tracker.spins();
            result.best_t = state.t;
        }
    };

    const bool tracing = cfg.trace_stride > 0;
    auto record = [&]() {
        if (!tracing) return;
        result.trace.times.push_back(state.t);
        result.trace.states.push_back(state.v);
        result.trace.gains.push_back(anneal_gain(state.t, cfg.schedule));
        result.trace.energies.push_back(tracker.energy());
    };
    record();

    // perturbation event bookkeeping
    std::mt19937_64 perturb_rng(cfg.perturb.rng_seed);
    const bool events = cfg.perturb.enabled();
    std::uint64_t event_index = 1;
    auto next_event_time = [&]() {
        return events ? double(event_index) * cfg.perturb.period
                      : std::numeric_limits<double>::infinity();
    };

    Rk4Stepper rk4(n);
    Dopri5 rk45(n, cfg.rel_tol, cfg.abs_tol);
    double dt_adaptive = cfg.dt;

    auto after_step = [&]() {
        check_finite(state.v, state.t);
        for (double& v : state.v) v = std::clamp(v, -v_clip, v_clip);
        ++result.steps;
        track_voltages(tracker, state.v);
        note_best();
        if (tracing && result.steps % cfg.trace_stride == 0) record();
    };

    double t_cursor = 0.0; // exact accumulated time, mirrored into state.t
    while (t_cursor < cfg.t_end) {
        const double t_target = std::min(cfg.t_end, next_event_time());
        const double snap_eps = 1e-12 * std::max(1.0, t_target);
        // advance to t_target, splitting steps so the boundary lands exactly
        while (t_cursor < t_target) {
            const double remaining = t_target - t_cursor;
            if (remaining <= snap_eps) {
                t_cursor = t_target;
                break;
            }
            if (cfg.integrator == IntegratorKind::fixed_rk4) {
                const double dt = std::min(cfg.dt, remaining);
                rk4.step(rhs, t_cursor, dt, state.v);
                t_cursor += dt;
                if (t_target - t_cursor <= snap_eps) t_cursor = t_target;
                state.t = t_cursor;
                after_step();
            } else {
                const double dt = std::min(dt_adaptive, remaining);
                const auto outcome = rk45.try_step(rhs, t_cursor, dt, state.v);
                if (outcome.accepted) {
                    t_cursor += dt;
                    if (t_target - t_cursor <= snap_eps) t_cursor = t_target;
                    state.t = t_cursor;
                    dt_adaptive = outcome.dt_next;
                    after_step();
                } else {
                    dt_adaptive = outcome.dt_next;
                    if (dt_adaptive < cfg.dt_min)
                        throw SimulationFault(
                            "adaptive step size underflow; switch to the fixed-step "
                            "integrator",
                            t_cursor, 0);
                }
            }
        }
        state.t = t_cursor;
        // an event coinciding with t_end would flip state straight into
        // readout with no recovery steps, so the window is open at the top
        if (events && t_cursor == next_event_time() && t_cursor < cfg.t_end) {
            const auto nodes = pick_nodes(perturb_rng, n, cfg.perturb.nodes_per_event);
            for (auto i : nodes) state.v[i] = -state.v[i];
            ++event_index;
            track_voltages(tracker, state.v);
            note_best();
        }
    }

    state.t = cfg.t_end;
    if (tracing &&
        (result.trace.times.empty() || result.trace.times.back() != state.t)) {
        record();
    }
    result.final_state = std::move(state);
    return result;
}

} // namespace brimsim
