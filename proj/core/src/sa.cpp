#include "brimsim/sa.hpp"

#include <cmath>

#include "brimsim/errors.hpp"
#include "brimsim/rng.hpp"

namespace brimsim {

SaSchedule default_sa_schedule(const Graph& g, std::uint64_t sweeps) {
    SaSchedule s;
    s.sweeps = sweeps;
    const double mean_degree = 2.0 * double(g.edge_count()) / double(g.n());
    s.t0 = std::max(1e-6, g.max_abs_weight() * std::max(1.0, mean_degree));
    s.t_end = 1e-3 * s.t0;
    return s;
}

double sa_temperature(const SaSchedule& s, std::uint64_t k) {
    if (s.sweeps <= 1) return s.t0;
    const double frac = double(k) / double(s.sweeps);
    if (s.decay == TempDecay::geometric)
        return s.t0 * std::pow(s.t_end / s.t0, frac);
    return s.t0 + (s.t_end - s.t0) * frac;
}

bool metropolis_accept(double delta_cut, double temperature, std::mt19937_64& rng) {
    if (delta_cut >= 0.0) return true;
    return unit_double(rng) < std::exp(delta_cut / temperature);
}

namespace {

void validate(const SaSchedule& s) {
    if (s.sweeps == 0) throw ContractViolation("schedule needs at least one sweep");
    if (!(s.t0 > 0.0) || !(s.t_end > 0.0) || !(s.t_end < s.t0))
        throw ContractViolation("temperatures must satisfy 0 < t_end < t0");
}

} // namespace

SaResult sa_solve(const Graph& g, const SaSchedule& sched, std::uint64_t seed) {
    validate(sched);
    const std::uint32_t n = g.n();
    std::mt19937_64 rng(seed);

    // adjacency for O(degree) flip updates
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.i].push_back({e.j, e.w});
        adj[e.j].push_back({e.i, e.w});
    }

    SpinVector spins(n);
    for (auto& s : spins) s = rademacher(rng);

    // field_i = sum_j W_ij s_j; flipping i changes the cut by s_i * field_i
    std::vector<double> field(n, 0.0);
    for (const auto& e : g.edges()) {
        field[e.i] += e.w * spins[e.j];
        field[e.j] += e.w * spins[e.i];
    }
    double cut = cut_value(g, spins);
    const double total = g.total_weight();

    SaResult result;
    result.spins = spins;
    result.best_cut = cut;
    result.energy_trace.reserve(sched.sweeps + 1);
    result.energy_trace.push_back(total - 2.0 * cut);

    for (std::uint64_t k = 0; k < sched.sweeps; ++k) {
        const double temperature = sa_temperature(sched, k);
        for (std::uint32_t p = 0; p < n; ++p) {
            const auto i = std::uint32_t(uniform_int(rng, 0, std::int64_t(n) - 1));
            const double delta = spins[i] * field[i];
            if (!metropolis_accept(delta, temperature, rng)) continue;
            const int old = spins[i];
            spins[i] = -old;
            cut += delta;
            for (const auto& [u, w] : adj[i]) field[u] -= 2.0 * w * old;
            if (cut > result.best_cut) {
                result.best_cut = cut;
                result.spins = spins;
            }
        }
        result.energy_trace.push_back(total - 2.0 * cut);
    }
    return result;
}

} // namespace brimsim
