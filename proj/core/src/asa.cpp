#include "brimsim/asa.hpp"

#include <utility>
#include <vector>

#include "brimsim/errors.hpp"
#include "brimsim/rng.hpp"

namespace brimsim {

AsaResult asa_solve(const Graph& g, const AsaParams& params, std::uint64_t seed) {
    if (params.cycles < 1) throw ContractViolation("need at least one cycle");
    if (params.p0 < 0.0 || params.p0 > 1.0)
        throw ContractViolation("flip probability p0 must lie in [0, 1]");

    const std::uint32_t n = g.n();
    std::mt19937_64 rng(seed);

    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.i].push_back({e.j, e.w});
        adj[e.j].push_back({e.i, e.w});
    }

    SpinVector spins(n);
    for (auto& s : spins) s = rademacher(rng);
    std::vector<double> field(n, 0.0);
    for (const auto& e : g.edges()) {
        field[e.i] += e.w * spins[e.j];
        field[e.j] += e.w * spins[e.i];
    }
    double cut = cut_value(g, spins);

    AsaResult result{spins, cut};
    auto flip = [&](std::uint32_t i) {
        cut += spins[i] * field[i];
        const int old = spins[i];
        spins[i] = -old;
        for (const auto& [u, w] : adj[i]) field[u] -= 2.0 * w * old;
    };

    for (std::uint64_t k = 0; k < params.cycles; ++k) {
        // greedy pass: each node takes the cut-raising spin given its
        // neighbors' current states; ties keep the current spin
        for (std::uint32_t i = 0; i < n; ++i) {
            if (spins[i] * field[i] > 0.0) flip(i);
        }
        if (cut > result.best_cut) {
            result.best_cut = cut;
            result.spins = spins;
        }
        // decaying random flips keep later cycles greedier
        const double p = params.cycles > 1
                             ? params.p0 * double(params.cycles - 1 - k) /
                                   double(params.cycles - 1)
                             : 0.0;
        if (p > 0.0) {
            for (std::uint32_t i = 0; i < n; ++i)
                if (unit_double(rng) < p) flip(i);
        }
    }
    return result;
}

} // namespace brimsim
