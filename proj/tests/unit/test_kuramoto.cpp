#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "brimsim/generator.hpp"
#include "brimsim/kuramoto.hpp"
#include "brimsim/rng.hpp"

using namespace brimsim;

using std::numbers::pi;

TEST_CASE("two-oscillator derivatives") {
    CouplingMatrix j(2);
    j.set_symmetric(0, 1, 1.0);
    const auto at_saddle = kuramoto_derivative(PhaseState{{0.0, pi}, 0.0}, j);
    CHECK(at_saddle[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(at_saddle[1] == doctest::Approx(0.0).epsilon(1e-12));

    const auto quarter = kuramoto_derivative(PhaseState{{0.0, pi / 2}, 0.0}, j);
    CHECK(quarter[0] == doctest::Approx(1.0)); // sin(pi/2)
    CHECK(quarter[1] == doctest::Approx(-1.0));

    CouplingMatrix zero(3);
    for (double d : kuramoto_derivative(PhaseState{{0.3, 1.0, -2.0}, 0.0}, zero))
        CHECK(d == 0.0);
}

TEST_CASE("phase translation invariance") {
    const Graph g = gen_random_graph(14, 0.5, WeightModel::reals(-1, 1), 4);
    const CouplingMatrix j = maxcut_to_ising(g);
    std::mt19937_64 rng(9);
    PhaseState s{std::vector<double>(14), 0.0};
    for (auto& p : s.phi) p = uniform_double(rng, -pi, pi);
    PhaseState shifted = s;
    for (auto& p : shifted.phi) p += 0.37;
    const auto d0 = kuramoto_derivative(s, j);
    const auto d1 = kuramoto_derivative(shifted, j);
    for (std::size_t i = 0; i < d0.size(); ++i)
        CHECK(std::abs(d0[i] - d1[i]) < 1e-12);
    CHECK(std::abs(kuramoto_lyapunov(s, j) - kuramoto_lyapunov(shifted, j)) < 1e-12);
}

TEST_CASE("lyapunov values for a pair") {
    CouplingMatrix j(2);
    j.set_symmetric(0, 1, 1.0);
    CHECK(kuramoto_lyapunov(PhaseState{{0.3, 0.3}, 0.0}, j) == doctest::Approx(-1.0));
    CHECK(kuramoto_lyapunov(PhaseState{{0.0, pi}, 0.0}, j) == doctest::Approx(1.0));
}

TEST_CASE("lyapunov equals ising energy at quantized phases") {
    std::mt19937_64 seeds(888);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = gen_random_graph(12, 0.5, WeightModel::ints(-3, 5), seeds());
        const CouplingMatrix j = maxcut_to_ising(g);
        std::mt19937_64 rng(seeds());
        PhaseState s{std::vector<double>(12), 0.0};
        SpinVector spins(12);
        for (std::size_t i = 0; i < 12; ++i) {
            const bool up = rng() & 1;
            // arbitrary even/odd multiples of pi, including negative ones
            const int k = int(uniform_int(rng, -3, 3)) * 2 + (up ? 0 : 1);
            s.phi[i] = double(k) * pi;
            spins[i] = up ? +1 : -1;
        }
        CHECK(kuramoto_lyapunov(s, j) ==
              doctest::Approx(ising_energy(j, spins)).epsilon(1e-9));
        CHECK(phase_readout(s) == spins);
    }
}

TEST_CASE("gradient identity dphi/dt = -dH/dphi") {
    std::mt19937_64 seeds(999);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = std::uint32_t(3 + trial % 10);
        const Graph g = gen_random_graph(n, 0.6, WeightModel::reals(-1, 1), seeds());
        const CouplingMatrix j = maxcut_to_ising(g);
        std::mt19937_64 rng(seeds());
        PhaseState s{std::vector<double>(n), 0.0};
        for (auto& p : s.phi) p = uniform_double(rng, -2.0 * pi, 2.0 * pi);
        const auto d = kuramoto_derivative(s, j);
        const double h = 1e-6;
        for (std::uint32_t i = 0; i < n; ++i) {
            PhaseState up = s, down = s;
            up.phi[i] += h;
            down.phi[i] -= h;
            const double fd =
                (kuramoto_lyapunov(up, j) - kuramoto_lyapunov(down, j)) / (2.0 * h);
            CHECK(std::abs(d[i] + fd) <= 1e-6 * std::max(1.0, std::abs(d[i])));
        }
    }
}

TEST_CASE("phase readout rounds to the nearest multiple of pi") {
    PhaseState s{{0.0, 0.4 * pi, 0.6 * pi, -0.6 * pi, 2.4 * pi, 3.2 * pi, -2.8 * pi}, 0.0};
    CHECK(phase_readout(s) == SpinVector{+1, +1, -1, -1, +1, -1, -1});
}

TEST_CASE("pair locking matches the coupling sign") {
    std::mt19937_64 seeds(2222);
    for (int trial = 0; trial < 6; ++trial) {
        CouplingMatrix ferro(2);
        ferro.set_symmetric(0, 1, 1.0);
        OimConfig cfg(ferro);
        cfg.t_end = 60.0;
        cfg.dt = 0.01;
        cfg.rng_seed = seeds();
        const OimResult locked = oim_solve(cfg);
        CHECK(locked.spins[0] == locked.spins[1]);
        // phases really locked, not merely rounded together
        const double diff =
            std::remainder(locked.final_state.phi[0] - locked.final_state.phi[1], 2.0 * pi);
        CHECK(std::abs(diff) < 1e-3);

        CouplingMatrix anti(2);
        anti.set_symmetric(0, 1, -1.0);
        OimConfig cfg2(anti);
        cfg2.t_end = 60.0;
        cfg2.dt = 0.01;
        cfg2.rng_seed = cfg.rng_seed;
        const OimResult opposed = oim_solve(cfg2);
        CHECK(opposed.spins[0] == -opposed.spins[1]);
    }
}

TEST_CASE("descent of the oscillator energy along trajectories") {
    std::mt19937_64 seeds(4321);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = gen_random_graph(30, 0.3, WeightModel::pm1(), seeds());
        const CouplingMatrix j = maxcut_to_ising(g).normalized();
        OimConfig cfg(j);
        cfg.t_end = 30.0;
        cfg.dt = 0.01;
        cfg.rng_seed = seeds();
        cfg.trace_stride = 1;
        const OimResult r = oim_solve(cfg);
        double prev = kuramoto_lyapunov(PhaseState{r.trace.states.front(), 0.0}, j);
        for (std::size_t row = 1; row < r.trace.states.size(); ++row) {
            const double h = kuramoto_lyapunov(PhaseState{r.trace.states[row], 0.0}, j);
            CHECK(h <= prev + 1e-8 * (1.0 + std::abs(prev)));
            prev = h;
        }
    }
}
