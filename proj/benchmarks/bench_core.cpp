#include <benchmark/benchmark.h>

#include <random>

#include "brimsim/brim.hpp"
#include "brimsim/brute_force.hpp"
#include "brimsim/coupling.hpp"
#include "brimsim/generator.hpp"
#include "brimsim/sa.hpp"

using namespace brimsim;

namespace {

Graph bench_graph(std::uint32_t n, double density) {
    return gen_random_graph(n, density, WeightModel::pm1(), 12345);
}

void BM_csr_multiply(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const CsrMatrix csr = CsrMatrix::from(maxcut_to_ising(bench_graph(n, 0.06)));
    std::vector<double> x(n, 0.5), y(n);
    std::mt19937_64 rng(1);
    for (auto& v : x) v = double(rng() % 100) / 50.0 - 1.0;
    for (auto _ : state) {
        csr.multiply(x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * csr.val.size());
}
BENCHMARK(BM_csr_multiply)->Arg(200)->Arg(800)->Arg(2000);

void BM_brim_step(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const CouplingMatrix j = maxcut_to_ising(bench_graph(n, 0.06)).normalized();
    BrimConfig cfg(j);
    cfg.t_end = 1.0;
    cfg.dt = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(cfg).steps);
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * 100);
}
BENCHMARK(BM_brim_step)->Arg(200)->Arg(800);

void BM_sa_sweep(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const Graph g = bench_graph(n, 0.06);
    const SaSchedule sched = default_sa_schedule(g, 100);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sa_solve(g, sched, seed++).best_cut);
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * 100 * n);
}
BENCHMARK(BM_sa_sweep)->Arg(200)->Arg(800);

void BM_brute_force(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const Graph g = bench_graph(n, 0.4);
    BruteForceOptions opts;
    opts.threads = unsigned(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_maxcut(g, opts).best_cut);
    }
}
BENCHMARK(BM_brute_force)->Args({20, 1})->Args({20, 4})->Args({24, 4});

} // namespace

BENCHMARK_MAIN();
