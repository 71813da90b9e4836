#include <doctest.h>

#include <cmath>
#include <random>

#include "brimsim/brute_force.hpp"
#include "brimsim/coupling.hpp"
#include "brimsim/errors.hpp"
#include "brimsim/generator.hpp"
#include "brimsim/graph.hpp"
#include "brimsim/gset.hpp"
#include "brimsim/rng.hpp"

using namespace brimsim;

namespace {

SpinVector spins_from_mask(std::uint32_t n, std::uint64_t mask) {
    SpinVector s(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u ? -1 : +1;
    return s;
}

} // namespace

TEST_CASE("graph canonicalizes edges") {
    Graph g(4, {{2, 0, 1.0}, {1, 3, 2.0}, {0, 2, 0.5}});
    CHECK(g.n() == 4);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 2, 1.5}); // duplicates merge by summation
    CHECK(g.edges()[1] == Edge{1, 3, 2.0});
}

TEST_CASE("graph rejects bad input") {
    CHECK_THROWS_AS(Graph(0, {}), ContractViolation);
    CHECK_THROWS_AS(Graph(3, {{1, 1, 1.0}}), ContractViolation);
    CHECK_THROWS_AS(Graph(3, {{0, 3, 1.0}}), ContractViolation);
}

TEST_CASE("cut_value on a triangle") {
    Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    CHECK(cut_value(g, {+1, +1, -1}) == 2.0);
    CHECK(cut_value(g, {+1, +1, +1}) == 0.0);
    CHECK_THROWS_AS(cut_value(g, {+1, +1}), ContractViolation);
    CHECK_THROWS_AS(cut_value(g, {+1, +1, 0}), ContractViolation);
}

TEST_CASE("ising_energy on a single pair") {
    CouplingMatrix j(2);
    j.set_symmetric(0, 1, 1.0);
    CHECK(ising_energy(j, {+1, +1}) == -1.0);
    CHECK(ising_energy(j, {+1, -1}) == +1.0);
}

TEST_CASE("maxcut_to_ising flips signs") {
    Graph g(2, {{0, 1, 2.0}});
    const CouplingMatrix j = maxcut_to_ising(g);
    CHECK(j(0, 1) == -2.0);
    CHECK(j(1, 0) == -2.0);
    CHECK(j(0, 0) == 0.0);
    CHECK(j.symmetric());

    const CouplingMatrix empty = maxcut_to_ising(Graph(3));
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) CHECK(empty(a, b) == 0.0);
}

TEST_CASE("cut/energy identity over exhaustive tiny graphs") {
    // H(s) = total_weight - 2 * cut(s) with J = -W, checked over every
    // assignment of a batch of random graphs.
    std::mt19937_64 seeds(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = std::uint32_t(4 + trial % 6);
        const Graph g = gen_random_graph(n, 0.6, WeightModel::ints(-5, 9), seeds());
        const CouplingMatrix j = maxcut_to_ising(g);
        const double total = g.total_weight();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const SpinVector s = spins_from_mask(n, mask);
            CHECK(ising_energy(j, s) == total - 2.0 * cut_value(g, s));
        }
    }
}

TEST_CASE("spin flip symmetry") {
    std::mt19937_64 seeds(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = gen_random_graph(12, 0.4, WeightModel::reals(-2.0, 2.0), seeds());
        const CouplingMatrix j = maxcut_to_ising(g);
        std::mt19937_64 rng(seeds());
        SpinVector s(12), neg(12);
        for (std::size_t i = 0; i < 12; ++i) {
            s[i] = rademacher(rng);
            neg[i] = -s[i];
        }
        CHECK(cut_value(g, s) == cut_value(g, neg));
        CHECK(ising_energy(j, s) == ising_energy(j, neg));
    }
}

TEST_CASE("six-vertex showcase instance") {
    const Graph g = load_gset_file(std::string(BRIMSIM_DATA_DIR) + "/star6.gset");
    REQUIRE(g.n() == 6);

    // the intended split: {0,1,2,4} vs {3,5}
    const SpinVector split{+1, +1, +1, -1, +1, -1};
    CHECK(cut_value(g, split) == doctest::Approx(18.2).epsilon(1e-12));

    const BruteForceResult best = brute_force_maxcut(g);
    CHECK(best.best_cut == doctest::Approx(18.2).epsilon(1e-12));
    const bool same = best.spins == split;
    SpinVector flipped(split.size());
    for (std::size_t i = 0; i < split.size(); ++i) flipped[i] = -split[i];
    const bool mirrored = best.spins == flipped;
    CHECK((same || mirrored));

    // the mapped coupling's ground state reproduces the same cut
    const CouplingMatrix j = maxcut_to_ising(g);
    CHECK(ising_energy(j, best.spins) ==
          doctest::Approx(g.total_weight() - 2.0 * 18.2).epsilon(1e-12));
}
