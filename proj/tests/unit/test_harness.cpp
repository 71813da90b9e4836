#include <doctest.h>

#include <cmath>
#include <sstream>

#include "brimsim/brute_force.hpp"
#include "brimsim/errors.hpp"
#include "brimsim/generator.hpp"
#include "brimsim/harness.hpp"

using namespace brimsim;

namespace {

SolverConfig quick_brim() {
    SolverConfig cfg;
    cfg.solver = SolverKind::brim;
    cfg.t_end = 20.0;
    cfg.dt = 0.02;
    cfg.schedule.tau_a = 4.0;
    return cfg;
}

} // namespace

TEST_CASE("single-run batch returns that run as best") {
    const Graph g = gen_random_graph(16, 0.5, WeightModel::pm1(), 6);
    const BatchResult batch = run_batch(g, quick_brim(), "tiny", 1);
    CHECK(batch.reports.size() == 1);
    CHECK(batch.best_index == 0);
}

TEST_CASE("reports re-validate cut and energy against the instance") {
    const Graph g = gen_random_graph(20, 0.4, WeightModel::ints(-4, 7), 8);
    for (SolverKind kind : {SolverKind::brim, SolverKind::sa, SolverKind::asa,
                            SolverKind::oim}) {
        SolverConfig cfg = quick_brim();
        cfg.solver = kind;
        cfg.sa_sweeps = 200;
        cfg.asa_cycles = 50;
        const BatchResult batch = run_batch(g, cfg, "check", 3);
        for (const auto& r : batch.reports) {
            CHECK(r.cut == cut_value(g, r.spins));
            CHECK(r.energy == doctest::Approx(g.total_weight() - 2.0 * r.cut)
                                  .epsilon(1e-12));
            CHECK(r.solver == to_string(kind));
        }
    }
}

TEST_CASE("worker count never changes the reports") {
    const Graph g = gen_random_graph(24, 0.4, WeightModel::pm1(), 9);
    SolverConfig cfg = quick_brim();
    cfg.seed = 31;
    const BatchResult serial = run_batch(g, cfg, "par", 8, 1);
    const BatchResult parallel = run_batch(g, cfg, "par", 8, 8);
    CHECK(batch_csv(serial.reports) == batch_csv(parallel.reports));
    CHECK(serial.best_index == parallel.best_index);
}

TEST_CASE("best-of-k grows monotonically with k") {
    const Graph g = gen_random_graph(30, 0.3, WeightModel::ints(-3, 8), 10);
    SolverConfig cfg = quick_brim();
    cfg.seed = 5;
    const BatchResult small = run_batch(g, cfg, "mono", 4);
    const BatchResult large = run_batch(g, cfg, "mono", 12);
    CHECK(large.best().cut >= small.best().cut);
    // the first 4 runs are byte-identical between the two batches
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(to_csv_row(large.reports[k]) == to_csv_row(small.reports[k]));
}

TEST_CASE("ties go to the lowest seed") {
    // a single positive edge: every solver run lands on cut 1
    const Graph g(2, {{0, 1, 1.0}});
    SolverConfig cfg = quick_brim();
    const BatchResult batch = run_batch(g, cfg, "tie", 6);
    CHECK(batch.best_index == 0);
}

TEST_CASE("sweep on a single edge floors immediately") {
    const Graph g(2, {{0, 1, 1.0}});
    SolverConfig cfg = quick_brim();
    const auto curve = sweep_anneal_time(g, cfg, "edge", {5.0, 20.0, 60.0}, 4);
    REQUIRE(curve.size() == 3);
    for (const auto& p : curve) {
        CHECK(p.best_energy == -1.0);
        CHECK(p.median_energy == -1.0);
        CHECK(p.runs == 4);
    }
    // degenerate one-point sweep
    const auto single = sweep_anneal_time(g, cfg, "edge", {7.0}, 2);
    CHECK(single.size() == 1);
    // budgets must increase
    CHECK_THROWS_AS(sweep_anneal_time(g, cfg, "edge", {5.0, 5.0}, 2), ContractViolation);
}

TEST_CASE("distance table against an exact oracle registry") {
    BestKnownRegistry registry;
    std::vector<std::pair<std::string, Graph>> instances;
    for (int k = 0; k < 3; ++k) {
        const std::string id = "tiny" + std::to_string(k);
        const Graph g = gen_random_graph(14, 0.5, WeightModel::ints(-2, 5), 40 + k);
        registry.add(id, brute_force_maxcut(g).best_cut, "oracle");
        instances.emplace_back(id, g);
    }
    SolverConfig sa;
    sa.solver = SolverKind::sa;
    sa.sa_sweeps = 2000;
    const DistanceTable table = distance_table(instances, {sa}, 8, registry);
    for (const auto& row : table.distances)
        for (double d : row) CHECK(d == 0.0); // SA best-of-8 finds tiny optima
    CHECK(table.registry_update_events.empty());

    const std::string csv = distance_csv(table);
    CHECK(csv.rfind("instance,best,sa\n", 0) == 0);
}

TEST_CASE("missing registry entries are configuration errors") {
    const Graph g = gen_random_graph(10, 0.5, WeightModel::pm1(), 3);
    BestKnownRegistry registry;
    SolverConfig cfg = quick_brim();
    CHECK_THROWS_AS(
        distance_table({{std::string("unknown"), g}}, {cfg}, 1, registry),
        ConfigError);
}

TEST_CASE("beating the registry is flagged, not rejected") {
    const Graph g(2, {{0, 1, 1.0}});
    BestKnownRegistry registry;
    registry.add("edge", 0.5, "stale"); // any solver beats this
    SolverConfig cfg = quick_brim();
    const DistanceTable table = distance_table({{std::string("edge"), g}}, {cfg}, 1,
                                               registry);
    CHECK(table.distances[0][0] == -0.5);
    REQUIRE(table.registry_update_events.size() == 1);
}

TEST_CASE("registry id normalization") {
    BestKnownRegistry reg;
    reg.add("G01", 11624, "x");
    CHECK(reg.lookup("g1").has_value());
    CHECK(reg.lookup("G1")->value == 11624);
    CHECK(reg.lookup("G001").has_value());
    CHECK(!reg.lookup("G2").has_value());
    std::istringstream text("# comment\nG22 13359 a,b\n\ng39 2408\n");
    const BestKnownRegistry loaded = BestKnownRegistry::load(text);
    CHECK(loaded.lookup("G22")->value == 13359);
    CHECK(loaded.lookup("G39")->value == 2408);
    CHECK(loaded.lookup("G22")->source == "a,b");
}

TEST_CASE("identical periods give identical ab arms") {
    const Graph g = gen_random_graph(18, 0.4, WeightModel::pm1(), 12);
    SolverConfig cfg = quick_brim();
    cfg.seed = 9;
    const double inf = std::numeric_limits<double>::infinity();
    const auto series = perturbation_ab_test(g, cfg, {inf}, 5);
    REQUIRE(series.size() == 1);
    for (const auto& pair : series[0].pairs)
        CHECK(pair.energy_with == pair.energy_without);
}

TEST_CASE("ab pairs share initial conditions across arms") {
    const Graph g = gen_random_graph(24, 0.3, WeightModel::ints(-2, 6), 13);
    SolverConfig cfg = quick_brim();
    cfg.seed = 40;
    const auto series = perturbation_ab_test(g, cfg, {4.0}, 6, 3);
    REQUIRE(series.size() == 1);
    REQUIRE(series[0].pairs.size() == 6);
    // best-seen can only improve on the shared trajectory prefix when the
    // perturbed arm diverges, and seeds line up pairwise
    for (std::size_t k = 0; k < 6; ++k) CHECK(series[0].pairs[k].seed == 40 + k);
    // deterministic regardless of workers
    const auto again = perturbation_ab_test(g, cfg, {4.0}, 6, 1);
    CHECK(ab_csv(again) == ab_csv(series));
}

TEST_CASE("csv schemas are stable") {
    RunReport r;
    r.solver = "brim";
    r.instance = "g1";
    r.seed = 7;
    r.budget = 50;
    r.wall_ms = 123.456;
    r.cut = 11624;
    r.energy = -9000;
    CHECK(std::string(run_report_csv_header) ==
          "solver,instance,seed,budget,wall_ms,cut,energy,distance");
    CHECK(to_csv_row(r) == "brim,g1,7,50,,11624,-9000,");
    r.distance = 0.0;
    CHECK(to_csv_row(r) == "brim,g1,7,50,,11624,-9000,0");
    CHECK(to_csv_row(r, true) == "brim,g1,7,50,123.456,11624,-9000,0");
}
