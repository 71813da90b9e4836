#include <doctest.h>

#include <sstream>

#include "brimsim/config.hpp"
#include "brimsim/errors.hpp"

using namespace brimsim;

TEST_CASE("defaults round-trip through the flat format") {
    const SolverConfig cfg;
    std::istringstream in(cfg.serialize());
    const SolverConfig back = load_config(in);
    CHECK(back.serialize() == cfg.serialize());
}

TEST_CASE("edited values round-trip") {
    SolverConfig cfg;
    cfg.solver = SolverKind::oim;
    cfg.mode = BrimMode::physical;
    cfg.lambda = 2.5;
    cfg.schedule.shape = ScheduleShape::constant;
    cfg.schedule.c_max = 0.8;
    cfg.perturb_period = 7.5;
    cfg.perturb_nodes = 3;
    cfg.integrator = IntegratorKind::adaptive_rk45;
    cfg.quant_bits = 4;
    cfg.sa_decay = TempDecay::linear;
    cfg.params.ziv.shape = ZivShape::piecewise_linear;
    cfg.seed = 99;
    std::istringstream in(cfg.serialize());
    const SolverConfig back = load_config(in);
    CHECK(back.serialize() == cfg.serialize());
    CHECK(back.solver == SolverKind::oim);
    CHECK(back.perturb_nodes == 3);
    CHECK(back.quant_bits == 4);
}

TEST_CASE("comments, blanks, and spacing are tolerated") {
    std::istringstream in("# a comment\n\n  t_end =  12.5  # trailing\n\tdt=0.5\n");
    const SolverConfig cfg = load_config(in);
    CHECK(cfg.t_end == 12.5);
    CHECK(cfg.dt == 0.5);
}

TEST_CASE("unknown keys are errors with line numbers") {
    std::istringstream in("t_end = 1\nnot_a_key = 3\n");
    CHECK_THROWS_WITH_AS(load_config(in), "line 2: unknown configuration key 'not_a_key'",
                         ParseError);
}

TEST_CASE("malformed values are rejected") {
    std::istringstream bad_num("t_end = fast\n");
    CHECK_THROWS_AS(load_config(bad_num), ParseError);
    std::istringstream bad_line("t_end\n");
    CHECK_THROWS_AS(load_config(bad_line), ParseError);
    std::istringstream bad_enum("integrator = euler\n");
    CHECK_THROWS_AS(load_config(bad_enum), ParseError);
}

TEST_CASE("infinity spelling works for the perturbation period") {
    std::istringstream in("perturb_period = inf\n");
    const SolverConfig cfg = load_config(in);
    CHECK(std::isinf(cfg.perturb_period));
}

TEST_CASE("budget routes to the solver-specific knob") {
    SolverConfig cfg;
    cfg.solver = SolverKind::brim;
    cfg.set_budget(12.5);
    CHECK(cfg.t_end == 12.5);
    CHECK(cfg.budget() == 12.5);
    cfg.solver = SolverKind::sa;
    cfg.set_budget(4000);
    CHECK(cfg.sa_sweeps == 4000);
    cfg.solver = SolverKind::asa;
    cfg.set_budget(321);
    CHECK(cfg.asa_cycles == 321);
    CHECK_THROWS_AS(cfg.set_budget(-1.0), ConfigError);
}
