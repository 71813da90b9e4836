#include <doctest.h>

#include <cmath>

#include "brimsim/errors.hpp"
#include "brimsim/schedule.hpp"
#include "brimsim/ziv.hpp"

using namespace brimsim;

TEST_CASE("ziv current zeros and signs") {
    for (ZivShape shape : {ZivShape::cubic, ZivShape::piecewise_linear}) {
        ZivParams p{1.5, 2.0, shape};
        CHECK(ziv_current(0.0, p) == 0.0);
        CHECK(ziv_current(+p.v_stable, p) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(ziv_current(-p.v_stable, p) == doctest::Approx(0.0).epsilon(1e-15));
        // odd symmetry and the Z-shaped sign pattern
        for (double v : {0.1, 0.4, 0.9, 1.2, 1.49, 1.8, 3.0}) {
            CHECK(ziv_current(-v, p) == -ziv_current(v, p));
            if (v < p.v_stable)
                CHECK(ziv_current(v, p) < 0.0);
            else if (v > p.v_stable)
                CHECK(ziv_current(v, p) > 0.0);
        }
        // slopes: negative through the origin, positive at the rails
        const double h = 1e-6;
        CHECK((ziv_current(h, p) - ziv_current(-h, p)) / (2 * h) < 0.0);
        CHECK((ziv_current(p.v_stable + h, p) - ziv_current(p.v_stable - h, p)) / (2 * h) >
              0.0);
    }
}

TEST_CASE("cubic evaluates the declared form") {
    ZivParams p{1.0, 1.0, ZivShape::cubic};
    CHECK(ziv_current(0.5, p) == doctest::Approx(-0.375).epsilon(1e-15));
}

TEST_CASE("ziv parameter validation") {
    CHECK_THROWS_AS(validate(ZivParams{0.0, 1.0, ZivShape::cubic}), ContractViolation);
    CHECK_THROWS_AS(validate(ZivParams{1.0, -1.0, ZivShape::cubic}), ContractViolation);
}

TEST_CASE("anneal gain follows the closed form") {
    AnnealSchedule s{0.0, 1.0, 1.0, ScheduleShape::exponential_rise};
    CHECK(anneal_gain(0.0, s) == 0.0);
    CHECK(anneal_gain(1.0, s) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(anneal_gain(1e9, s) == doctest::Approx(1.0));

    AnnealSchedule lifted{0.2, 0.9, 3.0, ScheduleShape::exponential_rise};
    CHECK(anneal_gain(0.0, lifted) == doctest::Approx(0.2));
    double prev = -1.0;
    for (double t = 0.0; t < 30.0; t += 0.37) {
        const double c = anneal_gain(t, lifted);
        CHECK(c >= prev); // monotone nondecreasing
        CHECK(c <= 0.9 + 1e-12);
        prev = c;
    }

    AnnealSchedule flat{0.0, 0.75, 1.0, ScheduleShape::constant};
    CHECK(anneal_gain(0.0, flat) == 0.75);
    CHECK(anneal_gain(123.0, flat) == 0.75);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(validate(AnnealSchedule{0.5, 0.4, 1.0, ScheduleShape::exponential_rise}),
                    ContractViolation);
    CHECK_THROWS_AS(validate(AnnealSchedule{0.0, 1.1, 1.0, ScheduleShape::exponential_rise}),
                    ContractViolation);
    CHECK_THROWS_AS(validate(AnnealSchedule{0.0, 1.0, 0.0, ScheduleShape::exponential_rise}),
                    ContractViolation);
    CHECK_NOTHROW(validate(AnnealSchedule{0.0, 1.0, 2.0, ScheduleShape::exponential_rise}));
}
