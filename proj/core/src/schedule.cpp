#include "brimsim/schedule.hpp"

#include <cmath>

#include "brimsim/errors.hpp"

namespace brimsim {

void validate(const AnnealSchedule& s) {
    if (s.shape == ScheduleShape::constant) {
        if (s.c_max < 0.0 || s.c_max > 1.0)
            throw ContractViolation("constant gain must lie in [0, 1]");
        return;
    }
    if (s.c_min < 0.0 || s.c_min >= 1.0)
        throw ContractViolation("c_min must lie in [0, 1)");
    if (!(s.c_max > s.c_min) || s.c_max > 1.0)
        throw ContractViolation("c_max must lie in (c_min, 1]");
    if (!(s.tau_a > 0.0)) throw ContractViolation("tau_a must be positive");
}

double anneal_gain(double t, const AnnealSchedule& s) {
    if (s.shape == ScheduleShape::constant) return s.c_max;
    return s.c_min + (s.c_max - s.c_min) * (1.0 - std::exp(-t / s.tau_a));
}

} // namespace brimsim
