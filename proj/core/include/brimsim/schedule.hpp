#pragma once

namespace brimsim {

enum class ScheduleShape {
    exponential_rise, // c(t) = c_min + (c_max - c_min) * (1 - exp(-t / tau_a))
    constant,         // c(t) = c_max
};

/// Time profile of the coupling gain. The exponential rise models a
/// discharging control capacitor: the gain starts near zero (nodes almost
/// disconnected) and saturates at c_max.
struct AnnealSchedule {
    double c_min = 0.0;
    double c_max = 0.9;
    double tau_a = 10.0;
    ScheduleShape shape = ScheduleShape::exponential_rise;
};

/// Gain at model time t >= 0. Monotone nondecreasing in t.
double anneal_gain(double t, const AnnealSchedule& s);

/// Throws ContractViolation unless 0 <= c_min < c_max <= 1 (exponential)
/// or 0 <= c_max <= 1 (constant), and tau_a > 0.
void validate(const AnnealSchedule& s);

} // namespace brimsim
