#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace brimsim {

// Single-step integrator kernels shared by the machine models. Derivative
// callables have the signature f(t, y, dydt). All loops run in a fixed
// order, so fixed-step trajectories are bitwise reproducible.

class Rk4Stepper {
public:
    explicit Rk4Stepper(std::size_t dim) : k1_(dim), k2_(dim), k3_(dim), k4_(dim), tmp_(dim) {}

    template <class Deriv>
    void step(Deriv&& f, double t, double dt, std::vector<double>& y) {
        const std::size_t n = y.size();
        f(t, y, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k1_[i];
        f(t + 0.5 * dt, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k2_[i];
        f(t + 0.5 * dt, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * k3_[i];
        f(t + dt, tmp_, k4_);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

private:
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

/// Dormand-Prince 5(4) embedded pair with standard step-size control.
class Dopri5 {
public:
    Dopri5(std::size_t dim, double rel_tol, double abs_tol)
        : rel_tol_(rel_tol), abs_tol_(abs_tol), y_new_(dim), err_(dim), tmp_(dim) {
        for (auto& k : k_) k.resize(dim);
    }

    struct Outcome {
        bool accepted = false;
        double dt_next = 0.0;
    };

    /// Attempts one step of size dt from (t, y). On acceptance y is
    /// advanced in place. dt_next carries the controller's suggestion for
    /// the next attempt either way.
    template <class Deriv>
    Outcome try_step(Deriv&& f, double t, double dt, std::vector<double>& y) {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        const std::size_t n = y.size();
        f(t, y, k_[0]);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * a21 * k_[0][i];
        f(t + dt / 5.0, tmp_, k_[1]);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + dt * (a31 * k_[0][i] + a32 * k_[1][i]);
        f(t + dt * 3.0 / 10.0, tmp_, k_[2]);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + dt * (a41 * k_[0][i] + a42 * k_[1][i] + a43 * k_[2][i]);
        f(t + dt * 4.0 / 5.0, tmp_, k_[3]);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + dt * (a51 * k_[0][i] + a52 * k_[1][i] + a53 * k_[2][i] +
                                   a54 * k_[3][i]);
        f(t + dt * 8.0 / 9.0, tmp_, k_[4]);
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + dt * (a61 * k_[0][i] + a62 * k_[1][i] + a63 * k_[2][i] +
                                   a64 * k_[3][i] + a65 * k_[4][i]);
        f(t + dt, tmp_, k_[5]);
        for (std::size_t i = 0; i < n; ++i)
            y_new_[i] = y[i] + dt * (b1 * k_[0][i] + b3 * k_[2][i] + b4 * k_[3][i] +
                                     b5 * k_[4][i] + b6 * k_[5][i]);
        f(t + dt, y_new_, k_[6]);

        double sumsq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = dt * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] +
                                   e5 * k_[4][i] + e6 * k_[5][i] + e7 * k_[6][i]);
            const double scale =
                abs_tol_ + rel_tol_ * std::max(std::abs(y[i]), std::abs(y_new_[i]));
            sumsq += (e / scale) * (e / scale);
        }
        const double err = std::sqrt(sumsq / double(n));

        Outcome out;
        const double factor =
            err <= 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        out.dt_next = dt * factor;
        out.accepted = err <= 1.0;
        if (out.accepted) y.swap(y_new_);
        return out;
    }

private:
    double rel_tol_, abs_tol_;
    std::vector<double> k_[7];
    std::vector<double> y_new_, err_, tmp_;
};

} // namespace brimsim
