#pragma once

namespace brimsim {

/// Functional form of the bistable element's IV curve.
enum class ZivShape {
    cubic,            // g(v) = g_peak * (v^3 / v_stable^2 - v)
    piecewise_linear, // "Z" of two slopes, trough at v_stable/2
};

/// Parameters of the nonlinear element that makes a node bistable. The
/// current curve i = g(v) has exactly three zeros: an unstable one at the
/// origin (negative slope) and stable ones at +/-v_stable (positive slope).
struct ZivParams {
    double v_stable = 1.0;
    double g_peak = 1.0;
    ZivShape shape = ZivShape::cubic;
};

/// Evaluates the element current. Odd in v; sign(g(v)) = -sign(v) inside
/// the bistable region 0 < |v| < v_stable and +sign(v) beyond it.
double ziv_current(double v, const ZivParams& p);

/// Throws ContractViolation unless v_stable > 0 and g_peak > 0.
void validate(const ZivParams& p);

} // namespace brimsim
