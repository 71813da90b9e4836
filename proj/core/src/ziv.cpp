#include "brimsim/ziv.hpp"

#include <cmath>

#include "brimsim/errors.hpp"

namespace brimsim {

void validate(const ZivParams& p) {
    if (!(p.v_stable > 0.0) || !(p.g_peak > 0.0))
        throw ContractViolation("ZIV element needs v_stable > 0 and g_peak > 0");
}

double ziv_current(double v, const ZivParams& p) {
    switch (p.shape) {
    case ZivShape::cubic:
        return p.g_peak * (v * v * v / (p.v_stable * p.v_stable) - v);
    case ZivShape::piecewise_linear: {
        // falling segment to the trough at v_stable/2, rising through the
        // zero at v_stable and beyond
        const double a = std::abs(v);
        const double half = 0.5 * p.v_stable;
        const double mag = a <= half ? -p.g_peak * (a / half)
                                     : p.g_peak * (a - p.v_stable) / half;
        return v < 0.0 ? -mag : mag;
    }
    }
    return 0.0;
}

} // namespace brimsim
