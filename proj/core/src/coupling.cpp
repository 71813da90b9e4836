#include "brimsim/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "brimsim/errors.hpp"

namespace brimsim {

CouplingMatrix::CouplingMatrix(std::uint32_t n)
    : n_(n), symmetric_(true), data_(std::size_t(n) * n, 0.0) {
    if (n == 0) throw ContractViolation("coupling matrix needs at least one node");
}

void CouplingMatrix::set_symmetric(std::uint32_t i, std::uint32_t j, double value) {
    if (i == j) throw ContractViolation("diagonal couplings must stay zero");
    if (i >= n_ || j >= n_) throw ContractViolation("coupling index out of range");
    data_[std::size_t(i) * n_ + j] = value;
    data_[std::size_t(j) * n_ + i] = value;
}

void CouplingMatrix::set(std::uint32_t i, std::uint32_t j, double value) {
    if (i == j) throw ContractViolation("diagonal couplings must stay zero");
    if (i >= n_ || j >= n_) throw ContractViolation("coupling index out of range");
    data_[std::size_t(i) * n_ + j] = value;
    if (data_[std::size_t(j) * n_ + i] != value) symmetric_ = false;
}

double CouplingMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

CouplingMatrix CouplingMatrix::normalized() const {
    const double m = max_abs();
    if (m == 0.0) return *this;
    CouplingMatrix out = *this;
    for (double& v : out.data_) v /= m;
    return out;
}

CsrMatrix CsrMatrix::from(const CouplingMatrix& j) {
    CsrMatrix m;
    m.n = j.n();
    m.row_ptr.assign(m.n + 1, 0);
    for (std::uint32_t r = 0; r < m.n; ++r) {
        for (std::uint32_t c = 0; c < m.n; ++c)
            if (j(r, c) != 0.0) ++m.row_ptr[r + 1];
    }
    for (std::uint32_t r = 0; r < m.n; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
    m.col.resize(m.row_ptr[m.n]);
    m.val.resize(m.row_ptr[m.n]);
    std::size_t k = 0;
    for (std::uint32_t r = 0; r < m.n; ++r) {
        for (std::uint32_t c = 0; c < m.n; ++c) {
            if (j(r, c) != 0.0) {
                m.col[k] = c;
                m.val[k] = j(r, c);
                ++k;
            }
        }
    }
    return m;
}

void CsrMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    y.resize(n);
    for (std::uint32_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (std::uint32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * x[col[k]];
        y[r] = acc;
    }
}

std::vector<double> CsrMatrix::row_abs_sums() const {
    std::vector<double> sums(n, 0.0);
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            sums[r] += std::abs(val[k]);
    return sums;
}

CouplingMatrix quantize_weights(const CouplingMatrix& j, int bits) {
    if (bits < 1 || bits > 16)
        throw ContractViolation("quantization bits must be in [1, 16], got " +
                                std::to_string(bits));
    const double scale = j.max_abs();
    if (scale == 0.0) return j;
    const double levels = double((1 << bits) - 1);
    // nearest of the levels k*scale/levels, k = 1..levels; sign kept exactly.
    // The top level reproduces scale bitwise so requantization is a no-op.
    auto snap = [&](double v) {
        const double k = std::max(1.0, std::round(std::abs(v) / scale * levels));
        const double mag = k == levels ? scale : k * scale / levels;
        return std::copysign(mag, v);
    };
    CouplingMatrix out(j.n());
    for (std::uint32_t r = 0; r < j.n(); ++r) {
        for (std::uint32_t c = j.symmetric() ? r + 1 : 0; c < j.n(); ++c) {
            const double v = j(r, c);
            if (v == 0.0 || r == c) continue;
            if (j.symmetric())
                out.set_symmetric(r, c, snap(v));
            else
                out.set(r, c, snap(v));
        }
    }
    return out;
}

} // namespace brimsim
