#pragma once

#include <cstdint>
#include <vector>

namespace brimsim {

/// Dense coupling matrix J. The diagonal is identically zero. Max-Cut
/// instances always produce symmetric J, but asymmetric matrices are
/// representable (directed coupling); the symmetric flag records which
/// case this is and is kept accurate by the mutators.
class CouplingMatrix {
public:
    explicit CouplingMatrix(std::uint32_t n);

    std::uint32_t n() const noexcept { return n_; }
    bool symmetric() const noexcept { return symmetric_; }

    double operator()(std::uint32_t i, std::uint32_t j) const {
        return data_[std::size_t(i) * n_ + j];
    }

    /// Sets J_ij = J_ji = value. Throws ContractViolation for i == j.
    void set_symmetric(std::uint32_t i, std::uint32_t j, double value);

    /// Sets a single directed entry; clears the symmetric flag unless the
    /// mirror entry already equals value.
    void set(std::uint32_t i, std::uint32_t j, double value);

    double max_abs() const noexcept;

    /// Returns a copy rescaled so max|J| == 1 (no-op on an all-zero matrix).
    CouplingMatrix normalized() const;

    friend bool operator==(const CouplingMatrix&, const CouplingMatrix&) = default;

private:
    std::uint32_t n_;
    bool symmetric_;
    std::vector<double> data_; // row-major n*n
};

/// Compressed-sparse-row view of a coupling matrix, used by the derivative
/// inner loops. Row-major accumulation keeps the reduction order fixed.
struct CsrMatrix {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> row_ptr; // n + 1
    std::vector<std::uint32_t> col;
    std::vector<double> val;

    static CsrMatrix from(const CouplingMatrix& j);

    /// y_i = sum_j J_ij x_j
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;

    /// Weighted row degree sum_j |J_ij|.
    std::vector<double> row_abs_sums() const;
};

/// Models finite DAC resolution when programming the couplings: magnitudes
/// snap to the nearest of 2^bits - 1 uniform levels spanning (0, max|J|];
/// signs are preserved exactly and zeros stay zero. Idempotent.
/// Requires 1 <= bits <= 16.
CouplingMatrix quantize_weights(const CouplingMatrix& j, int bits);

} // namespace brimsim
