#pragma once

#include <cstdint>
#include <vector>

#include "brimsim/coupling.hpp"
#include "brimsim/graph.hpp"

namespace brimsim::detail {

/// Keeps the Ising energy of a thresholded state current across updates;
/// spin flips cost O(degree) instead of a full re-evaluation. Assumes a
/// symmetric coupling (the Max-Cut mapping always provides one).
class SpinTracker {
public:
    SpinTracker(const CsrMatrix& j, const SpinVector& spins) : j_(&j), spins_(spins) {
        field_.assign(j.n, 0.0);
        for (std::uint32_t r = 0; r < j.n; ++r)
            for (std::uint32_t k = j.row_ptr[r]; k < j.row_ptr[r + 1]; ++k)
                field_[r] += j.val[k] * spins_[j.col[k]];
        energy_ = 0.0;
        for (std::uint32_t i = 0; i < j.n; ++i) energy_ -= 0.5 * spins_[i] * field_[i];
    }

    void set_spin(std::uint32_t i, int s) {
        if (s != spins_[i]) flip(i);
    }

    double energy() const noexcept { return energy_; }
    const SpinVector& spins() const noexcept { return spins_; }

private:
    void flip(std::uint32_t i) {
        energy_ += 2.0 * spins_[i] * field_[i];
        const int old = spins_[i];
        spins_[i] = -old;
        for (std::uint32_t k = j_->row_ptr[i]; k < j_->row_ptr[i + 1]; ++k)
            field_[j_->col[k]] -= 2.0 * j_->val[k] * old;
    }

    const CsrMatrix* j_;
    SpinVector spins_;
    std::vector<double> field_;
    double energy_ = 0.0;
};

} // namespace brimsim::detail
