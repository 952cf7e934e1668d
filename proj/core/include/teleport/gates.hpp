// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "teleport/statevec.hpp"

namespace teleport {

/// Small dense complex matrix, dim 2 or 4, row-major. Construction
/// enforces the unitarity invariant ||U+U - I||_max <= 1e-9.
class Unitary {
  public:
    Unitary(int dim, std::vector<Amplitude> entries);

    int dim() const noexcept { return dim_; }
    const Amplitude &at(int row, int col) const noexcept {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    std::span<const Amplitude> entries() const noexcept { return entries_; }

    Unitary adjoint() const;
    Unitary operator*(const Unitary &rhs) const;

    /// max |(U+U - I)_{ij}|; always <= 1e-9 for a constructed value.
    double unitarity_deviation() const noexcept;

  private:
    int dim_;
    std::vector<Amplitude> entries_;
};

/// The protocol's operator set.
namespace gateset {
const Unitary &I2();
const Unitary &X();
const Unitary &Y();
const Unitary &Z();
const Unitary &H();       // (1/sqrt2) [[1,1],[1,-1]]
const Unitary &CORR11();  // [[0,-1],[1,0]], the correction for outcome 11
const Unitary &CNOT();    // 4x4, control = the more significant qubit
} // namespace gateset

/// Apply a 2x2 unitary to one qubit.
StateVector apply_1q(const StateVector &sv, const Unitary &u, int target);

/// Flip `target` on basis states where `control` is 1.
StateVector apply_cnot(const StateVector &sv, int control, int target);

/// Apply a 4x4 unitary on the two-qubit subspace spanned by (q_hi, q_lo),
/// with q_hi supplying the more significant bit of the 4-dim index.
StateVector apply_2q(const StateVector &sv, const Unitary &u, int q_hi,
                     int q_lo);

} // namespace teleport
