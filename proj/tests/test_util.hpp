// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "teleport/statevec.hpp"

namespace teleport::testutil {

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

/// Numeric Bloch-sphere average of |<phi|P|phi>|^2 over uniformly random
/// single-qubit states, by midpoint quadrature on (u = cos theta, angle).
/// Hand-rolled 2x2 arithmetic on purpose: this oracle must not share code
/// with the library it checks.
inline double bloch_mean_squared_overlap(const Mat2 &p, int grid = 400) {
    double sum = 0.0;
    const double du = 2.0 / grid;
    const double dang = 2.0 * std::numbers::pi / grid;
    for (int iu = 0; iu < grid; ++iu) {
        const double u = -1.0 + (iu + 0.5) * du;
        const std::complex<double> a = std::sqrt(0.5 * (1.0 + u));
        const double s = std::sqrt(0.5 * (1.0 - u));
        for (int ia = 0; ia < grid; ++ia) {
            const std::complex<double> b = std::polar(s, (ia + 0.5) * dang);
            const std::complex<double> pa = p[0][0] * a + p[0][1] * b;
            const std::complex<double> pb = p[1][0] * a + p[1][1] * b;
            const std::complex<double> overlap =
                std::conj(a) * pa + std::conj(b) * pb;
            sum += std::norm(overlap);
        }
    }
    return sum / (static_cast<double>(grid) * grid);
}

inline Mat2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Mat2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

/// Entry-for-entry comparison against an expected amplitude vector.
inline void expect_state_near(const StateVector &sv,
                              const std::vector<Amplitude> &expected,
                              double tol) {
    ASSERT_EQ(sv.dim(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(sv[i].real(), expected[i].real(), tol)
            << "real part at index " << i;
        EXPECT_NEAR(sv[i].imag(), expected[i].imag(), tol)
            << "imag part at index " << i;
    }
}

/// Bitwise equality, for determinism contracts.
inline bool states_identical(const StateVector &u, const StateVector &v) {
    if (u.dim() != v.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i] != v[i]) {
            return false;
        }
    }
    return true;
}

} // namespace teleport::testutil
