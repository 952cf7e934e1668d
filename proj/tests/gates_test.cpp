// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/gates.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "teleport/errors.hpp"
#include "teleport/protocol.hpp"
#include "teleport/rng.hpp"
#include "teleport/statevec.hpp"
#include "test_util.hpp"

namespace teleport {
namespace {

using testutil::expect_state_near;

constexpr double kInvSqrt2 = 0.70710678118654752440;

StateVector random_state(int n_qubits, RngStream &rng) {
    std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
    for (Amplitude &a : amps) {
        a = rng.complex_normal();
    }
    return normalize(StateVector(n_qubits, std::move(amps)));
}

void expect_unitary_equals(const Unitary &u,
                           const std::vector<Amplitude> &expected,
                           double tol) {
    ASSERT_EQ(u.entries().size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(u.entries()[i].real(), expected[i].real(), tol)
            << "entry " << i;
        EXPECT_NEAR(u.entries()[i].imag(), expected[i].imag(), tol)
            << "entry " << i;
    }
}

TEST(GateSet, ConstantsMatchTheirDefinitions) {
    expect_unitary_equals(gateset::X(), {0, 1, 1, 0}, 0.0);
    expect_unitary_equals(gateset::Z(), {1, 0, 0, -1}, 0.0);
    expect_unitary_equals(gateset::CORR11(), {0, -1, 1, 0}, 0.0);
    expect_unitary_equals(gateset::H(),
                          {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}, 1e-16);
    expect_unitary_equals(gateset::CNOT(), {1, 0, 0, 0,  //
                                            0, 1, 0, 0,  //
                                            0, 0, 0, 1,  //
                                            0, 0, 1, 0},
                          0.0);
}

TEST(GateSet, ConstantsAreUnitary) {
    for (const Unitary *u : {&gateset::I2(), &gateset::X(), &gateset::Y(),
                             &gateset::Z(), &gateset::H(), &gateset::CORR11(),
                             &gateset::CNOT()}) {
        EXPECT_LE(u->unitarity_deviation(), 1e-15);
    }
}

TEST(GateSet, InvolutionsAndCorr11Square) {
    expect_unitary_equals(gateset::H() * gateset::H(), {1, 0, 0, 1}, 1e-15);
    expect_unitary_equals(gateset::X() * gateset::X(), {1, 0, 0, 1}, 0.0);
    expect_unitary_equals(gateset::Z() * gateset::Z(), {1, 0, 0, 1}, 0.0);
    // CORR11^2 = -I: a pure global phase, invisible to fidelity.
    expect_unitary_equals(gateset::CORR11() * gateset::CORR11(),
                          {-1, 0, 0, -1}, 0.0);
}

TEST(UnitaryCtor, EnforcesInvariants) {
    EXPECT_THROW(Unitary(2, {1, 1, 0, 1}), InputError);
    EXPECT_THROW(Unitary(3, std::vector<Amplitude>(9, 0.0)), InputError);
    EXPECT_THROW(Unitary(2, {1, 0, 0}), InputError);
    const double nan = std::nan("");
    EXPECT_THROW(Unitary(2, {nan, 0, 0, 1}), InputError);
}

TEST(UnitaryOps, AdjointAndProduct) {
    const Unitary y = gateset::Y();
    const Unitary product = y.adjoint() * y;
    expect_unitary_equals(product, {1, 0, 0, 1}, 0.0);
    EXPECT_THROW(gateset::H() * gateset::CNOT(), InputError);
}

TEST(Apply1q, PauliExamples) {
    expect_state_near(apply_1q(basis_state(1, "0"), gateset::X(), 0),
                      {0.0, 1.0}, 0.0);
    const StateVector plus(1, {kInvSqrt2, kInvSqrt2});
    expect_state_near(apply_1q(plus, gateset::Z(), 0),
                      {kInvSqrt2, -kInvSqrt2}, 0.0);
    EXPECT_THROW(apply_1q(plus, gateset::Z(), 1), InputError);
    EXPECT_THROW(apply_1q(plus, gateset::CNOT(), 0), InputError);
}

TEST(ApplyCnot, EntangleStepOnDisplayedState) {
    const Amplitude a(0.6), b(0.8);
    // (a|000> + a|011> + b|100> + b|111>)/sqrt2
    const StateVector before = tensor(StateVector(1, {a, b}), ideal_bell());
    const StateVector after = apply_cnot(before, 0, 1);
    // (a|000> + a|011> + b|101> + b|110>)/sqrt2
    expect_state_near(after,
                      {a * kInvSqrt2, 0.0, 0.0, a * kInvSqrt2, 0.0,
                       b * kInvSqrt2, b * kInvSqrt2, 0.0},
                      1e-15);
}

TEST(ApplyCnot, BasisExamplesAndErrors) {
    expect_state_near(apply_cnot(basis_state(2, "00"), 0, 1),
                      {1.0, 0.0, 0.0, 0.0}, 0.0);
    const StateVector ten = basis_state(2, "10");
    expect_state_near(apply_cnot(ten, 0, 1), {0.0, 0.0, 0.0, 1.0}, 0.0);
    EXPECT_THROW(apply_cnot(ten, 0, 0), InputError);
    EXPECT_THROW(apply_cnot(ten, 0, 2), InputError);
}

TEST(Apply1q, HadamardProducesPremeasurementState) {
    struct Case {
        double a;
        double b;
    };
    for (const Case &c : {Case{1.0, 0.0}, Case{0.0, 1.0}, Case{0.6, 0.8}}) {
        StateVector state =
            tensor(StateVector(1, {c.a, c.b}), ideal_bell());
        state = apply_cnot(state, 0, 1);
        state = apply_1q(state, gateset::H(), 0);
        const double a2 = c.a / 2.0;
        const double b2 = c.b / 2.0;
        expect_state_near(state, {a2, b2, b2, a2, a2, -b2, -b2, a2}, 1e-14);
    }
}

TEST(Apply2q, CnotMatrixMatchesDedicatedRoutine) {
    RngStream rng(31);
    const std::pair<int, int> placements[] = {{0, 1}, {1, 0}, {2, 0}, {1, 2}};
    for (int rep = 0; rep < 100; ++rep) {
        const StateVector sv = random_state(3, rng);
        const auto &[hi, lo] = placements[rep % 4];
        const StateVector via_matrix = apply_2q(sv, gateset::CNOT(), hi, lo);
        const StateVector via_routine = apply_cnot(sv, hi, lo);
        for (std::size_t i = 0; i < sv.dim(); ++i) {
            EXPECT_NEAR(std::abs(via_matrix[i] - via_routine[i]), 0.0, 1e-12);
        }
    }
}

TEST(Apply2q, IdentityAndSwap) {
    RngStream rng(32);
    const StateVector sv = random_state(2, rng);
    const Unitary id4(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    const StateVector same = apply_2q(sv, id4, 0, 1);
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        EXPECT_EQ(same[i], sv[i]);
    }
    const Unitary swap(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    expect_state_near(apply_2q(basis_state(2, "01"), swap, 0, 1),
                      {0.0, 0.0, 1.0, 0.0}, 0.0);
    EXPECT_THROW(apply_2q(sv, swap, 0, 0), InputError);
    EXPECT_THROW(apply_2q(sv, gateset::H(), 0, 1), InputError);
}

TEST(Apply1q, NormPreservedOnRandomStates) {
    RngStream rng(33);
    const Unitary *constants[] = {&gateset::I2(), &gateset::X(), &gateset::Y(),
                                  &gateset::Z(), &gateset::H(),
                                  &gateset::CORR11()};
    for (int rep = 0; rep < 1000; ++rep) {
        const StateVector sv = random_state(3, rng);
        const Unitary &u = *constants[rep % 6];
        EXPECT_NEAR(apply_1q(sv, u, rep % 3).norm(), 1.0, 1e-12);
    }
}

} // namespace
} // namespace teleport
