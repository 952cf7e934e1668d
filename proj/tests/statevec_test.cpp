// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/statevec.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "teleport/errors.hpp"
#include "teleport/gates.hpp"
#include "teleport/noise.hpp"
#include "teleport/protocol.hpp"
#include "teleport/rng.hpp"
#include "test_util.hpp"

namespace teleport {
namespace {

using testutil::expect_state_near;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Three-qubit state after tensoring the input with the pair and applying
// CNOT(0,1) then H(0): amplitudes (a,b,b,a,a,-b,-b,a)/2.
StateVector premeasurement_state(const Amplitude &a, const Amplitude &b) {
    const StateVector input(1, {a, b});
    StateVector state = tensor(input, ideal_bell());
    state = apply_cnot(state, 0, 1);
    return apply_1q(state, gateset::H(), 0);
}

TEST(BasisState, SingleQubitZero) {
    expect_state_near(basis_state(1, "0"), {1.0, 0.0}, 0.0);
}

TEST(BasisState, BitOrderConvention) {
    const StateVector sv = basis_state(3, "100");
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        EXPECT_EQ(sv[i], i == 4 ? Amplitude(1.0) : Amplitude(0.0));
    }
}

TEST(BasisState, TwoQubitEleven) {
    const StateVector sv = basis_state(2, "11");
    EXPECT_EQ(sv[3], Amplitude(1.0));
}

TEST(BasisState, RejectsBadArguments) {
    EXPECT_THROW(basis_state(0, ""), InputError);
    EXPECT_THROW(basis_state(13, "0000000000000"), InputError);
    EXPECT_THROW(basis_state(2, "1"), InputError);
    EXPECT_THROW(basis_state(2, "1x"), InputError);
}

TEST(BitIndexing, RoundTrip) {
    EXPECT_EQ(bits_to_index("01"), 1u);
    EXPECT_EQ(bits_to_index("100"), 4u);
    EXPECT_EQ(index_to_bits(4, 3), "100");
    EXPECT_EQ(index_to_bits(1, 2), "01");
    EXPECT_THROW(bits_to_index("10a"), InputError);
}

TEST(StateVectorCtor, RejectsBadStates) {
    EXPECT_THROW(StateVector(0, {}), InputError);
    EXPECT_THROW(StateVector(1, {1.0, 0.0, 0.0}), InputError);
    const double nan = std::nan("");
    EXPECT_THROW(StateVector(1, {nan, 0.0}), InputError);
}

TEST(Tensor, InputWithBellPair) {
    const Amplitude a(0.6), b(0.8);
    const StateVector product = tensor(StateVector(1, {a, b}), ideal_bell());
    // (a|000> + a|011> + b|100> + b|111>) / sqrt2
    expect_state_near(product,
                      {a * kInvSqrt2, 0.0, 0.0, a * kInvSqrt2, b * kInvSqrt2,
                       0.0, 0.0, b * kInvSqrt2},
                      1e-15);
}

TEST(Tensor, BasisProducts) {
    expect_state_near(tensor(basis_state(1, "0"), basis_state(1, "0")),
                      {1.0, 0.0, 0.0, 0.0}, 0.0);
    const StateVector plus(1, {kInvSqrt2, kInvSqrt2});
    expect_state_near(tensor(basis_state(1, "1"), plus),
                      {0.0, 0.0, kInvSqrt2, kInvSqrt2}, 0.0);
}

TEST(Tensor, RejectsOverflow) {
    const StateVector seven(7, std::vector<Amplitude>(128, kInvSqrt2 / 8.0));
    const StateVector six(6, std::vector<Amplitude>(64, 0.125));
    EXPECT_THROW(tensor(seven, six), InputError);
}

TEST(Normalize, Examples) {
    expect_state_near(normalize(StateVector(1, {2.0, 0.0})), {1.0, 0.0}, 0.0);
    expect_state_near(normalize(StateVector(2, {1.0, 1.0, 1.0, 1.0})),
                      {0.5, 0.5, 0.5, 0.5}, 0.0);
    EXPECT_THROW(normalize(StateVector(1, {0.0, 0.0})), DegenerateStateError);
}

TEST(InnerProduct, Examples) {
    const StateVector zero = basis_state(1, "0");
    const StateVector one = basis_state(1, "1");
    const StateVector plus(1, {kInvSqrt2, kInvSqrt2});
    EXPECT_EQ(inner_product(zero, zero), Amplitude(1.0));
    EXPECT_EQ(inner_product(zero, one), Amplitude(0.0));
    EXPECT_NEAR(inner_product(plus, zero).real(), kInvSqrt2, 1e-15);
    EXPECT_THROW(inner_product(zero, basis_state(2, "00")), InputError);
}

TEST(Fidelity, Examples) {
    RngStream rng(17);
    const StateVector psi = haar_random_qubit(rng);
    EXPECT_NEAR(fidelity(psi, psi), 1.0, 1e-12);
    EXPECT_EQ(fidelity(basis_state(1, "0"), basis_state(1, "1")), 0.0);
    const StateVector plus(1, {kInvSqrt2, kInvSqrt2});
    EXPECT_NEAR(fidelity(basis_state(1, "0"), plus), 0.5, 1e-12);
}

TEST(Fidelity, SymmetricAndPhaseInvariant) {
    RngStream rng(18);
    for (int rep = 0; rep < 20; ++rep) {
        const StateVector u = haar_random_qubit(rng);
        const StateVector v = haar_random_qubit(rng);
        EXPECT_DOUBLE_EQ(fidelity(u, v), fidelity(v, u));
        const Amplitude phase = std::polar(1.0, 2.5 + rep);
        const StateVector u_rot(1, {u[0] * phase, u[1] * phase});
        EXPECT_NEAR(fidelity(u_rot, v), fidelity(u, v), 1e-12);
    }
}

TEST(MeasurementProbabilities, PremeasurementBranchesAreUniform) {
    RngStream rng(19);
    for (int rep = 0; rep < 100; ++rep) {
        const StateVector input = haar_random_qubit(rng);
        const StateVector state = premeasurement_state(input[0], input[1]);
        const auto probs = measurement_probabilities(state, {0, 1});
        ASSERT_EQ(probs.size(), 4u);
        double total = 0.0;
        for (double p : probs) {
            EXPECT_NEAR(p, 0.25, 1e-9);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(MeasurementProbabilities, SumToOneOnRandomStates) {
    RngStream rng(20);
    std::vector<Amplitude> amps(16);
    for (Amplitude &a : amps) {
        a = rng.complex_normal();
    }
    const StateVector sv = normalize(StateVector(4, std::move(amps)));
    for (const std::vector<int> &targets :
         {std::vector<int>{0}, {0, 1}, {0, 2}, {3, 1}}) {
        const auto probs = measurement_probabilities(sv, targets);
        double total = 0.0;
        for (double p : probs) {
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
    EXPECT_THROW(measurement_probabilities(sv, {0, 0}), InputError);
    EXPECT_THROW(measurement_probabilities(sv, {4}), InputError);
    EXPECT_THROW(measurement_probabilities(sv, {}), InputError);
}

TEST(MeasureQubits, DeterministicOutcomeOnProductState) {
    RngStream input_rng(21);
    const StateVector psi = haar_random_qubit(input_rng);
    const StateVector sv = tensor(basis_state(1, "0"), psi);
    for (int rep = 0; rep < 50; ++rep) {
        RngStream rng(static_cast<std::uint64_t>(rep));
        const MeasureResult m = measure_qubits(sv, {0}, rng);
        EXPECT_EQ(m.outcome, "0");
        EXPECT_NEAR(m.probability, 1.0, 1e-12);
    }
}

TEST(MeasureQubits, CollapseOfBranch00RecoversInput) {
    const Amplitude a(0.6), b(0.8);
    const StateVector state = premeasurement_state(a, b);
    const MeasureResult m = project_measurement(state, {0, 1}, "00");
    EXPECT_NEAR(m.probability, 0.25, 1e-12);
    const StateVector bob = factor_measured(m.collapsed, {0, 1}, "00");
    expect_state_near(bob, {a, b}, 1e-12);
}

TEST(MeasureQubits, SameSeedSameOutcomeSequence) {
    const StateVector state = premeasurement_state(0.6, 0.8);
    RngStream rng_a(99);
    RngStream rng_b(99);
    for (int rep = 0; rep < 200; ++rep) {
        const MeasureResult ma = measure_qubits(state, {0, 1}, rng_a);
        const MeasureResult mb = measure_qubits(state, {0, 1}, rng_b);
        EXPECT_EQ(ma.outcome, mb.outcome);
    }
}

TEST(MeasureQubits, ZeroProbabilityOutcomesUnreachable) {
    // (|00> + |11>)/sqrt2 never yields 01 or 10.
    const StateVector bell = ideal_bell();
    RngStream rng(7);
    for (int rep = 0; rep < 500; ++rep) {
        const MeasureResult m = measure_qubits(bell, {0, 1}, rng);
        EXPECT_TRUE(m.outcome == "00" || m.outcome == "11");
    }
}

TEST(ProjectMeasurement, ZeroWeightBranchIsDegenerate) {
    EXPECT_THROW(project_measurement(ideal_bell(), {0, 1}, "01"),
                 DegenerateStateError);
}

TEST(FactorMeasured, Branch10GivesMinusPhase) {
    const Amplitude a(0.6), b(0.8);
    const StateVector state = premeasurement_state(a, b);
    const MeasureResult m = project_measurement(state, {0, 1}, "10");
    const StateVector bob = factor_measured(m.collapsed, {0, 1}, "10");
    expect_state_near(bob, {a, -b}, 1e-12);
}

TEST(FactorMeasured, BasisExample) {
    const StateVector sv = basis_state(2, "11");
    expect_state_near(factor_measured(sv, {0}, "1"), {0.0, 1.0}, 0.0);
}

TEST(FactorMeasured, InconsistentAmplitudeIsContractViolation) {
    // (|00> + |10>)/sqrt2 is not collapsed on qubit 0.
    const StateVector sv(2, {kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    EXPECT_THROW(factor_measured(sv, {0}, "0"), ContractError);
}

TEST(NormPreservation, ThroughTensorAndCollapse) {
    RngStream rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const StateVector input = haar_random_qubit(rng);
        const StateVector state = premeasurement_state(input[0], input[1]);
        EXPECT_NEAR(state.norm(), 1.0, 1e-9);
        const MeasureResult m = measure_qubits(state, {0, 1}, rng);
        EXPECT_NEAR(m.collapsed.norm(), 1.0, 1e-9);
    }
}

} // namespace
} // namespace teleport
