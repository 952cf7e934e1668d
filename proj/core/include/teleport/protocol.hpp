// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "teleport/gates.hpp"
#include "teleport/noise.hpp"
#include "teleport/statevec.hpp"

namespace teleport {

struct CorrectionRule {
    std::string label;
    Unitary op;
};

/// Correction operator per 2-bit classical message, indexed by
/// bits_to_index(received).
using CorrectionTable = std::array<CorrectionRule, 4>;

/// The map forced by grouping the pre-measurement state on Alice's two
/// qubits: 00 -> I, 01 -> X, 10 -> Z, 11 -> [[0,-1],[1,0]]. Round-trips
/// every branch back to the input state (11 up to a global phase).
const CorrectionTable &derived_correction_table();

/// The assignment obtained by reading Alice's two bits in reverse order
/// (X on 10, Z on 01). Kept for the regression test documenting that it
/// fails the round trip on branches 01 and 10 for generic inputs.
const CorrectionTable &bit_reversed_correction_table();

/// (|00> + |11>) / sqrt2.
StateVector ideal_bell();

/// Correction operator Bob applies for a received 2-bit message, from the
/// derived table.
const Unitary &correction_for(std::string_view received);

/// One protocol run, end to end.
struct TrialRecord {
    Amplitude input_a;             // input amplitude on |0>
    Amplitude input_b;             // input amplitude on |1>
    std::string outcome;           // true collapse of Alice's two qubits
    std::string reported;          // after readout misreport
    std::string received;          // after the classical channel
    std::string correction_label;  // which operator Bob applied
    StateVector bob_state;         // Bob's qubit after correction
    double fidelity;               // against the input state
    double branch_probability;     // Born weight of `outcome`
};

/// Execute the five protocol steps on `input` (a normalized single-qubit
/// state): tensor with the (possibly noisy) pair as qubits 1 (Alice) and
/// 2 (Bob), CNOT(0,1), H(0), measure {0,1}, transmit the two bits, apply
/// the correction, compare against the input.
///
/// Error sites are active only when the corresponding flag in
/// config.sites is set; inactive sites consume no draws. Draw order:
/// bell, CNOT rotation, H rotation, measurement (one uniform), readout
/// coins, channel coins, correction rotation.
TrialRecord run_trial(const StateVector &input, const NoiseConfig &config,
                      RngStream &rng,
                      const CorrectionTable &table = derived_correction_table());

/// Deterministic variant: instead of sampling the measurement, project
/// onto each of the four outcomes in turn and complete the protocol for
/// every branch. Noise is drawn once per site and shared across branches
/// (the correction site shares one rotation, left-applied to each
/// branch's operator), so branches are pairwise comparable.
std::array<TrialRecord, 4> run_trial_all_branches(
    const StateVector &input, const NoiseConfig &config, RngStream &rng,
    const CorrectionTable &table = derived_correction_table());

} // namespace teleport
