// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/protocol.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "teleport/errors.hpp"

namespace teleport {

namespace {

void check_input(const StateVector &input) {
    if (input.num_qubits() != 1) {
        throw InputError("protocol input must be a single-qubit state");
    }
    if (std::abs(input.norm() - 1.0) > 1e-9) {
        throw InputError("protocol input must be normalized");
    }
}

// Entangle-and-rotate prefix shared by both trial drivers: tensor the
// input with the pair, CNOT(0,1), H(0). Consumes gate rotations only for
// active sites.
StateVector prepare_premeasurement(const StateVector &input,
                                   const NoiseConfig &config, RngStream &rng) {
    const StateVector pair = config.sites.bell
                                 ? sample_noisy_bell(config.eta_bell, rng)
                                 : ideal_bell();
    StateVector state = tensor(input, pair);
    if (config.sites.xor_gate) {
        state = apply_2q(
            state, perturb_unitary(gateset::CNOT(), config.sigma_gate, rng), 0,
            1);
    } else {
        state = apply_cnot(state, 0, 1);
    }
    if (config.sites.hadamard) {
        state = apply_1q(
            state, perturb_unitary(gateset::H(), config.sigma_gate, rng), 0);
    } else {
        state = apply_1q(state, gateset::H(), 0);
    }
    return state;
}

} // namespace

const CorrectionTable &derived_correction_table() {
    static const CorrectionTable table = {
        CorrectionRule{"I", gateset::I2()},
        CorrectionRule{"X", gateset::X()},
        CorrectionRule{"Z", gateset::Z()},
        CorrectionRule{"CORR11", gateset::CORR11()},
    };
    return table;
}

const CorrectionTable &bit_reversed_correction_table() {
    static const CorrectionTable table = {
        CorrectionRule{"I", gateset::I2()},
        CorrectionRule{"Z", gateset::Z()},
        CorrectionRule{"X", gateset::X()},
        CorrectionRule{"CORR11", gateset::CORR11()},
    };
    return table;
}

StateVector ideal_bell() {
    const double r = std::numbers::sqrt2 / 2.0;
    return {2, {r, 0.0, 0.0, r}};
}

const Unitary &correction_for(std::string_view received) {
    if (received.size() != 2) {
        throw InputError("correction_for expects exactly two classical bits");
    }
    return derived_correction_table()[bits_to_index(received)].op;
}

TrialRecord run_trial(const StateVector &input, const NoiseConfig &config,
                      RngStream &rng, const CorrectionTable &table) {
    check_input(input);
    config.validate();

    const StateVector state = prepare_premeasurement(input, config, rng);
    const MeasureResult m = measure_qubits(state, {0, 1}, rng);
    std::string reported = config.sites.readout
                               ? flip_bits(m.outcome, config.q_readout, rng)
                               : m.outcome;
    std::string received = config.sites.channel
                               ? flip_bits(reported, config.p_classical, rng)
                               : reported;

    const StateVector bob = factor_measured(m.collapsed, {0, 1}, m.outcome);
    const CorrectionRule &rule = table[bits_to_index(received)];
    const Unitary op = config.sites.correction
                           ? perturb_unitary(rule.op, config.sigma_gate, rng)
                           : rule.op;
    StateVector corrected = apply_1q(bob, op, 0);
    const double fid = fidelity(input, corrected);

    return TrialRecord{input[0],
                       input[1],
                       m.outcome,
                       std::move(reported),
                       std::move(received),
                       rule.label,
                       std::move(corrected),
                       fid,
                       m.probability};
}

std::array<TrialRecord, 4> run_trial_all_branches(const StateVector &input,
                                                  const NoiseConfig &config,
                                                  RngStream &rng,
                                                  const CorrectionTable &table) {
    check_input(input);
    config.validate();

    const StateVector state = prepare_premeasurement(input, config, rng);

    bool readout_flip[2] = {false, false};
    if (config.sites.readout) {
        readout_flip[0] = rng.uniform_double() < config.q_readout;
        readout_flip[1] = rng.uniform_double() < config.q_readout;
    }
    bool channel_flip[2] = {false, false};
    if (config.sites.channel) {
        channel_flip[0] = rng.uniform_double() < config.p_classical;
        channel_flip[1] = rng.uniform_double() < config.p_classical;
    }
    std::optional<Unitary> rotation;
    if (config.sites.correction) {
        rotation = random_rotation(2, config.sigma_gate, rng);
    }

    const auto flipped = [](std::string bits, const bool decide[2]) {
        for (int k = 0; k < 2; ++k) {
            if (decide[k]) {
                bits[static_cast<std::size_t>(k)] =
                    bits[static_cast<std::size_t>(k)] == '0' ? '1' : '0';
            }
        }
        return bits;
    };

    const auto run_branch = [&](std::size_t index) {
        const std::string outcome = index_to_bits(index, 2);
        const MeasureResult m = project_measurement(state, {0, 1}, outcome);
        std::string reported = flipped(outcome, readout_flip);
        std::string received = flipped(reported, channel_flip);
        const StateVector bob = factor_measured(m.collapsed, {0, 1}, outcome);
        const CorrectionRule &rule = table[bits_to_index(received)];
        const Unitary op = rotation ? *rotation * rule.op : rule.op;
        StateVector corrected = apply_1q(bob, op, 0);
        const double fid = fidelity(input, corrected);
        return TrialRecord{input[0],
                           input[1],
                           outcome,
                           std::move(reported),
                           std::move(received),
                           rule.label,
                           std::move(corrected),
                           fid,
                           m.probability};
    };

    return {run_branch(0), run_branch(1), run_branch(2), run_branch(3)};
}

} // namespace teleport
