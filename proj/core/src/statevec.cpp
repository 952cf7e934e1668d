// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "teleport/errors.hpp"

namespace teleport {

namespace {

void check_targets(const StateVector &sv, const std::vector<int> &targets,
                   const char *what) {
    if (targets.empty()) {
        throw InputError(std::string(what) + ": no target qubits given");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= sv.num_qubits()) {
            throw InputError(std::string(what) + ": qubit index " +
                             std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw InputError(std::string(what) +
                                 ": duplicate qubit index " +
                                 std::to_string(targets[i]));
            }
        }
    }
}

// Bits of `targets` (in target order) extracted from a basis index.
std::size_t extract_outcome(std::size_t index, int n_qubits,
                            const std::vector<int> &targets) {
    std::size_t o = 0;
    for (int q : targets) {
        o = (o << 1) | ((index >> (n_qubits - 1 - q)) & 1u);
    }
    return o;
}

} // namespace

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InputError("state must have between 1 and " +
                         std::to_string(kMaxQubits) + " qubits, got " +
                         std::to_string(n_qubits));
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("amplitude count " + std::to_string(amps_.size()) +
                         " does not match 2^" + std::to_string(n_qubits));
    }
    for (const Amplitude &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InputError("non-finite amplitude in state");
        }
    }
}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const Amplitude &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::size_t bits_to_index(std::string_view bits) {
    std::size_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InputError("bit string may contain only 0 and 1, got \"" +
                             std::string(bits) + "\"");
        }
        v = (v << 1) | static_cast<std::size_t>(c - '0');
    }
    return v;
}

std::string index_to_bits(std::size_t index, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((index >> (width - 1 - i)) & 1u) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

StateVector basis_state(int n_qubits, std::string_view label) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InputError("basis_state: qubit count " +
                         std::to_string(n_qubits) + " out of range");
    }
    if (label.size() != static_cast<std::size_t>(n_qubits)) {
        throw InputError("basis_state: label \"" + std::string(label) +
                         "\" does not have " + std::to_string(n_qubits) +
                         " bits");
    }
    std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
    amps[bits_to_index(label)] = 1.0;
    return {n_qubits, std::move(amps)};
}

StateVector tensor(const StateVector &left, const StateVector &right) {
    const int n = left.num_qubits() + right.num_qubits();
    if (n > kMaxQubits) {
        throw InputError("tensor: combined state of " + std::to_string(n) +
                         " qubits exceeds the " + std::to_string(kMaxQubits) +
                         "-qubit cap");
    }
    std::vector<Amplitude> amps(left.dim() * right.dim());
    for (std::size_t i = 0; i < left.dim(); ++i) {
        for (std::size_t j = 0; j < right.dim(); ++j) {
            amps[i * right.dim() + j] = left[i] * right[j];
        }
    }
    return {n, std::move(amps)};
}

StateVector normalize(const StateVector &sv) {
    const double n = sv.norm();
    if (n <= 1e-12) {
        throw DegenerateStateError("cannot normalize a near-zero state");
    }
    std::vector<Amplitude> amps(sv.amplitudes().begin(), sv.amplitudes().end());
    for (Amplitude &a : amps) {
        a /= n;
    }
    return {sv.num_qubits(), std::move(amps)};
}

Amplitude inner_product(const StateVector &u, const StateVector &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw InputError("inner_product: dimension mismatch");
    }
    Amplitude acc = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

double fidelity(const StateVector &u, const StateVector &v) {
    const double f = std::norm(inner_product(u, v));
    return std::clamp(f, 0.0, 1.0);
}

std::vector<double> measurement_probabilities(const StateVector &sv,
                                              const std::vector<int> &targets) {
    check_targets(sv, targets, "measurement_probabilities");
    std::vector<double> probs(std::size_t{1} << targets.size(), 0.0);
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        probs[extract_outcome(i, sv.num_qubits(), targets)] += std::norm(sv[i]);
    }
    return probs;
}

namespace {

MeasureResult collapse_onto(const StateVector &sv,
                            const std::vector<int> &targets,
                            std::size_t chosen, double weight) {
    if (weight < 1e-12) {
        throw DegenerateStateError(
            "measurement outcome has near-zero probability");
    }
    const double scale = 1.0 / std::sqrt(weight);
    std::vector<Amplitude> amps(sv.dim());
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        if (extract_outcome(i, sv.num_qubits(), targets) == chosen) {
            amps[i] = sv[i] * scale;
        }
    }
    return {index_to_bits(chosen, static_cast<int>(targets.size())),
            StateVector(sv.num_qubits(), std::move(amps)), weight};
}

} // namespace

MeasureResult project_measurement(const StateVector &sv,
                                  const std::vector<int> &targets,
                                  std::string_view outcome) {
    check_targets(sv, targets, "project_measurement");
    if (outcome.size() != targets.size()) {
        throw InputError("project_measurement: outcome \"" +
                         std::string(outcome) + "\" does not match " +
                         std::to_string(targets.size()) + " targets");
    }
    const std::size_t chosen = bits_to_index(outcome);
    const auto probs = measurement_probabilities(sv, targets);
    return collapse_onto(sv, targets, chosen, probs[chosen]);
}

MeasureResult measure_qubits(const StateVector &sv,
                             const std::vector<int> &targets, RngStream &rng) {
    check_targets(sv, targets, "measure_qubits");
    const auto probs = measurement_probabilities(sv, targets);

    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    if (total < 1e-12) {
        throw DegenerateStateError(
            "all measurement outcomes have near-zero probability");
    }

    // Walk the cumulative weights; zero-probability outcomes are
    // unreachable because they never advance the boundary.
    const double u = rng.uniform_double() * total;
    std::size_t chosen = 0;
    std::size_t last_nonzero = 0;
    double cumulative = 0.0;
    bool found = false;
    for (std::size_t o = 0; o < probs.size(); ++o) {
        if (probs[o] > 0.0) {
            last_nonzero = o;
        }
        cumulative += probs[o];
        if (u < cumulative) {
            chosen = o;
            found = true;
            break;
        }
    }
    if (!found) {
        chosen = last_nonzero;  // u landed on the rounding tail
    }
    return collapse_onto(sv, targets, chosen, probs[chosen]);
}

StateVector factor_measured(const StateVector &sv,
                            const std::vector<int> &measured,
                            std::string_view outcome) {
    check_targets(sv, measured, "factor_measured");
    if (outcome.size() != measured.size()) {
        throw InputError("factor_measured: outcome \"" + std::string(outcome) +
                         "\" does not match " + std::to_string(measured.size()) +
                         " measured qubits");
    }
    const int n = sv.num_qubits();
    const int n_rem = n - static_cast<int>(measured.size());
    if (n_rem < 1) {
        throw InputError("factor_measured: no qubits would remain");
    }

    std::size_t mask = 0;
    std::size_t want = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) {
        const std::size_t bit = qubit_mask(n, measured[j]);
        mask |= bit;
        if (outcome[j] == '1') {
            want |= bit;
        }
    }

    std::vector<int> remaining;
    for (int q = 0; q < n; ++q) {
        if (std::find(measured.begin(), measured.end(), q) == measured.end()) {
            remaining.push_back(q);
        }
    }

    std::vector<Amplitude> amps(std::size_t{1} << n_rem);
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        if ((i & mask) == want) {
            std::size_t r = 0;
            for (int q : remaining) {
                r = (r << 1) | ((i >> (n - 1 - q)) & 1u);
            }
            amps[r] = sv[i];
        } else if (std::abs(sv[i]) > 1e-9) {
            throw ContractError(
                "factor_measured: amplitude inconsistent with outcome \"" +
                std::string(outcome) + "\" at basis index " +
                std::to_string(i));
        }
    }
    return normalize(StateVector(n_rem, std::move(amps)));
}

} // namespace teleport
