// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teleport/rng.hpp"

namespace teleport {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 12;

/// Dense pure state of 1..12 qubits.
///
/// Basis convention: qubit 0 is the MOST significant bit of the basis
/// index, so |q0 q1 ... q_{n-1}> maps to index q0*2^(n-1) + ... + q_{n-1}
/// (|100> -> index 4 for n = 3). Labels read left to right.
///
/// Construction checks finiteness only; the operations below keep
/// protocol-facing states normalized (sum |amp|^2 = 1 to 1e-9), and
/// normalize() exists to fix up raw amplitude vectors.
///
/// Values are immutable after construction; operations return new states,
/// so sharing across threads is safe as long as each thread owns its own
/// RngStream.
class StateVector {
  public:
    StateVector(int n_qubits, std::vector<Amplitude> amps);

    int num_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const Amplitude &operator[](std::size_t i) const noexcept { return amps_[i]; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    double norm() const noexcept;

  private:
    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// "01" -> 1, "100" -> 4. Throws InputError on characters other than 0/1.
std::size_t bits_to_index(std::string_view bits);

/// Inverse of bits_to_index at a fixed width.
std::string index_to_bits(std::size_t index, int width);

/// Mask of the index bit carrying `qubit` in an n-qubit register.
inline std::size_t qubit_mask(int n_qubits, int qubit) noexcept {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

/// Computational basis state |label>.
StateVector basis_state(int n_qubits, std::string_view label);

/// |left> (x) |right>; left supplies the more significant qubits.
StateVector tensor(const StateVector &left, const StateVector &right);

/// Rescale to unit norm. Throws DegenerateStateError when the norm is
/// at or below 1e-12.
StateVector normalize(const StateVector &sv);

/// <u|v> = sum conj(u_i) * v_i.
Amplitude inner_product(const StateVector &u, const StateVector &v);

/// |<u|v>|^2, clamped into [0, 1]. Invariant under global phase of either
/// argument.
double fidelity(const StateVector &u, const StateVector &v);

struct MeasureResult {
    std::string outcome;     // one bit per target, in target order
    StateVector collapsed;   // renormalized post-measurement state
    double probability;      // Born weight of the drawn outcome
};

/// Born weights of every outcome over `targets`, indexed by
/// bits_to_index(outcome).
std::vector<double> measurement_probabilities(const StateVector &sv,
                                              const std::vector<int> &targets);

/// Collapse onto a fixed outcome without sampling. probability is the Born
/// weight of that outcome; throws DegenerateStateError when it is below
/// 1e-12.
MeasureResult project_measurement(const StateVector &sv,
                                  const std::vector<int> &targets,
                                  std::string_view outcome);

/// Projective measurement of `targets` in the computational basis. The
/// outcome is drawn with Born probabilities from one uniform variate of
/// `rng`; the remaining qubits collapse and are renormalized.
MeasureResult measure_qubits(const StateVector &sv,
                             const std::vector<int> &targets, RngStream &rng);

/// Drop `measured` qubits from a state already collapsed onto `outcome`,
/// returning the normalized state of the remaining qubits (in their
/// original order). Amplitudes inconsistent with the outcome must vanish;
/// any magnitude above 1e-9 raises ContractError.
StateVector factor_measured(const StateVector &sv,
                            const std::vector<int> &measured,
                            std::string_view outcome);

} // namespace teleport
