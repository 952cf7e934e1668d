// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "teleport/errors.hpp"

namespace teleport {

Unitary::Unitary(int dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ != 2 && dim_ != 4) {
        throw InputError("unitary dimension must be 2 or 4, got " +
                         std::to_string(dim_));
    }
    if (entries_.size() != static_cast<std::size_t>(dim_) * dim_) {
        throw InputError("unitary entry count does not match dimension");
    }
    for (const Amplitude &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw InputError("non-finite entry in unitary");
        }
    }
    if (unitarity_deviation() > 1e-9) {
        throw InputError("matrix violates the unitarity invariant");
    }
}

Unitary Unitary::adjoint() const {
    std::vector<Amplitude> out(entries_.size());
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            out[static_cast<std::size_t>(c) * dim_ + r] = std::conj(at(r, c));
        }
    }
    return {dim_, std::move(out)};
}

Unitary Unitary::operator*(const Unitary &rhs) const {
    if (dim_ != rhs.dim_) {
        throw InputError("unitary product: dimension mismatch");
    }
    std::vector<Amplitude> out(entries_.size());
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            Amplitude acc = 0.0;
            for (int k = 0; k < dim_; ++k) {
                acc += at(r, k) * rhs.at(k, c);
            }
            out[static_cast<std::size_t>(r) * dim_ + c] = acc;
        }
    }
    return {dim_, std::move(out)};
}

double Unitary::unitarity_deviation() const noexcept {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            Amplitude acc = 0.0;
            for (int k = 0; k < dim_; ++k) {
                acc += std::conj(at(k, r)) * at(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

namespace gateset {

const Unitary &I2() {
    static const Unitary u(2, {1, 0, 0, 1});
    return u;
}

const Unitary &X() {
    static const Unitary u(2, {0, 1, 1, 0});
    return u;
}

const Unitary &Y() {
    static const Unitary u(2, {0, Amplitude(0, -1), Amplitude(0, 1), 0});
    return u;
}

const Unitary &Z() {
    static const Unitary u(2, {1, 0, 0, -1});
    return u;
}

const Unitary &H() {
    static const double h = std::numbers::sqrt2 / 2.0;
    static const Unitary u(2, {h, h, h, -h});
    return u;
}

const Unitary &CORR11() {
    static const Unitary u(2, {0, -1, 1, 0});
    return u;
}

const Unitary &CNOT() {
    static const Unitary u(4, {1, 0, 0, 0,   //
                               0, 1, 0, 0,   //
                               0, 0, 0, 1,   //
                               0, 0, 1, 0});
    return u;
}

} // namespace gateset

StateVector apply_1q(const StateVector &sv, const Unitary &u, int target) {
    if (u.dim() != 2) {
        throw InputError("apply_1q: wants a 2x2 unitary");
    }
    if (target < 0 || target >= sv.num_qubits()) {
        throw InputError("apply_1q: target qubit " + std::to_string(target) +
                         " out of range");
    }
    const std::size_t mask = qubit_mask(sv.num_qubits(), target);
    std::vector<Amplitude> amps(sv.amplitudes().begin(), sv.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | mask];
        amps[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
        amps[i | mask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
    return {sv.num_qubits(), std::move(amps)};
}

StateVector apply_cnot(const StateVector &sv, int control, int target) {
    if (control == target) {
        throw InputError("apply_cnot: control and target must differ");
    }
    if (control < 0 || control >= sv.num_qubits() || target < 0 ||
        target >= sv.num_qubits()) {
        throw InputError("apply_cnot: qubit index out of range");
    }
    const std::size_t cmask = qubit_mask(sv.num_qubits(), control);
    const std::size_t tmask = qubit_mask(sv.num_qubits(), target);
    std::vector<Amplitude> amps(sv.amplitudes().begin(), sv.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
    return {sv.num_qubits(), std::move(amps)};
}

StateVector apply_2q(const StateVector &sv, const Unitary &u, int q_hi,
                     int q_lo) {
    if (u.dim() != 4) {
        throw InputError("apply_2q: wants a 4x4 unitary");
    }
    if (q_hi == q_lo) {
        throw InputError("apply_2q: qubit indices must differ");
    }
    if (q_hi < 0 || q_hi >= sv.num_qubits() || q_lo < 0 ||
        q_lo >= sv.num_qubits()) {
        throw InputError("apply_2q: qubit index out of range");
    }
    const std::size_t hmask = qubit_mask(sv.num_qubits(), q_hi);
    const std::size_t lmask = qubit_mask(sv.num_qubits(), q_lo);
    std::vector<Amplitude> amps(sv.amplitudes().begin(), sv.amplitudes().end());
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & (hmask | lmask)) {
            continue;
        }
        const std::size_t idx[4] = {base, base | lmask, base | hmask,
                                    base | hmask | lmask};
        Amplitude in[4];
        for (int k = 0; k < 4; ++k) {
            in[k] = amps[idx[k]];
        }
        for (int r = 0; r < 4; ++r) {
            Amplitude acc = 0.0;
            for (int c = 0; c < 4; ++c) {
                acc += u.at(r, c) * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
    return {sv.num_qubits(), std::move(amps)};
}

} // namespace teleport
