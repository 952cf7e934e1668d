// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "teleport/gates.hpp"
#include "teleport/rng.hpp"
#include "teleport/statevec.hpp"

namespace teleport {

/// Independent on/off switch per error-injection site.
struct SiteFlags {
    bool bell = false;        // imperfect entangled pair
    bool xor_gate = false;    // imprecise CNOT
    bool hadamard = false;    // imprecise H
    bool correction = false;  // imprecise correction operator
    bool channel = false;     // classical bit flips in transit
    bool readout = false;     // misreported measurement record
};

/// All error magnitudes plus the master seed.
struct NoiseConfig {
    double eta_bell = 0.0;     // Bell-pair perturbation magnitude, >= 0
    double sigma_gate = 0.0;   // unitary imprecision scale (radians), >= 0
    double p_classical = 0.0;  // per-bit channel flip probability, [0,1]
    double q_readout = 0.0;    // per-bit misreport probability, [0,1]
    std::uint64_t seed = 0;
    SiteFlags sites;

    /// Throws InputError naming the offending field.
    void validate() const;
};

/// normalize( (|00>+|11>)/sqrt2 + eta * g ) with g a 4-vector of
/// independent CN(0,1) draws (4 complex normals, drawn in index order).
/// eta = 0 returns the exact ideal pair; the draws are consumed either way.
StateVector sample_noisy_bell(double eta, RngStream &rng);

/// Random rotation exp(-iE) with E Hermitian of scale sigma.
/// dim 2: E = eps_x X + eps_y Y + eps_z Z, eps_k ~ N(0, sigma^2), via the
///        closed form cos||eps|| I - i sin||eps|| (eps_hat . sigma_vec);
///        draws eps in x, y, z order.
/// dim 4: E = sigma (G + G+)/2 with G a 4x4 of CN(0,1) entries drawn
///        row-major, exponentiated by Hermitian eigendecomposition.
/// sigma = 0 returns the identity without consuming draws.
Unitary random_rotation(int dim, double sigma, RngStream &rng);

/// Imprecise gate: random_rotation(u.dim(), sigma, rng) * u. Replaces the
/// ideal gate in the protocol; output is unitary to 1e-9 for any sigma.
Unitary perturb_unitary(const Unitary &u, double sigma, RngStream &rng);

/// Flip each bit independently with probability p (one uniform per bit).
std::string flip_bits(std::string_view bits, double p, RngStream &rng);

/// Haar-random single-qubit state: a = cos(theta/2),
/// b = e^{i phi} sin(theta/2), cos(theta) uniform on [-1,1] then phi
/// uniform on [0, 2pi) (two uniforms, in that order).
StateVector haar_random_qubit(RngStream &rng);

} // namespace teleport
