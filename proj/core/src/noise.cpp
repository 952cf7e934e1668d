// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/noise.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "teleport/errors.hpp"

namespace teleport {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError(std::string(name) + " must lie in [0,1], got " +
                         std::to_string(p));
    }
}

void check_magnitude(double m, const char *name) {
    if (!std::isfinite(m) || m < 0.0) {
        throw InputError(std::string(name) +
                         " must be finite and non-negative, got " +
                         std::to_string(m));
    }
}

} // namespace

void NoiseConfig::validate() const {
    check_magnitude(eta_bell, "eta_bell");
    check_magnitude(sigma_gate, "sigma_gate");
    check_probability(p_classical, "p_classical");
    check_probability(q_readout, "q_readout");
}

StateVector sample_noisy_bell(double eta, RngStream &rng) {
    check_magnitude(eta, "eta");
    Amplitude g[4];
    for (Amplitude &z : g) {
        z = rng.complex_normal();
    }
    const double r = std::numbers::sqrt2 / 2.0;
    if (eta == 0.0) {
        return {2, {r, 0.0, 0.0, r}};
    }
    std::vector<Amplitude> amps = {r + eta * g[0], eta * g[1], eta * g[2],
                                   r + eta * g[3]};
    return normalize(StateVector(2, std::move(amps)));
}

namespace {

Unitary rotation_2d(double ex, double ey, double ez) {
    const double r = std::sqrt(ex * ex + ey * ey + ez * ez);
    if (r < 1e-300) {
        return gateset::I2();
    }
    const Amplitude i_unit(0.0, 1.0);
    const double c = std::cos(r);
    const double s = std::sin(r) / r;
    // cos(r) I - i sin(r) (e_hat . sigma_vec)
    return {2,
            {c - i_unit * (ez * s), -i_unit * s * Amplitude(ex, -ey),
             -i_unit * s * Amplitude(ex, ey), c + i_unit * (ez * s)}};
}

Unitary rotation_4d(double sigma, RngStream &rng) {
    Eigen::Matrix4cd g;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            g(r, c) = rng.complex_normal();
        }
    }
    const Eigen::Matrix4cd herm = 0.5 * sigma * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eigh(herm);
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) {
        phases(k) = std::exp(Amplitude(0.0, -eigh.eigenvalues()(k)));
    }
    const Eigen::Matrix4cd rot = eigh.eigenvectors() * phases.asDiagonal() *
                                 eigh.eigenvectors().adjoint();
    std::vector<Amplitude> entries(16);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            entries[static_cast<std::size_t>(r) * 4 + c] = rot(r, c);
        }
    }
    return {4, std::move(entries)};
}

} // namespace

Unitary random_rotation(int dim, double sigma, RngStream &rng) {
    check_magnitude(sigma, "sigma");
    if (dim == 2) {
        if (sigma == 0.0) {
            return gateset::I2();
        }
        const double ex = sigma * rng.normal();
        const double ey = sigma * rng.normal();
        const double ez = sigma * rng.normal();
        return rotation_2d(ex, ey, ez);
    }
    if (dim == 4) {
        if (sigma == 0.0) {
            return {4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
        }
        return rotation_4d(sigma, rng);
    }
    throw InputError("random_rotation: dimension must be 2 or 4");
}

Unitary perturb_unitary(const Unitary &u, double sigma, RngStream &rng) {
    check_magnitude(sigma, "sigma");
    if (sigma == 0.0) {
        return u;
    }
    return random_rotation(u.dim(), sigma, rng) * u;
}

std::string flip_bits(std::string_view bits, double p, RngStream &rng) {
    check_probability(p, "p");
    std::string out(bits);
    for (char &c : out) {
        if (c != '0' && c != '1') {
            throw InputError("flip_bits: bit string may contain only 0 and 1");
        }
        if (rng.uniform_double() < p) {
            c = (c == '0') ? '1' : '0';
        }
    }
    return out;
}

StateVector haar_random_qubit(RngStream &rng) {
    const double cos_theta = 2.0 * rng.uniform_double() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.uniform_double();
    const double a = std::sqrt(0.5 * (1.0 + cos_theta));
    const double s = std::sqrt(0.5 * (1.0 - cos_theta));
    return {1, {a, Amplitude(s * std::cos(phi), s * std::sin(phi))}};
}

} // namespace teleport
