// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/rng.hpp"

#include <cmath>
#include <numbers>

namespace teleport {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t RngStream::child_seed(std::uint64_t master_seed,
                                    std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master_seed) + index);
}

RngStream RngStream::child(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(child_seed(master_seed, index));
}

double RngStream::uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - uniform_double();
    const double u2 = uniform_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> RngStream::complex_normal() {
    const double re = normal();
    const double im = normal();
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return {re * inv_sqrt2, im * inv_sqrt2};
}

} // namespace teleport
