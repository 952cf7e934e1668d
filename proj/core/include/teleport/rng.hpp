// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace teleport {

/// SplitMix64 finalizer. Used to derive child seeds; fixed so that seed
/// derivation is identical on every platform.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic random stream.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, and all floating-point conversions (53-bit uniforms,
/// Box-Muller normals) are implemented here rather than delegated to the
/// standard distributions, which are implementation-defined. Identical
/// seed therefore means identical draw sequence across runs, compilers
/// and platforms.
///
/// A stream is single-owner: never share one instance between threads.
/// Parallel work derives one child stream per work item via child().
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Child-seed derivation: splitmix64(splitmix64(master) + index).
    static std::uint64_t child_seed(std::uint64_t master_seed,
                                    std::uint64_t index) noexcept;

    /// Stream seeded with child_seed(master_seed, index).
    static RngStream child(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits: (next_u64() >> 11) * 2^-53.
    double uniform_double();

    /// Standard normal N(0,1) via Box-Muller; the second variate of each
    /// pair is cached and returned by the next call.
    double normal();

    /// Standard complex normal CN(0,1): re and im are independent
    /// N(0, 1/2), so E[|z|^2] = 1.
    std::complex<double> complex_normal();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace teleport
