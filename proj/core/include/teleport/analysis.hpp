// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "teleport/noise.hpp"
#include "teleport/protocol.hpp"

namespace teleport {

enum class SweepParameter { eta_bell, sigma_gate, p_classical, q_readout };

std::string_view to_string(SweepParameter p) noexcept;

/// Throws InputError on an unknown name.
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::p_classical;
    std::vector<double> values;
    long trials_per_point = 1;
    NoiseConfig base_config;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(trials)
};

struct SweepPoint {
    double value = 0.0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;
    std::array<long, 4> outcome_histogram{};  // true outcomes 00,01,10,11
    long trials = 0;
};

struct SweepResult {
    SweepParameter parameter = SweepParameter::p_classical;
    std::vector<SweepPoint> points;
};

struct SiteReport {
    std::string site;
    double mean_infidelity = 0.0;
    double std_error = 0.0;
};

struct AmplificationReport {
    double sigma = 0.0;
    long trials = 0;
    std::vector<SiteReport> single_site;  // bell, xor, hadamard, correction
    SiteReport all_sites;
    double ratio_all_to_max_single = 0.0;
};

struct CertifierReport {
    long n_pairs = 0;
    double zz_correlator = 0.0;
    double xx_correlator = 0.0;
    double stderr_zz = 0.0;
    double stderr_xx = 0.0;
};

/// Mean and standard error of run_trial fidelity over n_trials
/// Haar-random inputs. Trial i runs on RngStream::child(seed, i) (the
/// input draw first, then the trial's noise), so results are
/// reproducible and order-independent.
Estimate estimate_mean_fidelity(const NoiseConfig &config, long n_trials,
                                std::uint64_t seed);

/// One estimate per value. Sweeping a parameter enables its error sites
/// on top of base_config (eta_bell -> bell; sigma_gate -> xor, hadamard,
/// correction; p_classical -> channel; q_readout -> readout). Point j
/// uses master seed child_seed(base_config.seed, j).
SweepResult sweep(const SweepSpec &spec);

/// Mean infidelity with each error site active alone (bell runs at
/// eta = sigma, gate sites at sigma_gate = sigma) versus all four active
/// at once, all five measured on the same trial seeds.
AmplificationReport amplification_experiment(double sigma, long trials,
                                             std::uint64_t seed);

/// Statistical source certification by sacrificial measurement: pairs
/// alternate between the ZZ basis (even index) and the XX basis (odd);
/// each correlator is (agreements - disagreements) / pairs-in-basis with
/// stderr sqrt((1 - c^2) / m). Individual pairs are destroyed by the
/// test; only the source as a whole is characterized.
CertifierReport certify_source(double eta, long n_pairs, std::uint64_t seed);

} // namespace teleport
