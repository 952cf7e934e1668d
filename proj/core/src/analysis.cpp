// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "teleport/errors.hpp"
#include "teleport/gates.hpp"
#include "teleport/rng.hpp"

namespace teleport {

std::string_view to_string(SweepParameter p) noexcept {
    switch (p) {
    case SweepParameter::eta_bell:
        return "eta_bell";
    case SweepParameter::sigma_gate:
        return "sigma_gate";
    case SweepParameter::p_classical:
        return "p_classical";
    case SweepParameter::q_readout:
        return "q_readout";
    }
    return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
    if (name == "eta_bell") {
        return SweepParameter::eta_bell;
    }
    if (name == "sigma_gate") {
        return SweepParameter::sigma_gate;
    }
    if (name == "p_classical") {
        return SweepParameter::p_classical;
    }
    if (name == "q_readout") {
        return SweepParameter::q_readout;
    }
    throw InputError("unknown sweep parameter: " + std::string(name));
}

namespace {

// Welford accumulator plus the true-outcome histogram.
struct BatchStats {
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::array<long, 4> histogram{};

    void add(double x) {
        n += 1;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    double std_error() const {
        if (n < 2) {
            return 0.0;
        }
        const double variance = m2 / static_cast<double>(n - 1);
        return std::sqrt(variance / static_cast<double>(n));
    }
};

// Trial i runs entirely on RngStream::child(seed, i): the Haar input draw
// first, then the trial's noise, so re-slicing the batch never shifts
// draws between trials.
BatchStats run_batch(const NoiseConfig &config, long n_trials,
                     std::uint64_t seed) {
    if (n_trials < 1) {
        throw InputError("trial count must be positive");
    }
    BatchStats stats;
    for (long i = 0; i < n_trials; ++i) {
        RngStream stream =
            RngStream::child(seed, static_cast<std::uint64_t>(i));
        const StateVector input = haar_random_qubit(stream);
        const TrialRecord record = run_trial(input, config, stream);
        stats.add(record.fidelity);
        stats.histogram[bits_to_index(record.outcome)] += 1;
    }
    return stats;
}

} // namespace

Estimate estimate_mean_fidelity(const NoiseConfig &config, long n_trials,
                                std::uint64_t seed) {
    config.validate();
    const BatchStats stats = run_batch(config, n_trials, seed);
    return Estimate{stats.mean, stats.std_error()};
}

SweepResult sweep(const SweepSpec &spec) {
    spec.base_config.validate();
    if (spec.values.empty()) {
        throw InputError("sweep requires at least one value");
    }
    if (spec.trials_per_point < 1) {
        throw InputError("trials_per_point must be positive");
    }

    SweepResult result;
    result.parameter = spec.parameter;
    result.points.reserve(spec.values.size());
    for (std::size_t j = 0; j < spec.values.size(); ++j) {
        NoiseConfig config = spec.base_config;
        const double value = spec.values[j];
        switch (spec.parameter) {
        case SweepParameter::eta_bell:
            config.eta_bell = value;
            config.sites.bell = true;
            break;
        case SweepParameter::sigma_gate:
            config.sigma_gate = value;
            config.sites.xor_gate = true;
            config.sites.hadamard = true;
            config.sites.correction = true;
            break;
        case SweepParameter::p_classical:
            config.p_classical = value;
            config.sites.channel = true;
            break;
        case SweepParameter::q_readout:
            config.q_readout = value;
            config.sites.readout = true;
            break;
        }
        config.validate();
        const std::uint64_t point_seed =
            RngStream::child_seed(spec.base_config.seed, j);
        const BatchStats stats =
            run_batch(config, spec.trials_per_point, point_seed);
        result.points.push_back(SweepPoint{value, stats.mean,
                                           stats.std_error(), stats.histogram,
                                           stats.n});
    }
    return result;
}

AmplificationReport amplification_experiment(double sigma, long trials,
                                             std::uint64_t seed) {
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw InputError("amplification requires a positive error scale");
    }
    // Shared seed keeps the Haar inputs paired across configurations.
    const auto measure = [&](std::string site, SiteFlags flags) {
        NoiseConfig config;
        config.eta_bell = sigma;
        config.sigma_gate = sigma;
        config.sites = flags;
        const BatchStats stats = run_batch(config, trials, seed);
        return SiteReport{std::move(site), 1.0 - stats.mean,
                          stats.std_error()};
    };

    AmplificationReport report;
    report.sigma = sigma;
    report.trials = trials;
    report.single_site.push_back(measure("bell", SiteFlags{.bell = true}));
    report.single_site.push_back(measure("xor", SiteFlags{.xor_gate = true}));
    report.single_site.push_back(
        measure("hadamard", SiteFlags{.hadamard = true}));
    report.single_site.push_back(
        measure("correction", SiteFlags{.correction = true}));
    report.all_sites = measure("all", SiteFlags{.bell = true,
                                                .xor_gate = true,
                                                .hadamard = true,
                                                .correction = true});

    double max_single = 0.0;
    for (const SiteReport &site : report.single_site) {
        max_single = std::max(max_single, site.mean_infidelity);
    }
    report.ratio_all_to_max_single =
        max_single > 0.0 ? report.all_sites.mean_infidelity / max_single : 0.0;
    return report;
}

CertifierReport certify_source(double eta, long n_pairs, std::uint64_t seed) {
    if (!std::isfinite(eta) || eta < 0.0) {
        throw InputError("certification requires a finite eta >= 0");
    }
    if (n_pairs < 2) {
        throw InputError("certification requires at least two pairs "
                         "(bases alternate per pair)");
    }

    long agree[2] = {0, 0}; // index 0: ZZ basis, 1: XX basis
    long total[2] = {0, 0};
    for (long i = 0; i < n_pairs; ++i) {
        RngStream stream =
            RngStream::child(seed, static_cast<std::uint64_t>(i));
        StateVector pair = sample_noisy_bell(eta, stream);
        const int basis = static_cast<int>(i % 2);
        if (basis == 1) {
            pair = apply_1q(pair, gateset::H(), 0);
            pair = apply_1q(pair, gateset::H(), 1);
        }
        const MeasureResult m = measure_qubits(pair, {0, 1}, stream);
        agree[basis] += m.outcome[0] == m.outcome[1] ? 1 : 0;
        total[basis] += 1;
    }

    const auto correlator = [](long agreements, long count) {
        const double c = static_cast<double>(2 * agreements - count) /
                         static_cast<double>(count);
        // Population form: finite for any count >= 1, zero at |c| = 1.
        const double se = std::sqrt((1.0 - c * c) / static_cast<double>(count));
        return std::pair<double, double>(c, se);
    };
    const auto [zz, se_zz] = correlator(agree[0], total[0]);
    const auto [xx, se_xx] = correlator(agree[1], total[1]);
    return CertifierReport{n_pairs, zz, xx, se_zz, se_xx};
}

} // namespace teleport
