// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include "teleport/cli.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "teleport/errors.hpp"
#include "teleport/protocol.hpp"
#include "teleport/rng.hpp"

namespace teleport::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &message) {
    throw ConfigError(message);
}

Command parse_command_name(const std::string &name) {
    if (name == "run") {
        return Command::run;
    }
    if (name == "estimate") {
        return Command::estimate;
    }
    if (name == "sweep") {
        return Command::sweep;
    }
    if (name == "amplify") {
        return Command::amplify;
    }
    if (name == "certify") {
        return Command::certify;
    }
    fail("unknown command: " + name);
}

OutputFormat parse_format_name(const std::string &name,
                               const std::string &key) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    fail(key + " must be csv or json, got " + name);
}

SweepParameter parse_param_name(const std::string &name,
                                const std::string &key) {
    try {
        return parse_sweep_parameter(name);
    } catch (const InputError &e) {
        fail(key + ": " + e.what());
    }
}

// --- JSON field readers -------------------------------------------------

double read_magnitude(const json &value, const std::string &key) {
    if (!value.is_number()) {
        fail(key + " must be a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v) || v < 0.0) {
        fail(key + " must be finite and >= 0");
    }
    return v;
}

double read_probability(const json &value, const std::string &key) {
    if (!value.is_number()) {
        fail(key + " must be a number");
    }
    const double v = value.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
        fail(key + " must lie in [0, 1]");
    }
    return v;
}

bool read_bool(const json &value, const std::string &key) {
    if (!value.is_boolean()) {
        fail(key + " must be true or false");
    }
    return value.get<bool>();
}

std::uint64_t read_seed(const json &value, const std::string &key) {
    if (!value.is_number_unsigned()) {
        fail(key + " must be an unsigned integer");
    }
    return value.get<std::uint64_t>();
}

long read_positive_count(const json &value, const std::string &key) {
    if (!value.is_number_integer()) {
        fail(key + " must be an integer");
    }
    const long long v = value.get<long long>();
    if (v < 1) {
        fail(key + " must be >= 1");
    }
    return static_cast<long>(v);
}

std::string read_string(const json &value, const std::string &key) {
    if (!value.is_string()) {
        fail(key + " must be a string");
    }
    return value.get<std::string>();
}

std::vector<double> read_value_list(const json &value, const std::string &key) {
    if (!value.is_array() || value.empty()) {
        fail(key + " must be a non-empty array of numbers");
    }
    std::vector<double> out;
    out.reserve(value.size());
    for (const json &item : value) {
        if (!item.is_number()) {
            fail(key + " must contain only numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

// --- flag value parsers ---------------------------------------------------

std::uint64_t parse_seed_text(const std::string &text, const std::string &key) {
    std::uint64_t value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        fail(key + " must be an unsigned 64-bit integer, got " + text);
    }
    return value;
}

long parse_count_text(const std::string &text, const std::string &key) {
    long value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty() || value < 1) {
        fail(key + " must be a positive integer, got " + text);
    }
    return value;
}

std::vector<double> parse_values_text(const std::string &text,
                                      const std::string &key) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string item = text.substr(start, end - start);
        double value = 0.0;
        const char *first = item.data();
        const char *last = first + item.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || item.empty()) {
            fail(key + " must be a comma-separated list of numbers, got " +
                 text);
        }
        out.push_back(value);
        start = end + 1;
    }
    if (out.empty()) {
        fail(key + " must be a non-empty comma-separated list of numbers");
    }
    return out;
}

// --- config assembly --------------------------------------------------

struct ParseState {
    RunConfig config;
    bool command_set = false;
    bool seed_set = false;
    std::optional<SweepParameter> sweep_param;
    std::optional<std::vector<double>> sweep_values;
    std::optional<long> sweep_trials;
};

void apply_sites(ParseState &state, const json &sites) {
    if (!sites.is_object()) {
        fail("noise.sites must be an object");
    }
    for (const auto &[key, value] : sites.items()) {
        const std::string path = "noise.sites." + key;
        if (key == "bell") {
            state.config.noise.sites.bell = read_bool(value, path);
        } else if (key == "xor") {
            state.config.noise.sites.xor_gate = read_bool(value, path);
        } else if (key == "hadamard") {
            state.config.noise.sites.hadamard = read_bool(value, path);
        } else if (key == "correction") {
            state.config.noise.sites.correction = read_bool(value, path);
        } else if (key == "channel") {
            state.config.noise.sites.channel = read_bool(value, path);
        } else if (key == "readout") {
            state.config.noise.sites.readout = read_bool(value, path);
        } else {
            fail("unknown config key: " + path);
        }
    }
}

void apply_noise(ParseState &state, const json &noise) {
    if (!noise.is_object()) {
        fail("noise must be an object");
    }
    for (const auto &[key, value] : noise.items()) {
        const std::string path = "noise." + key;
        if (key == "eta_bell") {
            state.config.noise.eta_bell = read_magnitude(value, path);
        } else if (key == "sigma_gate") {
            state.config.noise.sigma_gate = read_magnitude(value, path);
        } else if (key == "p_classical") {
            state.config.noise.p_classical = read_probability(value, path);
        } else if (key == "q_readout") {
            state.config.noise.q_readout = read_probability(value, path);
        } else if (key == "seed") {
            state.config.noise.seed = read_seed(value, path);
            state.seed_set = true;
        } else if (key == "sites") {
            apply_sites(state, value);
        } else {
            fail("unknown config key: " + path);
        }
    }
}

void apply_sweep(ParseState &state, const json &sweep) {
    if (!sweep.is_object()) {
        fail("sweep must be an object");
    }
    for (const auto &[key, value] : sweep.items()) {
        const std::string path = "sweep." + key;
        if (key == "param") {
            state.sweep_param = parse_param_name(read_string(value, path), path);
        } else if (key == "values") {
            state.sweep_values = read_value_list(value, path);
        } else if (key == "trials_per_point") {
            state.sweep_trials = read_positive_count(value, path);
        } else {
            fail("unknown config key: " + path);
        }
    }
}

void apply_json_text(ParseState &state, const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        fail("config root must be a JSON object");
    }
    for (const auto &[key, value] : root.items()) {
        if (key == "command") {
            state.config.command =
                parse_command_name(read_string(value, "command"));
            state.command_set = true;
        } else if (key == "trials") {
            state.config.trials = read_positive_count(value, "trials");
        } else if (key == "noise") {
            apply_noise(state, value);
        } else if (key == "sweep") {
            apply_sweep(state, value);
        } else if (key == "out") {
            state.config.output_path = read_string(value, "out");
        } else if (key == "format") {
            state.config.output_format =
                parse_format_name(read_string(value, "format"), "format");
        } else {
            fail("unknown config key: " + key);
        }
    }
}

void apply_override(ParseState &state, const std::string &key,
                    const std::string &value) {
    if (key == "command") {
        state.config.command = parse_command_name(value);
        state.command_set = true;
    } else if (key == "seed") {
        state.config.noise.seed = parse_seed_text(value, "--seed");
        state.seed_set = true;
    } else if (key == "trials") {
        state.config.trials = parse_count_text(value, "--trials");
    } else if (key == "param") {
        state.sweep_param = parse_param_name(value, "--param");
    } else if (key == "values") {
        state.sweep_values = parse_values_text(value, "--values");
    } else if (key == "out") {
        state.config.output_path = value;
    } else if (key == "format") {
        state.config.output_format = parse_format_name(value, "--format");
    } else {
        fail("unknown override key: " + key);
    }
}

void check_sweep_values(const SweepSpec &spec) {
    const bool is_probability =
        spec.parameter == SweepParameter::p_classical ||
        spec.parameter == SweepParameter::q_readout;
    for (double value : spec.values) {
        const bool ok = std::isfinite(value) && value >= 0.0 &&
                        (!is_probability || value <= 1.0);
        if (!ok) {
            fail("sweep value " + format_real(value) + " out of range for " +
                 std::string(to_string(spec.parameter)));
        }
    }
}

RunConfig finalize(ParseState &&state) {
    if (!state.command_set) {
        fail("command is required (subcommand or config key command)");
    }
    if (!state.seed_set) {
        fail("seed is required (--seed or config key noise.seed)");
    }
    RunConfig config = std::move(state.config);

    if (config.command == Command::sweep) {
        if (!state.sweep_param) {
            fail("sweep requires a parameter (--param or config key "
                 "sweep.param)");
        }
        if (!state.sweep_values) {
            fail("sweep requires values (--values or config key "
                 "sweep.values)");
        }
        SweepSpec spec;
        spec.parameter = *state.sweep_param;
        spec.values = std::move(*state.sweep_values);
        spec.trials_per_point =
            state.sweep_trials ? *state.sweep_trials : config.trials;
        spec.base_config = config.noise;
        check_sweep_values(spec);
        config.sweep = std::move(spec);
    }
    if (config.command == Command::amplify &&
        !(config.noise.sigma_gate > 0.0)) {
        fail("amplify requires noise.sigma_gate > 0");
    }
    if (config.command == Command::certify && config.trials < 2) {
        fail("certify requires trials >= 2 (bases alternate per pair)");
    }
    return config;
}

// --- rendering ----------------------------------------------------------

json complex_as_json(const Amplitude &z) {
    return json::array({z.real(), z.imag()});
}

std::string render_run(const RunConfig &config) {
    // A run is trial 0 of the estimate batch with the same seed.
    RngStream stream = RngStream::child(config.noise.seed, 0);
    const StateVector input = haar_random_qubit(stream);
    const TrialRecord record = run_trial(input, config.noise, stream);

    json j;
    j["input_a"] = complex_as_json(record.input_a);
    j["input_b"] = complex_as_json(record.input_b);
    j["outcome"] = record.outcome;
    j["reported"] = record.reported;
    j["received"] = record.received;
    j["correction"] = record.correction_label;
    json bob = json::array();
    for (const Amplitude &amp : record.bob_state.amplitudes()) {
        bob.push_back(complex_as_json(amp));
    }
    j["bob_state"] = std::move(bob);
    j["fidelity"] = record.fidelity;
    j["branch_probability"] = record.branch_probability;
    return j.dump(2) + "\n";
}

std::string render_estimate(const RunConfig &config) {
    const Estimate est =
        estimate_mean_fidelity(config.noise, config.trials, config.noise.seed);
    if (config.output_format == OutputFormat::json) {
        json j;
        j["mean_fidelity"] = est.mean;
        j["stderr"] = est.std_error;
        j["trials"] = config.trials;
        return j.dump(2) + "\n";
    }
    return "mean_fidelity,stderr\n" + format_real(est.mean) + "," +
           format_real(est.std_error) + "\n";
}

std::string render_sweep(const RunConfig &config) {
    if (!config.sweep) {
        throw ContractError("sweep command reached execute without a spec");
    }
    const SweepResult result = sweep(*config.sweep);
    const std::string param(to_string(result.parameter));

    if (config.output_format == OutputFormat::json) {
        json points = json::array();
        for (const SweepPoint &pt : result.points) {
            json row;
            row["value"] = pt.value;
            row["mean_fidelity"] = pt.mean_fidelity;
            row["stderr"] = pt.std_error;
            row["n00"] = pt.outcome_histogram[0];
            row["n01"] = pt.outcome_histogram[1];
            row["n10"] = pt.outcome_histogram[2];
            row["n11"] = pt.outcome_histogram[3];
            row["trials"] = pt.trials;
            points.push_back(std::move(row));
        }
        json j;
        j["param"] = param;
        j["points"] = std::move(points);
        return j.dump(2) + "\n";
    }

    std::string text =
        "param,value,mean_fidelity,stderr,n00,n01,n10,n11,trials\n";
    for (const SweepPoint &pt : result.points) {
        text += param + "," + format_real(pt.value) + "," +
                format_real(pt.mean_fidelity) + "," +
                format_real(pt.std_error);
        for (long count : pt.outcome_histogram) {
            text += "," + std::to_string(count);
        }
        text += "," + std::to_string(pt.trials) + "\n";
    }
    return text;
}

std::string render_amplify(const RunConfig &config) {
    const AmplificationReport report = amplification_experiment(
        config.noise.sigma_gate, config.trials, config.noise.seed);

    if (config.output_format == OutputFormat::json) {
        json rows = json::array();
        for (const SiteReport &site : report.single_site) {
            json row;
            row["site"] = site.site;
            row["mean_infidelity"] = site.mean_infidelity;
            row["stderr"] = site.std_error;
            rows.push_back(std::move(row));
        }
        json all;
        all["site"] = report.all_sites.site;
        all["mean_infidelity"] = report.all_sites.mean_infidelity;
        all["stderr"] = report.all_sites.std_error;
        rows.push_back(std::move(all));
        json j;
        j["sigma"] = report.sigma;
        j["trials"] = report.trials;
        j["rows"] = std::move(rows);
        j["ratio_all_to_max_single"] = report.ratio_all_to_max_single;
        return j.dump(2) + "\n";
    }

    std::string text =
        "site,sigma,mean_infidelity,stderr,trials,ratio_all_to_max_single\n";
    const auto row = [&](const SiteReport &site, bool is_all) {
        text += site.site + "," + format_real(report.sigma) + "," +
                format_real(site.mean_infidelity) + "," +
                format_real(site.std_error) + "," +
                std::to_string(report.trials) + ",";
        if (is_all) {
            text += format_real(report.ratio_all_to_max_single);
        }
        text += "\n";
    };
    for (const SiteReport &site : report.single_site) {
        row(site, false);
    }
    row(report.all_sites, true);
    return text;
}

std::string render_certify(const RunConfig &config) {
    const CertifierReport report = certify_source(
        config.noise.eta_bell, config.trials, config.noise.seed);

    if (config.output_format == OutputFormat::json) {
        json j;
        j["n_pairs"] = report.n_pairs;
        j["zz_correlator"] = report.zz_correlator;
        j["stderr_zz"] = report.stderr_zz;
        j["xx_correlator"] = report.xx_correlator;
        j["stderr_xx"] = report.stderr_xx;
        return j.dump(2) + "\n";
    }

    return "n_pairs,zz_correlator,stderr_zz,xx_correlator,stderr_xx\n" +
           std::to_string(report.n_pairs) + "," +
           format_real(report.zz_correlator) + "," +
           format_real(report.stderr_zz) + "," +
           format_real(report.xx_correlator) + "," +
           format_real(report.stderr_xx) + "\n";
}

std::string render(const RunConfig &config) {
    switch (config.command) {
    case Command::run:
        return render_run(config);
    case Command::estimate:
        return render_estimate(config);
    case Command::sweep:
        return render_sweep(config);
    case Command::amplify:
        return render_amplify(config);
    case Command::certify:
        return render_certify(config);
    }
    throw ContractError("unhandled command in render");
}

} // namespace

RunConfig parse_config(const std::string &json_text,
                       const FlagOverrides &overrides) {
    ParseState state;
    apply_json_text(state, json_text);
    for (const auto &[key, value] : overrides) {
        apply_override(state, key, value);
    }
    return finalize(std::move(state));
}

int execute(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        const std::string text = render(config);
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                err << "cannot open output path: " << *config.output_path
                    << "\n";
                return 2;
            }
            file << text;
            file.flush();
            if (!file) {
                err << "failed writing output path: " << *config.output_path
                    << "\n";
                return 2;
            }
        } else {
            out << text;
        }
        return 0;
    } catch (const ContractError &e) {
        err << "internal contract violation: " << e.what() << "\n";
        return 3;
    }
}

std::string format_real(double value) {
    char buffer[40];
    const int length = std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::string(buffer, static_cast<std::size_t>(length));
}

} // namespace teleport::cli
