// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "teleport/cli.hpp"

namespace {

struct SubcommandOptions {
    CLI::App *sub = nullptr;
    CLI::Option *config = nullptr;
    CLI::Option *seed = nullptr;
    CLI::Option *trials = nullptr;
    CLI::Option *param = nullptr;
    CLI::Option *values = nullptr;
    CLI::Option *out = nullptr;
    CLI::Option *format = nullptr;
};

struct FlagValues {
    std::string config_path;
    std::string seed;
    std::string trials;
    std::string param;
    std::string values;
    std::string out;
    std::string format;
};

SubcommandOptions register_subcommand(CLI::App &app, FlagValues &flags,
                                      const std::string &name,
                                      const std::string &description) {
    SubcommandOptions opts;
    opts.sub = app.add_subcommand(name, description);
    opts.config =
        opts.sub->add_option("--config", flags.config_path, "JSON config file");
    opts.seed = opts.sub->add_option("--seed", flags.seed,
                                     "Master seed (unsigned 64-bit integer)");
    opts.trials = opts.sub->add_option(
        "--trials", flags.trials, "Trial count (for certify: number of pairs)");
    if (name == "sweep") {
        opts.param = opts.sub->add_option(
            "--param", flags.param,
            "Swept parameter: eta_bell, sigma_gate, p_classical, q_readout");
        opts.values = opts.sub->add_option(
            "--values", flags.values, "Comma-separated list of swept values");
    }
    opts.out =
        opts.sub->add_option("--out", flags.out, "Output file (default stdout)");
    opts.format =
        opts.sub->add_option("--format", flags.format, "Output format: csv or json");
    return opts;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Deterministic teleportation-protocol simulator with "
                 "per-site error injection"};
    app.require_subcommand(1);

    FlagValues flags;
    std::vector<SubcommandOptions> subs;
    subs.push_back(register_subcommand(
        app, flags, "run", "Execute one trial and print its JSON record"));
    subs.push_back(register_subcommand(
        app, flags, "estimate",
        "Mean fidelity and standard error over Haar-random inputs"));
    subs.push_back(register_subcommand(
        app, flags, "sweep", "Fidelity estimates across a parameter range"));
    subs.push_back(register_subcommand(
        app, flags, "amplify",
        "Single-site versus all-site infidelity comparison"));
    subs.push_back(register_subcommand(
        app, flags, "certify",
        "Statistical Bell-source certification by sacrificial measurement"));

    CLI11_PARSE(app, argc, argv);

    const SubcommandOptions *active = nullptr;
    for (const SubcommandOptions &candidate : subs) {
        if (candidate.sub->parsed()) {
            active = &candidate;
            break;
        }
    }
    if (active == nullptr) {
        std::cerr << "a subcommand is required\n";
        return 1;
    }

    std::string config_text = "{}";
    if (active->config->count() > 0) {
        std::ifstream file(flags.config_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot read config file: " << flags.config_path
                      << "\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        config_text = buffer.str();
    }

    teleport::cli::FlagOverrides overrides;
    overrides.emplace_back("command", active->sub->get_name());
    if (active->seed->count() > 0) {
        overrides.emplace_back("seed", flags.seed);
    }
    if (active->trials->count() > 0) {
        overrides.emplace_back("trials", flags.trials);
    }
    if (active->param != nullptr && active->param->count() > 0) {
        overrides.emplace_back("param", flags.param);
    }
    if (active->values != nullptr && active->values->count() > 0) {
        overrides.emplace_back("values", flags.values);
    }
    if (active->out->count() > 0) {
        overrides.emplace_back("out", flags.out);
    }
    if (active->format->count() > 0) {
        overrides.emplace_back("format", flags.format);
    }

    try {
        const teleport::cli::RunConfig config =
            teleport::cli::parse_config(config_text, overrides);
        return teleport::cli::execute(config, std::cout, std::cerr);
    } catch (const teleport::cli::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
