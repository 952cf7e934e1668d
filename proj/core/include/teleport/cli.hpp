// Copyright (c) 2026 teleport-lab developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "teleport/analysis.hpp"
#include "teleport/noise.hpp"

namespace teleport::cli {

/// Configuration rejected; the message names the offending key.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Command { run, estimate, sweep, amplify, certify };

enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::run;
    NoiseConfig noise;
    long trials = 10000;
    std::optional<SweepSpec> sweep;
    std::optional<std::string> output_path;
    OutputFormat output_format = OutputFormat::csv;
};

/// Flag overrides in application order; recognized keys are command,
/// seed, trials, param, values (comma-separated), out, format.
using FlagOverrides = std::vector<std::pair<std::string, std::string>>;

/// Parse a JSON config, apply flag overrides (flags win), validate.
/// Unknown keys, malformed values and out-of-range magnitudes raise
/// ConfigError naming the key. The seed must be given explicitly for
/// every command; there is no wall-clock fallback.
RunConfig parse_config(const std::string &json_text,
                       const FlagOverrides &overrides);

/// Run the configured command. Results go to output_path when set,
/// otherwise to `out`. Success writes nothing to `err`; failures write
/// one diagnostic line. Returns the process exit code: 0 success,
/// 2 unwritable output path, 3 internal contract violation.
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Pinned float-to-text rule for CSV fields: %.12g (12 significant
/// digits), so identical runs serialize byte-identically.
std::string format_real(double value);

} // namespace teleport::cli
