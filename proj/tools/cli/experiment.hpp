// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paoi/montecarlo.hpp"
#include "paoi/numerics.hpp"

namespace paoi::cli {

enum class Command { analyze, simulate, optimize, sweep };

struct Override {
    std::string field;
    double value = 0.0;
    std::string unit;  ///< empty: value is already SI
};

struct SweepAxis {
    std::string field;
    std::vector<double> values;
    std::string unit;
};

struct ExperimentSpec {
    Command command = Command::analyze;
    std::string params_file;
    std::vector<Override> overrides;
    std::optional<SweepAxis> sweep_axis;
    std::string output_path = "out";
    std::uint64_t seed = 1;
    /// (realizations, packets per realization)
    std::optional<std::pair<std::size_t, std::size_t>> mc_budget;
    std::optional<double> theta;
    std::optional<double> quad_tol;
    ArrivalMode arrivals = ArrivalMode::analytic;
    ServiceMode service = ServiceMode::hardened;
    bool trace = false;
    unsigned threads = 0;
};

/// Parses "key=value" or "key=value:unit".
[[nodiscard]] Override parse_override(std::string const& text);

/// Maps short axis names (delta, zeta, ...) onto parameter fields.
[[nodiscard]] std::string canonical_field(std::string const& name);

[[nodiscard]] char const* command_name(Command c);

/// Checks the spec invariants; throws Error(config).
void validate(ExperimentSpec const& spec);

/// Runs the experiment and writes <out>/<command>.csv and .json.
/// Returns the process exit status; errors are reported as one line on stderr.
int run(ExperimentSpec const& spec);

/// Version string embedded in every sidecar.
[[nodiscard]] char const* version();

}  // namespace paoi::cli
