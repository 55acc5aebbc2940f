// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace paoi {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
    config = 2,
    numerical = 3,
    infeasible = 4,
    degenerate = 5,
    invalid_argument = 6,
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string const& message, std::string field = {})
        : std::runtime_error(message), code_(code), field_(std::move(field))
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// Name of the offending parameter, if any.
    [[nodiscard]] std::string const& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::string field_;
};

/// Quadrature or special-function evaluation did not converge.
class NumericalFailure : public Error {
public:
    NumericalFailure(std::string const& message, double estimate, double error_bound)
        : Error(ErrorCode::numerical, message), estimate_(estimate), error_bound_(error_bound)
    {
    }

    [[nodiscard]] double estimate() const noexcept { return estimate_; }
    [[nodiscard]] double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace paoi
