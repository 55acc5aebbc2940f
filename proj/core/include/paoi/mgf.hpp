// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <string>

namespace paoi {

/// Value of a moment generating function at one theta. An MGF that diverges
/// at theta is reported as non-finite instead of as an overflowing double.
struct MgfEvaluation {
    double theta = 0.0;
    double value = std::numeric_limits<double>::infinity();
    bool finite = false;
    /// Set when the integrand sits close to its pole and tolerances were tightened.
    bool near_pole = false;
    std::string reason;

    static MgfEvaluation of(double theta, double value)
    {
        return {theta, value, true, false, {}};
    }
    static MgfEvaluation infinite(double theta, std::string why)
    {
        return {theta, std::numeric_limits<double>::infinity(), false, false, std::move(why)};
    }
};

}  // namespace paoi
