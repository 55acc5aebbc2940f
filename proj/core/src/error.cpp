// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/error.hpp"

namespace paoi {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::config: return "config";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

}  // namespace paoi
