// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "paoi/comm.hpp"
#include "paoi/mgf.hpp"
#include "paoi/numerics.hpp"
#include "paoi/params.hpp"
#include "paoi/sensing.hpp"

namespace paoi {

struct PavpResult {
    double upsilon = 1.0;     ///< bound for users in communication coverage
    double upsilon_nw = 1.0;  ///< network-wide bound, 1 - p_cov_c (1 - upsilon)
    std::optional<double> theta_star;
    bool stable = false;
    bool clamped = false;  ///< the raw Chernoff bound exceeded 1
    double p_cov_c = 0.0;
    double p_cov_s = 0.0;
    std::string note;  ///< why the bound is trivial, when it is
};

/// Scan range for the Chernoff parameter.
struct ThetaSearch {
    double lo = 1e-2;
    double hi = 1e6;
    int points = 161;
    double log_tol = 1e-9;  ///< golden-section stop width in log(theta)
};

/// Caches the theta-independent pieces (sensing coverage, coverage bound)
/// of the violation-probability bound for one parameter set.
class PavpEvaluator {
public:
    PavpEvaluator(SystemParameters p, double gamma_th, QuadratureSpec quad = {});

    [[nodiscard]] SystemParameters const& params() const noexcept { return p_; }
    [[nodiscard]] double p_cov_s() const noexcept { return p_cov_s_; }
    [[nodiscard]] double p_cov_c() const noexcept { return bound_.p_cov_c; }
    [[nodiscard]] CoverageBound const& coverage_bound() const noexcept { return bound_; }

    [[nodiscard]] MgfEvaluation arrival(double theta) const;
    [[nodiscard]] MgfEvaluation service(double theta) const;

    /// M_A(-theta) M_S(theta) < 1 with a finite service MGF.
    [[nodiscard]] bool stable(double theta) const;

    /// Unclamped conditional bound, or nullopt when undefined at theta.
    [[nodiscard]] std::optional<double> upsilon_raw(double theta, double zeta) const;

    [[nodiscard]] PavpResult evaluate(double theta, double zeta) const;

    /// Minimizes the network-wide bound over theta.
    [[nodiscard]] PavpResult best(double zeta, ThetaSearch const& search = {}) const;

private:
    [[nodiscard]] PavpResult trivial(std::string note) const;

    SystemParameters p_;
    double gamma_th_;
    QuadratureSpec quad_;
    double p_cov_s_ = 0.0;
    CoverageBound bound_;
    std::string degenerate_;
};

[[nodiscard]] bool stability(double theta, SystemParameters const& p,
                             SensingCoverage const& cov_s, double gamma_th,
                             QuadratureSpec const& quad = {});

/// Conditional bound clamped to [0, 1]. Throws Error(infeasible) when theta
/// violates the stability condition or the arrival MGF diverges.
[[nodiscard]] double pavp_conditional(double theta, double zeta, SystemParameters const& p,
                                      SensingCoverage const& cov_s, double gamma_th,
                                      QuadratureSpec const& quad = {});

[[nodiscard]] PavpResult pavp_networkwide(double theta, double zeta, SystemParameters const& p,
                                          double gamma_th, QuadratureSpec const& quad = {});

[[nodiscard]] PavpResult best_theta(double zeta, SystemParameters const& p, double gamma_th,
                                    QuadratureSpec const& quad = {},
                                    ThetaSearch const& search = {});

}  // namespace paoi
