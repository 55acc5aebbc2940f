// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "paoi/mgf.hpp"
#include "paoi/numerics.hpp"
#include "paoi/params.hpp"

namespace paoi {

/// Network sensing coverage together with the single-AP detection curve it
/// was integrated from.
struct SensingCoverage {
    double p_cov_s = 0.0;
    std::vector<double> radius;     ///< sample radii [m], ascending over [0, R]
    std::vector<double> p_single;   ///< aligned single-AP detection at each radius
};

/// Range factor of the radar detection test,
/// rho(r) = delta (4 pi)^3 r^(2 alpha) / (gt gr N^2 lambda_w^2 sigma_bar).
[[nodiscard]] double rho_factor(double r, SystemParameters const& p);

/// Probability that an aligned sensing AP at distance r detects a Swerling-I
/// target against Rayleigh-faded PPP interference from its own sector.
[[nodiscard]] double single_ap_detection(double r, SystemParameters const& p);

/// Probability that at least one sensing AP detects a target at a typical
/// location, 1 - exp(-2 Theta lambda_s int_0^R r P_sg(r) dr).
[[nodiscard]] SensingCoverage sensing_coverage(SystemParameters const& p,
                                               QuadratureSpec const& quad = {});

/// MGF of the inter-arrival time iota * T_s with iota ~ Geometric(p_cov_s).
/// Throws Error(degenerate) when p_cov_s == 0 (no arrivals).
[[nodiscard]] MgfEvaluation arrival_mgf(double theta, double scan_interval, double p_cov_s);

[[nodiscard]] inline MgfEvaluation arrival_mgf(double theta, SystemParameters const& p,
                                               SensingCoverage const& cov)
{
    return arrival_mgf(theta, p.scan_interval, cov.p_cov_s);
}

}  // namespace paoi
