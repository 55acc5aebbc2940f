// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/sensing.hpp"

#include <cmath>
#include <numbers>

#include "paoi/error.hpp"

namespace paoi {

double rho_factor(double r, SystemParameters const& p)
{
    if (!(r >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "rho_factor requires r >= 0");
    }
    if (r == 0.0) return 0.0;
    double const four_pi_cubed = std::pow(4.0 * std::numbers::pi, 3);
    double const n = p.n_antennas;
    double const denom =
        p.gain_tx * p.gain_rx * n * n * p.wavelength * p.wavelength * p.rcs_mean;
    return p.detect_threshold * four_pi_cubed * std::pow(r, 2.0 * p.alpha) / denom;
}

double single_ap_detection(double r, SystemParameters const& p)
{
    double const rho = rho_factor(r, p);
    if (rho == 0.0) return 1.0;
    if (std::isinf(rho)) return 0.0;

    double noise = 0.0;
    if (p.noise_sensing > 0.0) {
        noise = rho * p.noise_sensing / p.power;  // P = 0 gives +inf, i.e. no detection
    }
    double interference = 0.0;
    double const lambda_s = p.lambda_s();
    if (lambda_s > 0.0 && p.beam_halfwidth > 0.0) {
        double const near = rho / (2.0 * (1.0 + rho));
        double const far = rho / (p.alpha - 2.0) * hyp2f1_interference(rho, p.alpha);
        interference = 2.0 * p.beam_halfwidth * lambda_s * (near + far);
    }
    return std::exp(-noise - interference);
}

SensingCoverage sensing_coverage(SystemParameters const& p, QuadratureSpec const& quad)
{
    SensingCoverage cov;
    double const range = p.max_range;
    double const lambda_s = p.lambda_s();

    // Log-spaced panels resolve the r^(2 alpha) growth of rho near the origin.
    constexpr int kDecades = 8;
    constexpr int kPanelsPerDecade = 4;
    std::vector<double> edges{0.0};
    if (range > 0.0) {
        for (int i = kDecades * kPanelsPerDecade; i >= 0; --i) {
            edges.push_back(range * std::pow(10.0, -static_cast<double>(i) / kPanelsPerDecade));
        }
    }

    constexpr int kCurveSamples = 8;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        for (int s = 0; s < kCurveSamples; ++s) {
            double const r = edges[e] + (edges[e + 1] - edges[e]) * s / kCurveSamples;
            cov.radius.push_back(r);
            cov.p_single.push_back(single_ap_detection(r, p));
        }
    }
    cov.radius.push_back(range);
    cov.p_single.push_back(single_ap_detection(range, p));

    if (lambda_s <= 0.0 || range <= 0.0 || p.beam_halfwidth <= 0.0) {
        cov.p_cov_s = 0.0;
        return cov;
    }

    auto integrand = [&](double r) { return r * single_ap_detection(r, p); };
    double moment = 0.0;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        // The integrand is nonincreasing once P_sg has underflowed.
        if (edges[e] > 0.0 && single_ap_detection(edges[e], p) == 0.0) break;
        moment += integrate(integrand, edges[e], edges[e + 1], quad);
    }
    cov.p_cov_s = -std::expm1(-2.0 * p.beam_halfwidth * lambda_s * moment);
    return cov;
}

MgfEvaluation arrival_mgf(double theta, double scan_interval, double p_cov_s)
{
    if (!(p_cov_s > 0.0)) {
        throw Error(ErrorCode::degenerate,
                    "sensing coverage is zero: the arrival process has no arrivals");
    }
    if (p_cov_s > 1.0) {
        throw Error(ErrorCode::invalid_argument, "sensing coverage exceeds 1");
    }
    if (theta == 0.0) return MgfEvaluation::of(theta, 1.0);

    double const x = theta * scan_interval;
    if (p_cov_s < 1.0) {
        // (1 - P) e^{theta T_s} < 1 is the convergence condition of the geometric series.
        double const log_ratio = std::log1p(-p_cov_s) + x;
        if (log_ratio >= 0.0) {
            return MgfEvaluation::infinite(theta, "geometric series diverges");
        }
        double const log_value = x + std::log(p_cov_s) - std::log1p(-std::exp(log_ratio));
        if (log_value > 700.0) return MgfEvaluation::infinite(theta, "overflow");
        return MgfEvaluation::of(theta, std::exp(log_value));
    }
    if (x > 700.0) return MgfEvaluation::infinite(theta, "overflow");
    return MgfEvaluation::of(theta, std::exp(x));
}

}  // namespace paoi
