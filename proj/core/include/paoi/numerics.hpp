// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <limits>

namespace paoi {

/// Convergence controls for adaptive quadrature.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
    /// Same spec with both tolerances divided by `factor`.
    [[nodiscard]] QuadratureSpec tightened(double factor) const;
};

/// Gaussian tail probability Q(x) = P[Z > x].
[[nodiscard]] double q_function(double x);

/// Inverse of q_function on (0, 1).
[[nodiscard]] double q_inverse(double eps);

/// 2F1(1, 1 - 2/alpha; 2 - 2/alpha; -rho) for rho >= 0, alpha > 2.
///
/// The Pfaff transform maps the argument to w = rho / (1 + rho) in [0, 1).
/// For w <= 1/2 the resulting series is summed directly; above that the
/// connection formula around w = 1 is used, whose series runs in 1 - w.
[[nodiscard]] double hyp2f1_interference(double rho, double alpha);

/// log Gamma(x) for x > 0.
[[nodiscard]] double log_gamma(double x);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]. `b` may be +inf, in
/// which case x = a + t / (1 - t) maps the range onto [0, 1). Throws
/// NumericalFailure with the best estimate when the tolerance is not met.
[[nodiscard]] QuadratureResult integrate_with_error(std::function<double(double)> const& f,
                                                    double a, double b,
                                                    QuadratureSpec const& spec = {});

[[nodiscard]] inline double integrate(std::function<double(double)> const& f, double a, double b,
                                      QuadratureSpec const& spec = {})
{
    return integrate_with_error(f, a, b, spec).value;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace paoi
