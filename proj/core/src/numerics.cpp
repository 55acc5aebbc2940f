// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "paoi/error.hpp"

namespace paoi {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw Error(ErrorCode::invalid_argument, "max_subdivisions must be at least 1");
    }
}

QuadratureSpec QuadratureSpec::tightened(double factor) const
{
    return {abs_tol / factor, rel_tol / factor, max_subdivisions};
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double q_inverse(double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::invalid_argument, "q_inverse: argument must lie in (0, 1)");
    }
    double x = std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * eps);
    // One Newton step against q_function removes the last ulps of disagreement.
    double const density = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    if (density > 0.0) {
        x += (q_function(x) - eps) / density;
    }
    return x;
}

namespace {

constexpr int kMaxSeriesTerms = 100000;

/// sum_n (1)_n (1)_n / ((c)_n n!) z^n for 0 <= z < 1; returns NaN if the
/// series has not converged within kMaxSeriesTerms.
double hyp2f1_unit_unit(double c, double z)
{
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        term *= (n + 1.0) / (c + n) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            return sum;
        }
    }
    return std::nan("");
}

double hyp2f1_by_quadrature(double rho, double alpha)
{
    // rho/(alpha-2) * 2F1(...) equals the far-field integral below.
    auto far_field = [&](double u) {
        double const g = std::pow(u, -alpha);
        return rho * u * g / (1.0 + rho * g);
    };
    double const integral = integrate(far_field, 1.0, kInf, QuadratureSpec{1e-14, 1e-11, 4000});
    return integral * (alpha - 2.0) / rho;
}

}  // namespace

double hyp2f1_interference(double rho, double alpha)
{
    if (!(rho >= 0.0) || !(alpha > 2.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "hyp2f1_interference requires rho >= 0 and alpha > 2");
    }
    if (rho == 0.0) return 1.0;
    if (std::isinf(rho)) return 0.0;

    double const b = 1.0 - 2.0 / alpha;
    double const w = rho / (1.0 + rho);
    double g = std::nan("");
    if (w <= 0.5) {
        g = hyp2f1_unit_unit(1.0 + b, w);
    } else if (b < 0.95) {
        double const z = 1.0 / (1.0 + rho);  // 1 - w without cancellation
        double const h = hyp2f1_unit_unit(2.0 - b, z);
        double const reflection = std::numbers::pi * b / std::sin(std::numbers::pi * b);
        g = b / (b - 1.0) * h + reflection * std::pow(z, b - 1.0) * std::pow(w, -b);
    }
    if (std::isfinite(g)) {
        return g / (1.0 + rho);
    }
    double const fallback = hyp2f1_by_quadrature(rho, alpha);
    if (!std::isfinite(fallback)) {
        std::ostringstream msg;
        msg << "hyp2f1_interference failed to converge (rho=" << rho << ", alpha=" << alpha
            << ")";
        throw NumericalFailure(msg.str(), fallback, kInf);
    }
    return fallback;
}

double log_gamma(double x)
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "log_gamma requires x > 0");
    }
    return std::lgamma(x);
}

QuadratureResult integrate_with_error(std::function<double(double)> const& f, double a, double b,
                                      QuadratureSpec const& spec)
{
    spec.validate();
    if (!(a < b)) {
        if (a == b) return {};
        throw Error(ErrorCode::invalid_argument, "integrate requires a < b");
    }
    unsigned const max_depth = static_cast<unsigned>(
        std::ceil(std::log2(static_cast<double>(std::max(spec.max_subdivisions, 2)))));

    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0.0;
    double l1 = 0.0;
    double value = 0.0;
    if (std::isinf(b)) {
        auto mapped = [&](double t) {
            double const s = 1.0 - t;
            return f(a + t / s) / (s * s);
        };
        value = GK::integrate(mapped, 0.0, 1.0, max_depth, spec.rel_tol, &error, &l1);
    } else {
        value = GK::integrate(f, a, b, max_depth, spec.rel_tol, &error, &l1);
    }
    if (!std::isfinite(value) || error > std::max(spec.abs_tol, spec.rel_tol * l1)) {
        std::ostringstream msg;
        msg << "quadrature on [" << a << ", " << b << "] did not reach tolerance: estimate "
            << value << ", error bound " << error;
        throw NumericalFailure(msg.str(), value, error);
    }
    return {value, error};
}

}  // namespace paoi
