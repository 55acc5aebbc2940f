// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/snc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "paoi/error.hpp"

namespace paoi {

namespace {

void require_positive_theta(double theta)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw Error(ErrorCode::invalid_argument, "theta must be positive and finite");
    }
}

// Upsilon from the three MGF values; nullopt when the stability condition fails.
std::optional<double> conditional_bound(double theta, double zeta, MgfEvaluation const& ma,
                                        MgfEvaluation const& ma_neg, MgfEvaluation const& ms)
{
    if (!ms.finite || !(ma_neg.value * ms.value < 1.0)) return std::nullopt;
    if (!ma.finite) return kInf;
    double const denom = 1.0 / ms.value - ma_neg.value;
    return std::exp(-theta * zeta + std::log(ma.value) - std::log(denom));
}

}  // namespace

PavpEvaluator::PavpEvaluator(SystemParameters p, double gamma_th, QuadratureSpec quad)
    : p_(std::move(p)), gamma_th_(gamma_th), quad_(quad)
{
    p_.validate();
    quad_.validate();
    p_cov_s_ = sensing_coverage(p_, quad_).p_cov_s;
    try {
        bound_ = comm_coverage(gamma_th_, p_);
    } catch (Error const& e) {
        if (e.code() != ErrorCode::degenerate) throw;
        bound_ = CoverageBound{};
        degenerate_ = e.what();
    }
    if (degenerate_.empty() && !(bound_.p_cov_c > 0.0)) degenerate_ = "no communication coverage";
    if (degenerate_.empty() && !(p_cov_s_ > 0.0)) degenerate_ = "no sensing arrivals";
}

MgfEvaluation PavpEvaluator::arrival(double theta) const
{
    return arrival_mgf(theta, p_.scan_interval, p_cov_s_);
}

MgfEvaluation PavpEvaluator::service(double theta) const
{
    return service_mgf(theta, gamma_th_, p_, bound_, quad_);
}

bool PavpEvaluator::stable(double theta) const
{
    require_positive_theta(theta);
    if (!degenerate_.empty()) return false;
    auto const ms = service(theta);
    return ms.finite && arrival(-theta).value * ms.value < 1.0;
}

std::optional<double> PavpEvaluator::upsilon_raw(double theta, double zeta) const
{
    require_positive_theta(theta);
    if (!degenerate_.empty()) return std::nullopt;
    return conditional_bound(theta, zeta, arrival(theta), arrival(-theta), service(theta));
}

PavpResult PavpEvaluator::trivial(std::string note) const
{
    PavpResult r;
    r.p_cov_c = bound_.p_cov_c;
    r.p_cov_s = p_cov_s_;
    r.note = std::move(note);
    return r;
}

PavpResult PavpEvaluator::evaluate(double theta, double zeta) const
{
    require_positive_theta(theta);
    if (!degenerate_.empty()) return trivial(degenerate_);
    auto const raw = upsilon_raw(theta, zeta);
    if (!raw) return trivial("bound undefined at this theta");

    PavpResult r = trivial({});
    r.stable = true;
    r.theta_star = theta;
    r.clamped = !(*raw <= 1.0);
    r.upsilon = std::clamp(*raw, 0.0, 1.0);
    // Same as 1 - p_cov_c (1 - upsilon) without cancellation when both are near 1.
    r.upsilon_nw = (1.0 - r.p_cov_c) + r.p_cov_c * r.upsilon;
    return r;
}

PavpResult PavpEvaluator::best(double zeta, ThetaSearch const& search) const
{
    if (!(search.lo > 0.0) || !(search.hi > search.lo) || search.points < 3) {
        throw Error(ErrorCode::invalid_argument, "invalid theta search range");
    }
    if (!degenerate_.empty()) return trivial(degenerate_);

    double const a = std::log(search.lo);
    double const b = std::log(search.hi);
    int const n = search.points;
    std::vector<double> grid(static_cast<std::size_t>(n));
    std::vector<PavpResult> res(grid.size());
    int arg = -1;
    for (int i = 0; i < n; ++i) {
        grid[i] = a + (b - a) * i / (n - 1);
        res[i] = evaluate(std::exp(grid[i]), zeta);
        if (res[i].stable && (arg < 0 || res[i].upsilon_nw < res[arg].upsilon_nw)) arg = i;
    }
    if (arg < 0) return trivial("no stable theta");

    auto f = [&](double x) { return evaluate(std::exp(x), zeta); };
    double lo = grid[std::max(arg - 1, 0)];
    double hi = grid[std::min(arg + 1, n - 1)];
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    PavpResult f1 = f(x1);
    PavpResult f2 = f(x2);
    while (hi - lo > search.log_tol) {
        if (f1.upsilon_nw <= f2.upsilon_nw) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    PavpResult best = res[arg];
    for (PavpResult const* c : {&f1, &f2}) {
        if (c->stable && c->upsilon_nw < best.upsilon_nw) best = *c;
    }
    return best;
}

bool stability(double theta, SystemParameters const& p, SensingCoverage const& cov_s,
               double gamma_th, QuadratureSpec const& quad)
{
    require_positive_theta(theta);
    auto const ms = service_mgf(theta, gamma_th, p, quad);
    if (!ms.finite) return false;
    return arrival_mgf(-theta, p, cov_s).value * ms.value < 1.0;
}

double pavp_conditional(double theta, double zeta, SystemParameters const& p,
                        SensingCoverage const& cov_s, double gamma_th, QuadratureSpec const& quad)
{
    require_positive_theta(theta);
    auto const ma = arrival_mgf(theta, p, cov_s);
    auto const ma_neg = arrival_mgf(-theta, p, cov_s);
    auto const ms = service_mgf(theta, gamma_th, p, quad);
    auto const raw = conditional_bound(theta, zeta, ma, ma_neg, ms);
    if (!raw) throw Error(ErrorCode::infeasible, "bound undefined at this theta (unstable)");
    if (!ma.finite) throw Error(ErrorCode::infeasible, "arrival MGF diverges at this theta");
    return std::clamp(*raw, 0.0, 1.0);
}

PavpResult pavp_networkwide(double theta, double zeta, SystemParameters const& p,
                            double gamma_th, QuadratureSpec const& quad)
{
    return PavpEvaluator(p, gamma_th, quad).evaluate(theta, zeta);
}

PavpResult best_theta(double zeta, SystemParameters const& p, double gamma_th,
                      QuadratureSpec const& quad, ThetaSearch const& search)
{
    return PavpEvaluator(p, gamma_th, quad).best(zeta, search);
}

}  // namespace paoi
