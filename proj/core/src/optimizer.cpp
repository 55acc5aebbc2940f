// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "paoi/error.hpp"
#include "paoi/parallel.hpp"

namespace paoi {

namespace {

CurvePoint make_endpoint(double beta)
{
    CurvePoint pt;
    pt.beta = beta;
    return pt;
}

}  // namespace

CurvePoint evaluate_partition(SystemParameters p, double beta, double zeta, double gamma_th,
                              PartitionOptions const& opt)
{
    CurvePoint pt;
    pt.beta = beta;
    if (!(beta > 0.0 && beta < 1.0)) return pt;
    p.beta = beta;
    try {
        PavpEvaluator const ev(p, gamma_th, opt.quad);
        auto const r = opt.fixed_theta ? ev.evaluate(*opt.fixed_theta, zeta)
                                       : ev.best(zeta, opt.theta);
        pt.upsilon_nw = r.upsilon_nw;
        pt.theta_star = r.theta_star;
        pt.stable = r.stable;
    } catch (Error const& e) {
        if (e.code() != ErrorCode::degenerate) throw;
    }
    return pt;
}

PartitionSolution solve_partition(SystemParameters const& p, double zeta, double gamma_th,
                                  PartitionOptions const& opt)
{
    if (opt.grid_points < 9) {
        throw Error(ErrorCode::invalid_argument, "partition grid needs at least 9 points");
    }
    if (!(opt.grid_lo > 0.0 && opt.grid_hi < 1.0 && opt.grid_lo < opt.grid_hi)) {
        throw Error(ErrorCode::invalid_argument, "partition grid must lie inside (0, 1)");
    }
    auto const n = static_cast<std::size_t>(opt.grid_points);
    std::vector<CurvePoint> grid(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            double const beta =
                opt.grid_lo + (opt.grid_hi - opt.grid_lo) * static_cast<double>(i) / (n - 1);
            grid[i] = evaluate_partition(p, beta, zeta, gamma_th, opt);
        },
        opt.threads);

    PartitionSolution sol;
    sol.curve.push_back(make_endpoint(0.0));
    sol.curve.insert(sol.curve.end(), grid.begin(), grid.end());
    sol.curve.push_back(make_endpoint(1.0));

    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (grid[i].stable) {
            if (!sol.feasible_interval) sol.feasible_interval = {grid[i].beta, grid[i].beta};
            sol.feasible_interval->second = grid[i].beta;
        }
        if (grid[i].upsilon_nw < grid[arg].upsilon_nw) arg = i;
    }
    sol.beta_star = grid[arg].beta;
    sol.upsilon_nw_star = grid[arg].upsilon_nw;
    sol.theta_star = grid[arg].theta_star;
    if (!sol.feasible_interval) return sol;

    auto f = [&](double b) { return evaluate_partition(p, b, zeta, gamma_th, opt); };
    double lo = grid[arg == 0 ? 0 : arg - 1].beta;
    double hi = grid[std::min(arg + 1, n - 1)].beta;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    CurvePoint f1 = f(x1);
    CurvePoint f2 = f(x2);
    while (hi - lo > opt.beta_tol) {
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
    for (CurvePoint const* c : {&f1, &f2}) {
        if (c->stable && c->upsilon_nw < sol.upsilon_nw_star) {
            sol.beta_star = c->beta;
            sol.upsilon_nw_star = c->upsilon_nw;
            sol.theta_star = c->theta_star;
        }
    }
    return sol;
}

std::vector<SweepEntry> sensitivity_sweep(SystemParameters const& p, std::string_view field,
                                          std::vector<double> const& values, double zeta,
                                          double gamma_th, PartitionOptions const& opt)
{
    std::vector<SweepEntry> out;
    out.reserve(values.size());
    for (double v : values) {
        SweepEntry e;
        e.value = v;
        try {
            auto const q = with_field(p, field, v);
            double const z = field == "paoi_threshold" ? v : zeta;
            double const g = field == "sinr_threshold" ? v : gamma_th;
            e.solution = solve_partition(q, z, g, opt);
        } catch (Error const& err) {
            e.error = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool single_dip(std::vector<double> const& values, double flat_tol)
{
    std::size_t const n = values.size();
    if (n < 3) return true;
    std::vector<double> s(values);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double a = values[i - 1], b = values[i], c = values[i + 1];
        s[i] = std::max(std::min(a, b), std::min(std::max(a, b), c));
    }
    int last = 0;
    int changes = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double const d = s[i + 1] - s[i];
        int const sign = d > flat_tol ? 1 : (d < -flat_tol ? -1 : 0);
        if (sign == 0) continue;
        if (last != 0 && sign != last) {
            ++changes;
            if (last > 0) return false;  // a hump, not a dip
        }
        last = sign;
    }
    return changes <= 1;
}

}  // namespace paoi
