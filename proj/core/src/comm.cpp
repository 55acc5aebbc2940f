// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/comm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "paoi/error.hpp"

namespace paoi {

namespace {

void require_comm_tier(SystemParameters const& p)
{
    if (!(p.lambda_c() > 0.0)) {
        throw Error(ErrorCode::degenerate, "no communication tier (lambda_c = 0)", "beta");
    }
}

}  // namespace

double large_scale_gain(double r, double alpha)
{
    if (!(r >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "large_scale_gain requires r >= 0");
    }
    return r <= 1.0 ? 1.0 : std::pow(r, -alpha);
}

std::vector<ChannelStats> channel_stats(SpatialRealization const& real, std::size_t user_index,
                                        SystemParameters const& p)
{
    if (user_index >= real.users.size()) {
        throw Error(ErrorCode::invalid_argument, "user index out of range");
    }
    bool const has_pilots = real.pilot_of_user.size() == real.users.size();
    double const r0 = p.comm_reference_distance;
    double const noise = 1.0 / (p.pilot_symbols * p.pilot_snr);

    std::vector<ChannelStats> out;
    out.reserve(real.comm_aps.size());
    for (Point const& ap : real.comm_aps) {
        ChannelStats s;
        s.l_mk = large_scale_gain(distance(ap, real.users[user_index]) / r0, p.alpha);
        double d = noise;
        for (std::size_t i = 0; i < real.users.size(); ++i) {
            bool const collides = has_pilots
                                      ? real.pilot_of_user[i] == real.pilot_of_user[user_index]
                                      : i == user_index;
            if (collides) d += large_scale_gain(distance(ap, real.users[i]) / r0, p.alpha);
        }
        s.d_mk = d;
        s.sigma2_mk = s.l_mk * s.l_mk / d;
        out.push_back(s);
    }
    return out;
}

DeSinr conditional_de_sinr(SpatialRealization const& real, std::size_t user_index,
                           SystemParameters const& p)
{
    if (real.comm_aps.empty()) {
        throw Error(ErrorCode::degenerate, "no communication tier (realization has no comm AP)");
    }
    auto const stats = channel_stats(real, user_index, p);
    double const m = static_cast<double>(real.comm_aps.size());
    double const mn = m * p.n_antennas;
    double const r0 = p.comm_reference_distance;
    double const load = mn / p.comm_snr();

    double total = 0.0;
    for (std::size_t a = 0; a < real.comm_aps.size(); ++a) {
        double inv_sq = 0.0;
        for (Point const& u : real.users) {
            double const l = large_scale_gain(distance(real.comm_aps[a], u) / r0, p.alpha);
            inv_sq += 1.0 / (l * l);
        }
        total += stats[a].d_mk * inv_sq * (stats[a].l_mk + load);
    }
    double const denom = total / m - 1.0;
    if (denom == 0.0) return {kInf, SinrStatus::perfect_csi_limit};
    if (denom < 0.0) return {0.0, SinrStatus::interference_dominated};
    return {mn / denom, SinrStatus::ok};
}

double psi(SystemParameters const& p)
{
    require_comm_tier(p);
    double const lu = p.comm_intensity(p.lambda_u);
    double const lc = p.comm_intensity(p.lambda_c());
    double const a = p.alpha;
    double const aleph = effective_aleph(p);
    double const contamination =
        lu / (lc * p.pilot_symbols) * (lu + (a - 2.0) / (a * std::numbers::pi * p.pilot_snr));
    return contamination * (1.0 + (a - 1.0) * aleph / ((a - 2.0) * p.comm_snr())) - 1.0;
}

double psi_sum_form(SystemParameters const& p)
{
    require_comm_tier(p);
    double const lu = p.comm_intensity(p.lambda_u);
    double const lc = p.comm_intensity(p.lambda_c());
    double const a = p.alpha;
    double const t = p.pilot_symbols;
    double const rho = p.pilot_snr;
    double const aleph = effective_aleph(p);
    double const pi = std::numbers::pi;
    double const i1 = lu / (lc * t) * (lu + (a - 2.0) / (rho * a * pi));
    double const i2 = lu * aleph / (lc * t * p.comm_snr()) *
                      ((a - 1.0) / (a - 2.0) * lu + (a - 1.0) / (rho * a * pi));
    return i1 + i2 - 1.0;
}

double eta_c(double aleph)
{
    if (!(aleph > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "eta_c requires aleph > 0");
    }
    return aleph * std::exp(-log_gamma(aleph + 1.0) / aleph);
}

CoverageBound comm_coverage(double gamma_th, SystemParameters const& p)
{
    if (!(gamma_th >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "SINR threshold must be >= 0", "sinr_threshold");
    }
    CoverageBound b;
    b.psi_value = psi(p);
    b.aleph_eff = effective_aleph(p);
    b.eta_c = eta_c(b.aleph_eff);
    if (gamma_th == 0.0) {
        b.p_cov_c = 1.0;
        return b;
    }
    if (b.psi_value <= 0.0) {
        b.p_cov_c = 1.0;
        b.saturated = true;
        return b;
    }
    double const x = b.eta_c * gamma_th * b.psi_value;
    b.p_cov_c = std::clamp(-std::expm1(b.aleph_eff * std::log1p(-std::exp(-x))), 0.0, 1.0);
    return b;
}

DecodingError decoding_error(double gamma, double packet_bits, double tau_d)
{
    if (!(tau_d > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "decoding_error requires tau_d > 0");
    }
    if (!(gamma > 0.0)) return {1.0, true};
    if (std::isinf(gamma)) return {0.0, false};
    double const lg = std::log1p(gamma);
    double const dispersion = -std::expm1(-2.0 * lg);
    double const arg =
        (lg - packet_bits * std::numbers::ln2 / tau_d) / std::sqrt(dispersion / tau_d);
    return {q_function(arg), false};
}

MgfEvaluation service_mgf(double theta, double gamma_th, SystemParameters const& p,
                          QuadratureSpec const& quad)
{
    return service_mgf(theta, gamma_th, p, comm_coverage(gamma_th, p), quad);
}

MgfEvaluation service_mgf(double theta, double gamma_th, SystemParameters const& p,
                          CoverageBound const& bound, QuadratureSpec const& quad)
{
    if (!(gamma_th >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "SINR threshold must be >= 0", "sinr_threshold");
    }
    if (!(bound.p_cov_c > 0.0)) {
        throw Error(ErrorCode::degenerate,
                    "communication coverage is zero: service time undefined");
    }
    double const x = theta * p.slot_duration();
    if (x > 700.0) return MgfEvaluation::infinite(theta, "overflow");
    if (bound.saturated) return MgfEvaluation::of(theta, std::exp(x));

    double const tau_d = p.tau_d();
    double const eps_th = decoding_error(gamma_th, p.packet_bits, tau_d).value;
    bool near_pole = false;
    if (eps_th > 0.0) {
        double const log_pole = std::log(eps_th) + x;
        if (log_pole >= 0.0) return MgfEvaluation::infinite(theta, "unstable service");
        near_pole = log_pole > std::log(0.999);
    }

    // Substitute u = eta_c psi gamma so the density becomes
    // aleph e^-u (1 - e^-u)^(aleph - 1); the peak sits near log(aleph).
    double const scale = bound.eta_c * bound.psi_value;
    double const aleph = bound.aleph_eff;
    double const log_norm = std::log(aleph) - std::log(bound.p_cov_c);
    double const ex = std::exp(x);
    auto integrand = [&](double u) {
        double const eps = decoding_error(u / scale, p.packet_bits, tau_d).value;
        double log_w = log_norm - u;
        if (aleph != 1.0) log_w += (aleph - 1.0) * std::log1p(-std::exp(-u));
        double const geo = (1.0 - eps) * ex / (1.0 - eps * ex);
        return geo * std::exp(log_w);
    };

    double const u_th = scale * gamma_th;
    double const u_rate = scale * std::expm1(p.packet_bits * std::numbers::ln2 / tau_d);
    double const u_peak = std::log(aleph);
    std::vector<double> cuts{u_th};
    for (double c : {u_rate, u_peak}) {
        if (c > u_th) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    // e^-60 of relative mass is left beyond the last cut.
    cuts.push_back(std::max(u_th, u_peak) + 60.0);

    QuadratureSpec const spec = near_pole ? quad.tightened(10.0) : quad;
    double value = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) value += integrate(integrand, cuts[i], cuts[i + 1], spec);
    }
    if (!std::isfinite(value)) return MgfEvaluation::infinite(theta, "overflow");
    auto out = MgfEvaluation::of(theta, value);
    out.near_pole = near_pole;
    return out;
}

}  // namespace paoi
