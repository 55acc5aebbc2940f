// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "paoi/comm.hpp"
#include "paoi/error.hpp"
#include "paoi/parallel.hpp"
#include "paoi/sensing.hpp"

namespace paoi {

namespace {

constexpr std::uint64_t kMaxSlots = 100'000'000;
constexpr std::uint64_t kMaxScans = 1'000'000;

double wrap_angle(double a)
{
    a = std::remainder(a, 2.0 * std::numbers::pi);
    return a;
}

bool within_sector(Point from, double boresight, Point to, double halfwidth)
{
    if (halfwidth >= std::numbers::pi) return true;
    double const dir = std::atan2(to.y - from.y, to.x - from.x);
    return std::abs(wrap_angle(dir - boresight)) <= halfwidth;
}

Estimate binomial(std::vector<char> const& hits)
{
    Estimate e;
    e.samples = hits.size();
    if (hits.empty()) return e;
    std::size_t count = 0;
    for (char h : hits) count += h ? 1 : 0;
    e.mean = static_cast<double>(count) / static_cast<double>(hits.size());
    e.stderr_ = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(hits.size()));
    return e;
}

void check_options(SimulationOptions const& opt)
{
    if (!(opt.interference_radius >= 1.0) || !std::isfinite(opt.interference_radius)) {
        throw Error(ErrorCode::config, "interference radius must be finite and >= 1 m");
    }
    if (opt.comm_cluster_radius && !(*opt.comm_cluster_radius > 0.0)) {
        throw Error(ErrorCode::config, "comm cluster radius must be positive");
    }
}

std::uint64_t scans_until_detection(SystemParameters const& p, SimulationOptions const& opt,
                                    Rng& rng)
{
    for (std::uint64_t k = 1; k <= kMaxScans; ++k) {
        auto const scan = sample_sensing_realization(p, opt, rng);
        if (simulate_sensing_trial(scan, p, rng, opt.interference_radius)) return k;
    }
    return 0;
}

// Violation fraction of one realization; nullopt when the user is out of coverage
// or no packet can ever be generated.
std::optional<double> pavp_realization(SystemParameters const& p, double zeta, double gamma_th,
                                       SimulationOptions const& opt, double p_cov_s,
                                       std::size_t index, QueueTrace* keep)
{
    Rng rng(opt.seed, stream_id(StreamFamily::pavp, index));
    auto const real = sample_comm_realization(p, opt, rng);
    if (real.comm_aps.empty()) return std::nullopt;
    auto const sinr = conditional_de_sinr(real, 0, p);
    if (sinr.status == SinrStatus::interference_dominated || !(sinr.value >= gamma_th)) {
        return std::nullopt;
    }
    if (opt.arrivals == ArrivalMode::analytic && !(p_cov_s > 0.0)) return std::nullopt;

    std::size_t const n = opt.packets;
    std::vector<double> arrivals(n);
    std::vector<double> services(n);
    double t = 0.0;
    double const slot = p.slot_duration();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t scans = 0;
        if (opt.arrivals == ArrivalMode::analytic) {
            scans = rng.trials_until_success(1.0 - p_cov_s);
        } else {
            scans = scans_until_detection(p, opt, rng);
            if (scans == 0) return std::nullopt;
        }
        t += static_cast<double>(scans) * p.scan_interval;
        arrivals[i] = t;
        services[i] = static_cast<double>(sample_slots(sinr.value, p, opt.service, rng)) * slot;
    }
    auto trace = run_queue(arrivals, services, zeta);
    double const frac =
        static_cast<double>(trace.violations) / static_cast<double>(trace.paoi.size());
    if (keep) *keep = std::move(trace);
    return frac;
}

}  // namespace

std::vector<Point> sample_ppp(double intensity, double radius, Rng& rng)
{
    if (!(intensity >= 0.0) || !(radius > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "sample_ppp requires intensity >= 0, radius > 0");
    }
    auto const count = rng.poisson(intensity * std::numbers::pi * radius * radius);
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        double const r = radius * std::sqrt(rng.uniform());
        double const phi = rng.angle();
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return pts;
}

SpatialRealization sample_sensing_realization(SystemParameters const& p,
                                              SimulationOptions const& opt, Rng& rng)
{
    SpatialRealization real;
    real.region_radius = p.max_range + opt.interference_radius;
    for (Point const& x : sample_ppp(p.lambda_s(), real.region_radius, rng)) {
        real.sensing_aps.push_back({x, rng.angle()});
    }
    return real;
}

double comm_cluster_radius(SystemParameters const& p, SimulationOptions const& opt)
{
    if (opt.comm_cluster_radius) return *opt.comm_cluster_radius;
    if (p.serving_radius) return *p.serving_radius;
    return p.max_range;
}

SpatialRealization sample_comm_realization(SystemParameters const& p,
                                           SimulationOptions const& opt, Rng& rng)
{
    SpatialRealization real;
    real.region_radius = comm_cluster_radius(p, opt);
    real.comm_aps = sample_ppp(p.lambda_c(), real.region_radius, rng);
    real.users.push_back({0.0, 0.0});
    for (Point const& u : sample_ppp(p.lambda_u, real.region_radius, rng)) {
        real.users.push_back(u);
    }
    auto const pilots = static_cast<std::uint64_t>(p.pilot_symbols);
    real.pilot_of_user.reserve(real.users.size());
    for (std::size_t i = 0; i < real.users.size(); ++i) {
        real.pilot_of_user.push_back(static_cast<int>(rng.below(pilots)));
    }
    return real;
}

bool simulate_sensing_trial(SpatialRealization const& real, SystemParameters const& p, Rng& rng,
                            double interference_radius)
{
    auto const& aps = real.sensing_aps;
    if (aps.empty()) return false;

    std::vector<std::pair<double, std::size_t>> candidates;
    for (std::size_t i = 0; i < aps.size(); ++i) {
        double const d = distance(aps[i].position, real.target);
        if (d <= p.max_range &&
            within_sector(aps[i].position, aps[i].boresight, real.target, p.beam_halfwidth)) {
            candidates.emplace_back(d, i);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    double const n = p.n_antennas;
    double const echo_gain = p.power * p.gain_tx * p.gain_rx * n * n * p.wavelength *
                             p.wavelength / std::pow(4.0 * std::numbers::pi, 3);
    // Mean interference from the sector beyond the simulated disk.
    double const tail = 2.0 * p.beam_halfwidth * p.lambda_s() * p.power *
                        std::pow(interference_radius, 2.0 - p.alpha) / (p.alpha - 2.0);

    for (auto const& [d, c] : candidates) {
        double const sigma = rng.exponential(p.rcs_mean);
        double const signal = echo_gain * sigma * std::pow(d, -2.0 * p.alpha);
        double const budget = signal / p.detect_threshold - p.noise_sensing;
        if (!(budget > tail)) continue;
        double interference = tail;
        bool blocked = false;
        for (std::size_t j = 0; j < aps.size() && !blocked; ++j) {
            if (j == c) continue;
            double const dist = distance(aps[c].position, aps[j].position);
            if (dist > interference_radius) continue;
            if (!within_sector(aps[c].position, aps[c].boresight, aps[j].position,
                               p.beam_halfwidth)) {
                continue;
            }
            double const gain = dist <= 1.0 ? 1.0 : std::pow(dist, -p.alpha);
            interference += p.power * rng.exponential(1.0) * gain;
            blocked = interference >= budget;
        }
        if (!blocked) return true;
    }
    return false;
}

std::uint64_t sample_slots(double gamma, SystemParameters const& p, ServiceMode mode, Rng& rng)
{
    if (mode == ServiceMode::hardened) {
        double const eps = decoding_error(gamma, p).value;
        if (!(eps < 1.0)) {
            throw Error(ErrorCode::degenerate, "decoding never succeeds at this SINR");
        }
        return rng.trials_until_success(eps);
    }
    for (std::uint64_t k = 1; k <= kMaxSlots; ++k) {
        double const eps = decoding_error(gamma * rng.exponential(1.0), p).value;
        if (rng.uniform() >= eps) return k;
    }
    throw Error(ErrorCode::numerical, "retransmission count exceeded the slot cap");
}

std::optional<ServiceSample> simulate_service_sample(SpatialRealization const& real,
                                                     std::size_t user_index,
                                                     SystemParameters const& p,
                                                     double gamma_th, Rng& rng,
                                                     ServiceMode mode)
{
    if (real.comm_aps.empty()) return std::nullopt;
    auto const sinr = conditional_de_sinr(real, user_index, p);
    if (sinr.status == SinrStatus::interference_dominated || !(sinr.value >= gamma_th)) {
        return std::nullopt;
    }
    return ServiceSample{sample_slots(sinr.value, p, mode, rng), sinr.value};
}

QueueTrace run_queue(std::vector<double> const& arrival_times,
                     std::vector<double> const& service_times, double zeta)
{
    if (arrival_times.size() != service_times.size()) {
        throw Error(ErrorCode::invalid_argument, "arrival and service lists differ in length");
    }
    std::size_t const n = arrival_times.size();
    QueueTrace q;
    q.arrivals = arrival_times;
    q.services = service_times;
    q.departures.resize(n);
    double start = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double const a = arrival_times[i];
        double const s = service_times[i];
        if (!std::isfinite(a) || !(a >= 0.0)) {
            throw Error(ErrorCode::invalid_argument, "arrival times must be finite and >= 0");
        }
        if (!std::isfinite(s) || !(s > 0.0)) {
            throw Error(ErrorCode::invalid_argument, "service times must be finite and > 0");
        }
        if (i > 0 && a < arrival_times[i - 1]) {
            throw Error(ErrorCode::invalid_argument, "arrival times must be nondecreasing");
        }
        start = i == 0 ? a : std::max(a, start + service_times[i - 1]);
        q.departures[i] = start + s;
    }
    if (n > 1) q.paoi.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        q.paoi[i] = q.departures[i + 1] - q.arrivals[i];
        if (q.paoi[i] > zeta) ++q.violations;
    }
    return q;
}

void write_trace_csv(std::ostream& os, QueueTrace const& trace)
{
    auto const old_precision = os.precision(17);
    os << "n,arrival_s,service_s,departure_s,paoi_s\n";
    for (std::size_t i = 0; i < trace.arrivals.size(); ++i) {
        os << i + 1 << ',' << trace.arrivals[i] << ',' << trace.services[i] << ','
           << trace.departures[i] << ',';
        if (i < trace.paoi.size()) os << trace.paoi[i];
        os << '\n';
    }
    os.precision(old_precision);
}

Estimate simulate_sensing_coverage(SystemParameters const& p, std::size_t trials,
                                   SimulationOptions const& opt)
{
    check_options(opt);
    std::vector<char> hits(trials);
    parallel_for(
        trials,
        [&](std::size_t i) {
            Rng rng(opt.seed, stream_id(StreamFamily::sensing, i));
            auto const real = sample_sensing_realization(p, opt, rng);
            hits[i] = simulate_sensing_trial(real, p, rng, opt.interference_radius) ? 1 : 0;
        },
        opt.threads);
    return binomial(hits);
}

Estimate simulate_comm_coverage(SystemParameters const& p, double gamma_th,
                                std::size_t realizations, SimulationOptions const& opt)
{
    check_options(opt);
    std::vector<char> hits(realizations);
    parallel_for(
        realizations,
        [&](std::size_t i) {
            Rng rng(opt.seed, stream_id(StreamFamily::comm, i));
            auto const real = sample_comm_realization(p, opt, rng);
            if (real.comm_aps.empty()) return;
            auto const s = conditional_de_sinr(real, 0, p);
            hits[i] = s.status != SinrStatus::interference_dominated && s.value >= gamma_th;
        },
        opt.threads);
    return binomial(hits);
}

PavpEstimate simulate_pavp(SystemParameters const& p, double zeta, double gamma_th,
                           SimulationOptions const& opt)
{
    check_options(opt);
    if (opt.realizations < 1) {
        throw Error(ErrorCode::invalid_argument, "at least one realization is required");
    }
    if (opt.packets < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "at least two packets per realization are required for a PAoI sample");
    }
    double const p_cov_s =
        opt.arrivals == ArrivalMode::analytic ? sensing_coverage(p).p_cov_s : 0.0;

    std::size_t const r = opt.realizations;
    std::vector<double> frac(r, 1.0);
    std::vector<char> covered(r, 0);
    parallel_for(
        r,
        [&](std::size_t i) {
            if (auto f = pavp_realization(p, zeta, gamma_th, opt, p_cov_s, i, nullptr)) {
                frac[i] = *f;
                covered[i] = 1;
            }
        },
        opt.threads);

    PavpEstimate est;
    est.realizations = r;
    double sum = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        sum += frac[i];
        if (covered[i]) {
            ++est.in_coverage;
            est.packets_simulated += opt.packets;
        }
    }
    est.mean = sum / static_cast<double>(r);
    double ss = 0.0;
    for (double f : frac) ss += (f - est.mean) * (f - est.mean);
    double const rn = static_cast<double>(r);
    est.sample_stderr = r > 1 ? std::sqrt(ss / (rn - 1.0) / rn) : 0.0;
    est.stderr_ = std::sqrt(std::max(0.0, est.mean * (1.0 - est.mean)) / rn);
    return est;
}

std::optional<QueueTrace> simulate_pavp_trace(SystemParameters const& p, double zeta,
                                              double gamma_th, std::size_t realization,
                                              SimulationOptions const& opt)
{
    check_options(opt);
    if (opt.packets < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "at least two packets per realization are required for a PAoI sample");
    }
    double const p_cov_s =
        opt.arrivals == ArrivalMode::analytic ? sensing_coverage(p).p_cov_s : 0.0;
    QueueTrace trace;
    if (!pavp_realization(p, zeta, gamma_th, opt, p_cov_s, realization, &trace)) {
        return std::nullopt;
    }
    return trace;
}

}  // namespace paoi
