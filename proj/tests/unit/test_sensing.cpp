// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include "common.hpp"
#include "doctest.h"
#include "paoi/error.hpp"
#include "paoi/sensing.hpp"

namespace {

/// Echo SINR test for one aligned AP at distance r: Swerling-I RCS, PPP
/// interferers with Rayleigh fading and bounded path loss inside `outer`,
/// and the mean of the remaining plane added as a constant.
double detection_oracle(double r, paoi::SystemParameters const& p, int trials)
{
    double const pi = std::numbers::pi;
    double const rcs = std::pow(10.0, 20.0 / 10.0);
    double const gain = std::pow(10.0, 20.0 / 10.0);
    double const delta = std::pow(10.0, -10.0 / 10.0);
    double const noise = 1e-3 * std::pow(10.0, -104.0 / 10.0);
    double const power = 1.0;
    double const n = 10.0;
    double const lambda_s = 0.7 * 100e-6;
    double const alpha = p.alpha;
    double const theta = pi;
    double const k = gain * gain * n * n * p.wavelength * p.wavelength / std::pow(4.0 * pi, 3);
    double const outer = 2000.0;
    double const tail = 2.0 * theta * lambda_s * std::pow(outer, 2.0 - alpha) / (alpha - 2.0);

    std::mt19937_64 gen(20260101);
    std::poisson_distribution<int> count(lambda_s * theta * outer * outer);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::exponential_distribution<double> fade(1.0);
    std::exponential_distribution<double> swerling(1.0 / rcs);

    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        double const echo = power * k * swerling(gen) * std::pow(r, -2.0 * alpha);
        double interference = tail;
        int const m = count(gen);
        for (int i = 0; i < m; ++i) {
            double const d = outer * std::sqrt(unit(gen));
            interference += fade(gen) * std::min(1.0, std::pow(d, -alpha));
        }
        if (echo > delta * (noise + power * interference)) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

double series_mgf(double theta, double ts, double pc)
{
    long double sum = 0.0L;
    long double const q = 1.0L - pc;
    long double const step = std::exp(static_cast<long double>(theta * ts));
    long double term = pc * step;
    for (int i = 1; i <= 1000000; ++i) {
        sum += term;
        term *= q * step;
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("rho_factor")
{
    auto const p = paoi::test::table1();
    CHECK(paoi::rho_factor(0.0, p) == 0.0);
    for (double r : {1.0, 37.0, 250.0}) {
        CHECK(paoi::rho_factor(2.0 * r, p)
              == doctest::Approx(std::pow(2.0, 2.0 * p.alpha) * paoi::rho_factor(r, p))
                     .epsilon(1e-12));
    }
    // delta (4 pi)^3 r^(2 alpha) / (g_t g_r N^2 lambda_w^2 sigma) from the raw table.
    double const expected = 0.1 * std::pow(4.0 * std::numbers::pi, 3) * std::pow(100.0, 4.2)
                            / (100.0 * 100.0 * 100.0 * 2.0 * 2.0 * 100.0);
    CHECK(paoi::rho_factor(100.0, p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::isfinite(expected));
    CHECK(expected > 0.0);
    double prev = 0.0;
    for (double r = 1.0; r <= 500.0; r += 1.0) {
        double const rho = paoi::rho_factor(r, p);
        CHECK(rho > prev);
        prev = rho;
    }
    CHECK_THROWS_AS((void)paoi::rho_factor(-1.0, p), paoi::Error);
}

TEST_CASE("single_ap_detection limits and bounds")
{
    auto p = paoi::test::table1();
    CHECK(paoi::single_ap_detection(0.0, p) == 1.0);
    for (double r = 0.5; r <= p.max_range; r += 0.5) {
        double const v = paoi::single_ap_detection(r, p);
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
    p.beta = 1.0;
    p.noise_sensing = 0.0;
    for (double r : {1.0, 100.0, 500.0}) {
        CHECK(paoi::single_ap_detection(r, p) == 1.0);
    }
}

TEST_CASE("single_ap_detection against a Monte Carlo oracle at 250 m")
{
    auto const p = paoi::test::table1();
    double const analytic = paoi::single_ap_detection(250.0, p);
    double const empirical = detection_oracle(250.0, p, 100000);
    INFO("analytic " << analytic << " empirical " << empirical);
    CHECK(std::abs(analytic - empirical) < 0.01);
}

TEST_CASE("sensing_coverage boundaries")
{
    auto p = paoi::test::table1();
    auto const cov = paoi::sensing_coverage(p);
    CHECK(cov.p_cov_s > 0.0);
    CHECK(cov.p_cov_s <= 1.0);
    REQUIRE(cov.radius.size() == cov.p_single.size());
    CHECK(cov.radius.front() == 0.0);
    CHECK(cov.radius.back() == p.max_range);
    for (std::size_t i = 0; i < cov.radius.size(); ++i) {
        if (i > 0) CHECK(cov.radius[i] >= cov.radius[i - 1]);
        CHECK(cov.p_single[i] >= 0.0);
        CHECK(cov.p_single[i] <= 1.0);
    }

    auto q = p;
    q.beta = 1.0;
    CHECK(paoi::sensing_coverage(q).p_cov_s == 0.0);

    q = p;
    q.max_range = 1e-3;
    CHECK(paoi::sensing_coverage(q).p_cov_s < 1e-9);
    q.max_range = 0.0;
    CHECK(paoi::sensing_coverage(q).p_cov_s == 0.0);
}

TEST_CASE("sensing_coverage trends")
{
    auto const base = paoi::test::table1();
    auto coverage = [](paoi::SystemParameters const& p) {
        return paoi::sensing_coverage(p).p_cov_s;
    };

    double prev = 1.0;
    for (double db : {-20.0, -15.0, -10.0, -5.0, 0.0, 5.0}) {
        auto p = base;
        p.detect_threshold = paoi::db_to_linear(db);
        double const c = coverage(p);
        CHECK(c <= prev);
        prev = c;
    }
    prev = 0.0;
    for (double dbsm : {0.0, 10.0, 20.0, 30.0}) {
        auto p = base;
        p.rcs_mean = paoi::db_to_linear(dbsm);
        double const c = coverage(p);
        CHECK(c >= prev);
        prev = c;
    }
    prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
        auto p = base;
        p.beta = 1.0 - 0.1 * i + 0.05;  // lambda_s from 5 to 95 per km^2
        double const c = coverage(p);
        CHECK(c >= prev);
        prev = c;
    }
    prev = 0.0;
    for (double range : {50.0, 100.0, 200.0, 350.0, 500.0, 800.0}) {
        auto p = base;
        p.max_range = range;
        double const c = coverage(p);
        CHECK(c >= prev);
        prev = c;
    }
    auto narrow = base;
    narrow.beam_halfwidth = std::numbers::pi / 2;
    CHECK(coverage(base) > coverage(narrow));
}

TEST_CASE("arrival_mgf")
{
    CHECK(paoi::arrival_mgf(0.0, 1e-3, 0.3).value == 1.0);
    for (double theta : {-50.0, 10.0, 300.0}) {
        auto const m = paoi::arrival_mgf(theta, 1e-3, 1.0);
        REQUIRE(m.finite);
        CHECK(m.value == doctest::Approx(std::exp(theta * 1e-3)).epsilon(1e-14));
    }
    for (double theta : {-1000.0, -100.0, 10.0, 100.0, 500.0}) {
        auto const m = paoi::arrival_mgf(theta, 1e-3, 0.5);
        REQUIRE(m.finite);
        double const oracle = series_mgf(theta, 1e-3, 0.5);
        INFO(theta);
        CHECK(std::abs(m.value - oracle) <= 1e-10 * oracle);
    }
    // 0.5 e^(theta T_s) >= 1 beyond ln 2 / T_s.
    CHECK_FALSE(paoi::arrival_mgf(700.0, 1e-3, 0.5).finite);
    CHECK(paoi::arrival_mgf(-1e9, 1e-3, 0.01).finite);

    try {
        (void)paoi::arrival_mgf(1.0, 1e-3, 0.0);
        FAIL("expected a degenerate error");
    } catch (paoi::Error const& e) {
        CHECK(e.code() == paoi::ErrorCode::degenerate);
    }
}

TEST_CASE("arrival_mgf is log-convex")
{
    for (double pc : {0.05, 0.5, 0.95}) {
        double const limit = -std::log1p(-pc) / 1e-3;
        for (double a = -2000.0; a < limit; a += limit / 17.0) {
            double const b = std::min(a + 300.0, 0.99 * limit);
            if (b <= a) continue;
            double const la = std::log(paoi::arrival_mgf(a, 1e-3, pc).value);
            double const lb = std::log(paoi::arrival_mgf(b, 1e-3, pc).value);
            double const lm = std::log(paoi::arrival_mgf(0.5 * (a + b), 1e-3, pc).value);
            CHECK(lm <= 0.5 * (la + lb) + 1e-12);
        }
    }
}
