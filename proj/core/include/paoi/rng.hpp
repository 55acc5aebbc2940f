// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace paoi {

/// Philox4x32-10 block function (Salmon et al., SC'11).
[[nodiscard]] constexpr std::array<std::uint32_t, 4> philox4x32_10(
    std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) noexcept
{
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t const p0 = std::uint64_t{kM0} * ctr[0];
        std::uint64_t const p1 = std::uint64_t{kM1} * ctr[2];
        auto const hi0 = static_cast<std::uint32_t>(p0 >> 32);
        auto const lo0 = static_cast<std::uint32_t>(p0);
        auto const hi1 = static_cast<std::uint32_t>(p1 >> 32);
        auto const lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kW0;
        key[1] += kW1;
    }
    return ctr;
}

/// Counter-based generator. (seed, stream) selects an independent substream;
/// the block counter walks through it. Meets UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    Rng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream)
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        if (lane_ == 4) refill();
        std::uint64_t const lo = block_[lane_++];
        std::uint64_t const hi = block_[lane_++];
        return (hi << 32) | lo;
    }

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential(double mean) noexcept { return -mean * std::log(uniform()); }

    /// Number of Bernoulli trials up to and including the first success when
    /// each trial fails with probability `fail`.
    std::uint64_t trials_until_success(double fail) noexcept
    {
        if (!(fail > 0.0)) return 1;
        if (!(fail < 1.0)) return std::numeric_limits<std::uint64_t>::max();
        double const k = std::floor(std::log(uniform()) / std::log(fail));
        if (k >= 9.2e18) return std::numeric_limits<std::uint64_t>::max();
        return 1 + static_cast<std::uint64_t>(k);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) noexcept
    {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    /// Poisson variate: inversion for small means, PTRS (Hormann 1993) above.
    std::uint64_t poisson(double mean)
    {
        if (!(mean > 0.0)) return 0;
        if (mean < 10.0) {
            double p = std::exp(-mean);
            double s = p;
            double const u = uniform();
            std::uint64_t k = 0;
            while (u > s && p > 0.0) {
                ++k;
                p *= mean / static_cast<double>(k);
                s += p;
            }
            return k;
        }
        double const smu = std::sqrt(mean);
        double const b = 0.931 + 2.53 * smu;
        double const a = -0.059 + 0.02483 * b;
        double const inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        double const vr = 0.9277 - 3.6224 / (b - 2.0);
        double const log_mean = std::log(mean);
        for (;;) {
            double const u = uniform() - 0.5;
            double const v = uniform();
            double const us = 0.5 - std::abs(u);
            double const k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
            if (k < 0.0 || (us < 0.013 && v > us)) continue;
            double const lhs = std::log(v * inv_alpha / (a / (us * us) + b));
            double const rhs = -mean + k * log_mean - std::lgamma(k + 1.0);
            if (lhs <= rhs) return static_cast<std::uint64_t>(k);
        }
    }

    double angle() noexcept { return 2.0 * std::numbers::pi * uniform(); }

private:
    void refill() noexcept
    {
        block_ = philox4x32_10({static_cast<std::uint32_t>(counter_),
                                static_cast<std::uint32_t>(counter_ >> 32),
                                static_cast<std::uint32_t>(stream_),
                                static_cast<std::uint32_t>(stream_ >> 32)},
                               key_);
        ++counter_;
        lane_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int lane_ = 4;
};

}  // namespace paoi
