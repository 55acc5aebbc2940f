// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "paoi/mgf.hpp"
#include "paoi/numerics.hpp"
#include "paoi/params.hpp"
#include "paoi/topology.hpp"

namespace paoi {

/// LMMSE estimation statistics of one (AP m, user k) link.
struct ChannelStats {
    double l_mk = 0.0;       ///< large-scale gain
    double d_mk = 0.0;       ///< pilot interference-plus-noise power
    double sigma2_mk = 0.0;  ///< estimate variance l_mk^2 / d_mk
};

/// Bounded path loss min(1, r^-alpha); r in the communication length unit.
[[nodiscard]] double large_scale_gain(double r, double alpha);

/// Estimation statistics of every communication AP towards user k.
[[nodiscard]] std::vector<ChannelStats> channel_stats(SpatialRealization const& real,
                                                      std::size_t user_index,
                                                      SystemParameters const& p);

enum class SinrStatus {
    ok,
    interference_dominated,  ///< denominator <= 0 with finite inputs; value reported as 0
    perfect_csi_limit,       ///< denominator exactly 0: noise-free, perfect-CSI divergence
};

struct DeSinr {
    double value = 0.0;
    SinrStatus status = SinrStatus::ok;
};

/// Deterministic-equivalent downlink SINR of one user for a fixed topology,
///
///   gamma_k = M N / ((1/M) sum_i sum_m d_mk l_mi^-2 (l_mk + M N / P) - 1).
///
/// Throws Error(degenerate) when the realization has no communication AP.
[[nodiscard]] DeSinr conditional_de_sinr(SpatialRealization const& real,
                                         std::size_t user_index, SystemParameters const& p);

/// Coverage bound parameter psi(aleph~) in its printed product form.
[[nodiscard]] double psi(SystemParameters const& p);

/// The same quantity assembled from its pilot-contamination and
/// normalization components, I1 + I2 - 1. Kept as a cross-check of psi().
[[nodiscard]] double psi_sum_form(SystemParameters const& p);

/// eta_c = aleph (aleph!)^(-1/aleph), evaluated through log Gamma.
[[nodiscard]] double eta_c(double aleph);

struct CoverageBound {
    double p_cov_c = 0.0;
    double psi_value = 0.0;
    double eta_c = 0.0;
    double aleph_eff = 0.0;
    /// psi <= 0: the bound is identically 1.
    bool saturated = false;
};

/// Lower bound on the downlink coverage probability at threshold gamma_th,
/// 1 - (1 - exp(-eta_c gamma_th psi))^aleph.
[[nodiscard]] CoverageBound comm_coverage(double gamma_th, SystemParameters const& p);

struct DecodingError {
    double value = 1.0;
    bool degenerate = false;  ///< gamma <= 0: zero dispersion, value forced to 1
};

/// Finite-blocklength decoding error probability for L bits over tau_d symbols.
[[nodiscard]] DecodingError decoding_error(double gamma, double packet_bits, double tau_d);

[[nodiscard]] inline DecodingError decoding_error(double gamma, SystemParameters const& p)
{
    return decoding_error(gamma, p.packet_bits, p.tau_d());
}

/// MGF of the retransmission service time J * T_c with J ~ Geometric(1 - eps(gamma)),
/// averaged over the coverage bound's SINR density conditioned on gamma >= gamma_th.
///
/// The result is non-finite ("unstable service") when eps(gamma_th) e^(theta T_c) >= 1.
/// When the bound is saturated the density sits at gamma -> infinity and the
/// service time is one slot.
[[nodiscard]] MgfEvaluation service_mgf(double theta, double gamma_th, SystemParameters const& p,
                                        QuadratureSpec const& quad = {});

/// Overload reusing an already evaluated coverage bound.
[[nodiscard]] MgfEvaluation service_mgf(double theta, double gamma_th, SystemParameters const& p,
                                        CoverageBound const& bound,
                                        QuadratureSpec const& quad = {});

}  // namespace paoi
