// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paoi/numerics.hpp"
#include "paoi/params.hpp"
#include "paoi/snc.hpp"

namespace paoi {

struct CurvePoint {
    double beta = 0.0;
    double upsilon_nw = 1.0;
    std::optional<double> theta_star;
    bool stable = false;
};

struct PartitionSolution {
    double beta_star = 0.0;
    double upsilon_nw_star = 1.0;
    std::optional<double> theta_star;
    std::vector<CurvePoint> curve;  ///< grid samples, endpoints included
    /// Smallest and largest grid beta with a stable theta.
    std::optional<std::pair<double, double>> feasible_interval;
};

struct PartitionOptions {
    int grid_points = 33;
    double grid_lo = 0.02;
    double grid_hi = 0.98;
    double beta_tol = 1e-3;
    QuadratureSpec quad;
    ThetaSearch theta;
    /// Evaluate at this theta instead of minimizing over it.
    std::optional<double> fixed_theta;
    unsigned threads = 0;
};

/// Network-wide bound at one partition, minimized over theta. Endpoints and
/// configurations that fail with a domain error map to the trivial bound 1.
[[nodiscard]] CurvePoint evaluate_partition(SystemParameters p, double beta, double zeta,
                                            double gamma_th, PartitionOptions const& opt = {});

/// Grid search over beta followed by golden-section refinement.
[[nodiscard]] PartitionSolution solve_partition(SystemParameters const& p, double zeta,
                                                double gamma_th,
                                                PartitionOptions const& opt = {});

struct SweepEntry {
    double value = 0.0;  ///< SI value of the varied field
    std::optional<PartitionSolution> solution;
    std::string error;
};

/// Re-solves the partition problem for each value of one parameter. Varying
/// paoi_threshold or sinr_threshold also moves zeta or gamma_th.
[[nodiscard]] std::vector<SweepEntry> sensitivity_sweep(SystemParameters const& p,
                                                        std::string_view field,
                                                        std::vector<double> const& values,
                                                        double zeta, double gamma_th,
                                                        PartitionOptions const& opt = {});

/// Shape check on a sampled curve: after 3-point median smoothing the
/// forward differences change sign at most once.
[[nodiscard]] bool single_dip(std::vector<double> const& values, double flat_tol = 1e-12);

}  // namespace paoi
