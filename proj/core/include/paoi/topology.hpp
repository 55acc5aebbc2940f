// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace paoi {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct SensingAp {
    Point position;
    double boresight = 0.0;  ///< main-lobe direction [rad]
};

/// One sampled network topology. Coordinates are in meters; the target and
/// the typical user (users[0] when present) sit at the origin.
struct SpatialRealization {
    std::vector<SensingAp> sensing_aps;
    std::vector<Point> comm_aps;
    std::vector<Point> users;
    std::vector<int> pilot_of_user;
    Point target;
    double region_radius = 0.0;
    std::uint64_t rng_seed = 0;
};

}  // namespace paoi
