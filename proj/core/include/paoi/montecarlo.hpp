// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "paoi/params.hpp"
#include "paoi/rng.hpp"
#include "paoi/topology.hpp"

namespace paoi {

enum class ArrivalMode {
    analytic,  ///< geometric scans with the closed-form sensing coverage
    physical,  ///< one fresh sensing topology and detection trial per scan
};

enum class ServiceMode {
    hardened,  ///< SINR fixed at the deterministic equivalent for every slot
    rayleigh,  ///< per-slot SINR gamma * h with h ~ Exp(1)
};

struct SimulationOptions {
    std::uint64_t seed = 1;
    std::size_t realizations = 1000;
    std::size_t packets = 10000;
    /// Interferers of a sensing AP are drawn inside this radius; the mean
    /// power of the remaining plane is added as a constant.
    double interference_radius = 1000.0;  ///< [m]
    /// Radius of the communication cluster around the typical user. Unset
    /// means serving_radius, or max_range when that is unset too.
    std::optional<double> comm_cluster_radius;
    ArrivalMode arrivals = ArrivalMode::analytic;
    ServiceMode service = ServiceMode::hardened;
    unsigned threads = 0;
};

/// Substream families; the low 48 bits of a stream id hold the work-unit index.
enum class StreamFamily : std::uint64_t {
    sensing = 1,
    comm = 2,
    pavp = 3,
    scan = 4,
};

[[nodiscard]] inline std::uint64_t stream_id(StreamFamily f, std::uint64_t index)
{
    return (static_cast<std::uint64_t>(f) << 48) | (index & 0xFFFFFFFFFFFFull);
}

/// Homogeneous PPP restricted to a disk centred at the origin.
[[nodiscard]] std::vector<Point> sample_ppp(double intensity, double radius, Rng& rng);

/// Sensing APs (uniform boresights) around a target at the origin.
[[nodiscard]] SpatialRealization sample_sensing_realization(SystemParameters const& p,
                                                            SimulationOptions const& opt,
                                                            Rng& rng);

/// Communication APs and users in the cluster around a typical user at the
/// origin (users[0]); every user draws one of tau_tr pilots.
[[nodiscard]] SpatialRealization sample_comm_realization(SystemParameters const& p,
                                                         SimulationOptions const& opt,
                                                         Rng& rng);

[[nodiscard]] double comm_cluster_radius(SystemParameters const& p,
                                         SimulationOptions const& opt);

/// True when at least one in-range, aligned sensing AP sees echo SINR > delta.
[[nodiscard]] bool simulate_sensing_trial(SpatialRealization const& real,
                                          SystemParameters const& p, Rng& rng,
                                          double interference_radius = 1000.0);

struct ServiceSample {
    std::uint64_t slots = 0;
    double gamma = 0.0;
};

/// Retransmission count for a fixed SINR.
[[nodiscard]] std::uint64_t sample_slots(double gamma, SystemParameters const& p,
                                         ServiceMode mode, Rng& rng);

/// Service draw for a user of the realization; nullopt when the user is out
/// of coverage (DE SINR below gamma_th, interference-dominated, or no AP).
[[nodiscard]] std::optional<ServiceSample> simulate_service_sample(
    SpatialRealization const& real, std::size_t user_index, SystemParameters const& p,
    double gamma_th, Rng& rng, ServiceMode mode = ServiceMode::hardened);

struct QueueTrace {
    std::vector<double> arrivals;
    std::vector<double> services;
    std::vector<double> departures;
    std::vector<double> paoi;  ///< size n - 1: Delta(n) = T^D(n+1) - T^A(n)
    std::size_t violations = 0;
};

/// FCFS single-server queue through the start-time recursion
/// Z(n) = max(T^A(n), Z(n-1) + T^S(n-1)), T^D(n) = Z(n) + T^S(n).
[[nodiscard]] QueueTrace run_queue(std::vector<double> const& arrival_times,
                                   std::vector<double> const& service_times, double zeta);

/// Writes per-packet columns n, T^A, T^S, T^D, Delta (empty for the last packet).
void write_trace_csv(std::ostream& os, QueueTrace const& trace);

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;  ///< binomial standard error sqrt(p (1 - p) / n)
    std::size_t samples = 0;
};

[[nodiscard]] Estimate simulate_sensing_coverage(SystemParameters const& p, std::size_t trials,
                                                 SimulationOptions const& opt = {});

/// Fraction of realizations whose typical user has DE SINR >= gamma_th.
[[nodiscard]] Estimate simulate_comm_coverage(SystemParameters const& p, double gamma_th,
                                              std::size_t realizations,
                                              SimulationOptions const& opt = {});

struct PavpEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;         ///< binomial, over realizations
    double sample_stderr = 0.0;   ///< spread of per-realization fractions
    std::size_t realizations = 0;
    std::size_t in_coverage = 0;
    std::size_t packets_simulated = 0;
};

/// Empirical PAoI violation probability. Out-of-coverage realizations count
/// as violation probability 1, as do realizations that can never generate a
/// packet (zero sensing coverage).
[[nodiscard]] PavpEstimate simulate_pavp(SystemParameters const& p, double zeta,
                                         double gamma_th, SimulationOptions const& opt = {});

/// The per-packet trace of one PAVP realization, for export.
[[nodiscard]] std::optional<QueueTrace> simulate_pavp_trace(SystemParameters const& p,
                                                            double zeta, double gamma_th,
                                                            std::size_t realization,
                                                            SimulationOptions const& opt = {});

}  // namespace paoi
