// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace paoi {

/// Physical and protocol constants of a coexistence deployment.
///
/// Every field is stored in SI units on a linear scale. Conversion from
/// dB/dBm/dBsm/dBi, AP/km^2 and milliseconds happens once, in from_config().
/// Quantities that follow from other fields (partitioned intensities, data
/// symbols, slot duration) are member functions so they can never go stale.
struct SystemParameters {
    double lambda_total = 0.0;  ///< AP intensity [1/m^2]
    double lambda_u = 0.0;      ///< user intensity [1/m^2]
    double beta = 0.0;          ///< share of APs assigned to communication
    int n_antennas = 1;         ///< antennas per communication AP
    double alpha = 0.0;         ///< path-loss exponent, > 2
    double power = 0.0;         ///< AP transmit power [W]
    double bandwidth_s = 0.0;   ///< sensing bandwidth [Hz]
    double bandwidth_c = 0.0;   ///< communication bandwidth [Hz]
    double scan_interval = 0.0; ///< radar scan period [s]
    double paoi_threshold = 0.0;  ///< PAoI deadline zeta [s]
    double packet_bits = 0.0;     ///< sensory packet size [bit]
    double gain_tx = 1.0;
    double gain_rx = 1.0;
    double rcs_mean = 0.0;        ///< mean Swerling-I RCS [m^2]
    double max_range = 0.0;       ///< radar range [m]
    double detect_threshold = 0.0;
    double beam_halfwidth = 0.0;  ///< main-lobe half width [rad]
    double noise_sensing = 0.0;   ///< sensing noise power [W]
    double coherence_symbols = 0.0;
    double pilot_symbols = 0.0;
    double blocklength = 0.0;
    double pilot_snr = 0.0;       ///< normalized pilot SNR (linear)
    double sinr_threshold = 0.0;  ///< downlink SINR threshold (linear)
    double wavelength = 0.0;      ///< radar wavelength [m]

    /// Expected number of cooperating antennas. When unset it is derived
    /// from serving_radius, see effective_aleph().
    std::optional<double> aleph_mean;
    std::optional<double> serving_radius;  ///< [m]

    /// Distance at which the bounded communication path loss min(1, d^-alpha)
    /// saturates. Communication distances and intensities are expressed in
    /// multiples of this length.
    double comm_reference_distance = 1.0;  ///< [m]
    /// Receiver noise power used to normalize the downlink transmit power.
    double noise_comm = 1.0;  ///< [W]

    /// The smaller share is formed as an exact difference, so
    /// lambda_s() + lambda_c() == lambda_total holds in floating point.
    [[nodiscard]] double lambda_s() const noexcept { return lambda_total - lambda_c(); }
    [[nodiscard]] double lambda_c() const noexcept
    {
        return beta >= 0.5 ? beta * lambda_total : lambda_total - (1.0 - beta) * lambda_total;
    }
    /// Data symbols per coherence block.
    [[nodiscard]] double tau_d() const noexcept { return coherence_symbols - pilot_symbols; }
    /// Coherence block (retransmission slot) duration [s].
    [[nodiscard]] double slot_duration() const noexcept
    {
        return coherence_symbols / bandwidth_c;
    }
    /// Transmit power normalized to the downlink noise floor.
    [[nodiscard]] double comm_snr() const noexcept { return power / noise_comm; }
    /// Converts an intensity per m^2 into the communication length unit.
    [[nodiscard]] double comm_intensity(double per_m2) const noexcept
    {
        return per_m2 * comm_reference_distance * comm_reference_distance;
    }

    /// Throws paoi::Error (ErrorCode::config) naming the first violated field.
    void validate() const;
};

/// Expected aggregate serving antennas: aleph_mean when configured, else
/// N * lambda_c * pi * serving_radius^2. Throws when the result is below 1.
[[nodiscard]] double effective_aleph(SystemParameters const& p);

/// Parses a flat JSON object of {"value": x, "unit": "..."} pairs.
[[nodiscard]] SystemParameters from_config(nlohmann::json const& doc);

/// Emits the normalized parameters in SI/linear units; from_config() of the
/// result reproduces the same values.
[[nodiscard]] nlohmann::json to_config(SystemParameters const& p);

/// Converts a value expressed in `unit` to SI/linear for parameter `field`.
[[nodiscard]] double to_si(std::string_view field, double value, std::string_view unit);

/// Names accepted by set_field()/get_field().
[[nodiscard]] std::span<std::string_view const> field_names();

/// Assigns an SI value to a named field (validation is left to the caller).
void set_field(SystemParameters& p, std::string_view field, double value);
[[nodiscard]] double get_field(SystemParameters const& p, std::string_view field);

/// Copy of `p` with one field replaced and the result validated.
[[nodiscard]] SystemParameters with_field(SystemParameters p, std::string_view field,
                                          double value);

[[nodiscard]] inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace paoi
