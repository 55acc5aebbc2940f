// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paoi/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "paoi/error.hpp"

namespace paoi {
namespace {

enum class Kind {
    intensity,
    dimensionless,
    ratio,
    power,
    gain,
    area,
    time,
    frequency,
    length,
    angle,
    count,
    pilot_snr,
};

struct FieldInfo {
    std::string_view name;
    Kind kind;
    bool required;
};

constexpr std::array kFields = {
    FieldInfo{"lambda_total", Kind::intensity, true},
    FieldInfo{"lambda_u", Kind::intensity, true},
    FieldInfo{"beta", Kind::dimensionless, true},
    FieldInfo{"n_antennas", Kind::count, true},
    FieldInfo{"alpha", Kind::dimensionless, true},
    FieldInfo{"power", Kind::power, true},
    FieldInfo{"bandwidth_s", Kind::frequency, true},
    FieldInfo{"bandwidth_c", Kind::frequency, true},
    FieldInfo{"scan_interval", Kind::time, true},
    FieldInfo{"paoi_threshold", Kind::time, true},
    FieldInfo{"packet_bits", Kind::count, true},
    FieldInfo{"gain_tx", Kind::gain, true},
    FieldInfo{"gain_rx", Kind::gain, true},
    FieldInfo{"rcs_mean", Kind::area, true},
    FieldInfo{"max_range", Kind::length, true},
    FieldInfo{"detect_threshold", Kind::ratio, true},
    FieldInfo{"beam_halfwidth", Kind::angle, true},
    FieldInfo{"noise_sensing", Kind::power, true},
    FieldInfo{"coherence_symbols", Kind::count, true},
    FieldInfo{"pilot_symbols", Kind::count, true},
    FieldInfo{"blocklength", Kind::count, true},
    FieldInfo{"pilot_snr", Kind::pilot_snr, true},
    FieldInfo{"sinr_threshold", Kind::ratio, true},
    FieldInfo{"wavelength", Kind::length, true},
    FieldInfo{"aleph_mean", Kind::dimensionless, false},
    FieldInfo{"serving_radius", Kind::length, false},
    FieldInfo{"comm_reference_distance", Kind::length, false},
    FieldInfo{"noise_comm", Kind::power, false},
};

constexpr auto kNames = [] {
    std::array<std::string_view, kFields.size()> names{};
    for (std::size_t i = 0; i < kFields.size(); ++i) {
        names[i] = kFields[i].name;
    }
    return names;
}();

FieldInfo const& lookup(std::string_view field)
{
    auto it = std::find_if(kFields.begin(), kFields.end(),
                           [&](FieldInfo const& f) { return f.name == field; });
    if (it == kFields.end()) {
        throw Error(ErrorCode::config, "unknown parameter '" + std::string(field) + "'",
                    std::string(field));
    }
    return *it;
}

std::string_view canonical_unit(Kind kind)
{
    switch (kind) {
    case Kind::intensity: return "per_m2";
    case Kind::power: return "w";
    case Kind::area: return "m2";
    case Kind::time: return "s";
    case Kind::frequency: return "hz";
    case Kind::length: return "m";
    case Kind::angle: return "rad";
    default: return "linear";
    }
}

[[noreturn]] void bad_unit(std::string_view field, std::string_view unit)
{
    throw Error(ErrorCode::config,
                "unit '" + std::string(unit) + "' not accepted for '" + std::string(field) + "'",
                std::string(field));
}

double convert(Kind kind, std::string_view field, double v, std::string_view unit)
{
    switch (kind) {
    case Kind::intensity:
        if (unit == "per_m2") return v;
        if (unit == "per_km2") return v * 1e-6;
        break;
    case Kind::dimensionless:
    case Kind::count:
        if (unit == "linear" || unit == "symbols" || unit == "bits") return v;
        break;
    case Kind::ratio:
    case Kind::gain:
        if (unit == "linear") return v;
        if (unit == "db" || unit == "dbi") return db_to_linear(v);
        break;
    case Kind::pilot_snr:
        if (unit == "linear") return v;
        if (unit == "db") return db_to_linear(v);
        if (unit == "dbm") return db_to_linear(v - 30.0);
        break;
    case Kind::power:
        if (unit == "w" || unit == "linear") return v;
        if (unit == "mw") return v * 1e-3;
        if (unit == "dbm") return db_to_linear(v - 30.0);
        if (unit == "dbw") return db_to_linear(v);
        break;
    case Kind::area:
        if (unit == "m2" || unit == "linear") return v;
        if (unit == "dbsm") return db_to_linear(v);
        break;
    case Kind::time:
        if (unit == "s") return v;
        if (unit == "ms") return v * 1e-3;
        if (unit == "us") return v * 1e-6;
        break;
    case Kind::frequency:
        if (unit == "hz") return v;
        if (unit == "khz") return v * 1e3;
        if (unit == "mhz") return v * 1e6;
        if (unit == "ghz") return v * 1e9;
        break;
    case Kind::length:
        if (unit == "m") return v;
        if (unit == "km") return v * 1e3;
        break;
    case Kind::angle:
        if (unit == "rad") return v;
        if (unit == "deg") return v * std::numbers::pi / 180.0;
        break;
    }
    bad_unit(field, unit);
}

[[noreturn]] void invalid(std::string_view field, std::string const& why)
{
    throw Error(ErrorCode::config, std::string(field) + ": " + why, std::string(field));
}

}  // namespace

void SystemParameters::validate() const
{
    auto require = [](bool ok, std::string_view field, char const* why) {
        if (!ok) invalid(field, why);
    };
    for (auto name : kNames) {
        if (name == "aleph_mean" && !aleph_mean) continue;
        if (name == "serving_radius" && !serving_radius) continue;
        require(std::isfinite(get_field(*this, name)), name, "value must be finite");
    }
    require(beta >= 0.0 && beta <= 1.0, "beta", "must lie in [0, 1]");
    require(alpha > 2.0, "alpha", "path-loss exponent must exceed 2");
    require(lambda_total >= 0.0, "lambda_total", "must be nonnegative");
    require(lambda_u >= 0.0, "lambda_u", "must be nonnegative");
    require(n_antennas >= 1, "n_antennas", "must be a positive integer");
    require(power >= 0.0, "power", "must be nonnegative");
    require(bandwidth_s > 0.0, "bandwidth_s", "must be positive");
    require(bandwidth_c > 0.0, "bandwidth_c", "must be positive");
    require(scan_interval > 0.0, "scan_interval", "must be positive");
    require(paoi_threshold >= 0.0, "paoi_threshold", "must be nonnegative");
    require(packet_bits >= 0.0, "packet_bits", "must be nonnegative");
    require(gain_tx >= 0.0, "gain_tx", "must be nonnegative");
    require(gain_rx >= 0.0, "gain_rx", "must be nonnegative");
    require(rcs_mean >= 0.0, "rcs_mean", "must be nonnegative");
    require(max_range >= 0.0, "max_range", "must be nonnegative");
    require(detect_threshold >= 0.0, "detect_threshold", "must be nonnegative");
    require(beam_halfwidth >= 0.0 && beam_halfwidth <= std::numbers::pi, "beam_halfwidth",
            "must lie in [0, pi]");
    require(noise_sensing >= 0.0, "noise_sensing", "must be nonnegative");
    require(pilot_symbols >= 1.0, "pilot_symbols", "at least one pilot symbol is required");
    require(pilot_symbols < coherence_symbols, "pilot_symbols",
            "must be smaller than coherence_symbols");
    require(blocklength > 0.0, "blocklength", "must be positive");
    require(pilot_snr > 0.0, "pilot_snr", "must be positive");
    require(sinr_threshold >= 0.0, "sinr_threshold", "must be nonnegative");
    require(wavelength > 0.0, "wavelength", "must be positive");
    require(comm_reference_distance > 0.0, "comm_reference_distance", "must be positive");
    require(noise_comm > 0.0, "noise_comm", "must be positive");
    if (aleph_mean) require(*aleph_mean > 0.0, "aleph_mean", "must be positive");
    if (serving_radius) require(*serving_radius > 0.0, "serving_radius", "must be positive");
}

double effective_aleph(SystemParameters const& p)
{
    double aleph = 0.0;
    if (p.aleph_mean) {
        aleph = *p.aleph_mean;
    } else if (p.serving_radius) {
        aleph = p.n_antennas * p.lambda_c() * std::numbers::pi * *p.serving_radius
                * *p.serving_radius;
    } else {
        throw Error(ErrorCode::config, "aleph_mean or serving_radius must be configured",
                    "aleph_mean");
    }
    if (!(aleph >= 1.0)) {
        throw Error(ErrorCode::degenerate,
                    "expected serving antenna count " + std::to_string(aleph) + " is below 1",
                    "aleph_mean");
    }
    return aleph;
}

double to_si(std::string_view field, double value, std::string_view unit)
{
    auto const& info = lookup(field);
    return convert(info.kind, field, value, unit);
}

std::span<std::string_view const> field_names() { return kNames; }

namespace {

double* member(SystemParameters& p, std::string_view f)
{
    if (f == "lambda_total") return &p.lambda_total;
    if (f == "lambda_u") return &p.lambda_u;
    if (f == "beta") return &p.beta;
    if (f == "alpha") return &p.alpha;
    if (f == "power") return &p.power;
    if (f == "bandwidth_s") return &p.bandwidth_s;
    if (f == "bandwidth_c") return &p.bandwidth_c;
    if (f == "scan_interval") return &p.scan_interval;
    if (f == "paoi_threshold") return &p.paoi_threshold;
    if (f == "packet_bits") return &p.packet_bits;
    if (f == "gain_tx") return &p.gain_tx;
    if (f == "gain_rx") return &p.gain_rx;
    if (f == "rcs_mean") return &p.rcs_mean;
    if (f == "max_range") return &p.max_range;
    if (f == "detect_threshold") return &p.detect_threshold;
    if (f == "beam_halfwidth") return &p.beam_halfwidth;
    if (f == "noise_sensing") return &p.noise_sensing;
    if (f == "coherence_symbols") return &p.coherence_symbols;
    if (f == "pilot_symbols") return &p.pilot_symbols;
    if (f == "blocklength") return &p.blocklength;
    if (f == "pilot_snr") return &p.pilot_snr;
    if (f == "sinr_threshold") return &p.sinr_threshold;
    if (f == "wavelength") return &p.wavelength;
    if (f == "comm_reference_distance") return &p.comm_reference_distance;
    if (f == "noise_comm") return &p.noise_comm;
    return nullptr;
}

}  // namespace

void set_field(SystemParameters& p, std::string_view field, double si_value)
{
    lookup(field);
    if (field == "n_antennas") {
        if (si_value != std::floor(si_value) || si_value > 1e9) {
            invalid(field, "must be an integer");
        }
        p.n_antennas = static_cast<int>(si_value);
    } else if (field == "aleph_mean") {
        p.aleph_mean = si_value;
    } else if (field == "serving_radius") {
        p.serving_radius = si_value;
    } else {
        *member(p, field) = si_value;
    }
}

double get_field(SystemParameters const& p, std::string_view field)
{
    lookup(field);
    if (field == "n_antennas") return p.n_antennas;
    if (field == "aleph_mean") return p.aleph_mean.value_or(std::nan(""));
    if (field == "serving_radius") return p.serving_radius.value_or(std::nan(""));
    return *member(const_cast<SystemParameters&>(p), field);
}

SystemParameters with_field(SystemParameters p, std::string_view field, double si_value)
{
    set_field(p, field, si_value);
    p.validate();
    return p;
}

SystemParameters from_config(nlohmann::json const& doc)
{
    if (!doc.is_object()) {
        throw Error(ErrorCode::config, "parameter document must be a JSON object");
    }
    for (auto const& [key, _] : doc.items()) {
        lookup(key);
    }
    SystemParameters p;
    for (auto const& info : kFields) {
        std::string const key(info.name);
        if (!doc.contains(key)) {
            if (info.required) {
                throw Error(ErrorCode::config, "missing required parameter '" + key + "'", key);
            }
            continue;
        }
        auto const& entry = doc.at(key);
        if (!entry.is_object() || !entry.contains("value") || !entry.contains("unit")
            || !entry.at("value").is_number() || !entry.at("unit").is_string()) {
            throw Error(ErrorCode::config,
                        key + ": expected {\"value\": number, \"unit\": string}", key);
        }
        double const raw = entry.at("value").get<double>();
        if (!std::isfinite(raw)) invalid(info.name, "value must be finite");
        auto const unit = entry.at("unit").get<std::string>();
        set_field(p, info.name, convert(info.kind, info.name, raw, unit));
    }
    p.validate();
    return p;
}

nlohmann::json to_config(SystemParameters const& p)
{
    nlohmann::json doc = nlohmann::json::object();
    for (auto const& info : kFields) {
        double const v = get_field(p, info.name);
        if (std::isnan(v)) continue;
        doc[std::string(info.name)] = {{"value", v}, {"unit", canonical_unit(info.kind)}};
    }
    return doc;
}

}  // namespace paoi
