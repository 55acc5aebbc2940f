// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include "experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "paoi/error.hpp"
#include "paoi/montecarlo.hpp"
#include "paoi/optimizer.hpp"
#include "paoi/params.hpp"
#include "paoi/snc.hpp"

#ifndef PAOI_VERSION_STRING
#define PAOI_VERSION_STRING "unknown"
#endif

namespace paoi::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string opt_num(std::optional<double> v) { return v ? num(*v) : std::string(); }

std::string one_line(std::string s)
{
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::numerical: return 3;
    case ErrorCode::infeasible:
    case ErrorCode::degenerate: return 4;
    case ErrorCode::config:
    case ErrorCode::invalid_argument: return 2;
    }
    return 2;
}

SystemParameters load_params(ExperimentSpec const& spec)
{
    std::ifstream in(spec.params_file);
    if (!in) throw Error(ErrorCode::config, "cannot open params file '" + spec.params_file + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (json::exception const& e) {
        throw Error(ErrorCode::config, "params file is not valid JSON: " + std::string(e.what()));
    }
    SystemParameters p = from_config(doc);
    for (auto const& o : spec.overrides) {
        double const si = o.unit.empty() ? o.value : to_si(o.field, o.value, o.unit);
        set_field(p, o.field, si);
    }
    p.validate();
    return p;
}

QuadratureSpec quadrature(ExperimentSpec const& spec)
{
    QuadratureSpec q;
    if (spec.quad_tol) {
        q.rel_tol = *spec.quad_tol;
        q.abs_tol = *spec.quad_tol * 1e-2;
    }
    q.validate();
    return q;
}

SimulationOptions simulation(ExperimentSpec const& spec)
{
    SimulationOptions o;
    o.seed = spec.seed;
    if (spec.mc_budget) {
        o.realizations = spec.mc_budget->first;
        o.packets = spec.mc_budget->second;
    }
    o.arrivals = spec.arrivals;
    o.service = spec.service;
    o.threads = spec.threads;
    return o;
}

SweepAxis axis_or_default(ExperimentSpec const& spec, SystemParameters const& p)
{
    if (spec.sweep_axis) return *spec.sweep_axis;
    return SweepAxis{"beta", {p.beta}, {}};
}

double axis_si(SweepAxis const& axis, double v)
{
    return axis.unit.empty() ? v : to_si(axis.field, v, axis.unit);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(fs::path const& path, Table const& t)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::config, "cannot write '" + path.string() + "'");
    auto line = [&](std::vector<std::string> const& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(t.header);
    for (auto const& r : t.rows) line(r);
}

Table analyze(ExperimentSpec const& spec, SystemParameters const& base, SweepAxis const& axis,
              QuadratureSpec const& quad)
{
    Table t;
    t.header = {axis.field, "p_cov_s", "p_cov_c", "psi", "aleph_eff", "saturated",
                "theta_star", "upsilon", "upsilon_nw", "stable", "clamped", "note"};
    for (double v : axis.values) {
        auto const q = with_field(base, axis.field, axis_si(axis, v));
        PavpEvaluator const ev(q, q.sinr_threshold, quad);
        auto const r = spec.theta ? ev.evaluate(*spec.theta, q.paoi_threshold)
                                  : ev.best(q.paoi_threshold);
        auto const& b = ev.coverage_bound();
        t.rows.push_back({num(v), num(ev.p_cov_s()), num(ev.p_cov_c()), num(b.psi_value),
                          num(b.aleph_eff), b.saturated ? "1" : "0", opt_num(r.theta_star),
                          num(r.upsilon), num(r.upsilon_nw), r.stable ? "1" : "0",
                          r.clamped ? "1" : "0", r.note});
    }
    return t;
}

Table simulate(ExperimentSpec const& spec, SystemParameters const& base, SweepAxis const& axis,
               fs::path const& out_dir)
{
    auto const opt = simulation(spec);
    Table t;
    t.header = {axis.field,   "p_cov_s_mc",     "p_cov_s_se",  "p_cov_c_mc",
                "p_cov_c_se", "pavp_mc",        "pavp_se",     "pavp_sample_se",
                "in_coverage", "realizations",  "packets"};
    bool first = true;
    for (double v : axis.values) {
        auto const q = with_field(base, axis.field, axis_si(axis, v));
        double const g = q.sinr_threshold;
        auto const s = simulate_sensing_coverage(q, opt.realizations, opt);
        auto const c = simulate_comm_coverage(q, g, opt.realizations, opt);
        auto const e = simulate_pavp(q, q.paoi_threshold, g, opt);
        t.rows.push_back({num(v), num(s.mean), num(s.stderr_), num(c.mean), num(c.stderr_),
                          num(e.mean), num(e.stderr_), num(e.sample_stderr),
                          std::to_string(e.in_coverage), std::to_string(e.realizations),
                          std::to_string(opt.packets)});
        if (spec.trace && first) {
            std::ofstream tr(out_dir / "trace.csv", std::ios::binary);
            if (auto trace = simulate_pavp_trace(q, q.paoi_threshold, g, 0, opt)) {
                write_trace_csv(tr, *trace);
            } else {
                tr << "n,arrival_s,service_s,departure_s,paoi_s\n";
            }
        }
        first = false;
    }
    return t;
}

PartitionOptions partition_options(ExperimentSpec const& spec, QuadratureSpec const& quad)
{
    PartitionOptions o;
    o.quad = quad;
    o.fixed_theta = spec.theta;
    o.threads = spec.threads;
    return o;
}

Table optimize(ExperimentSpec const& spec, SystemParameters const& base,
               QuadratureSpec const& quad, bool& infeasible)
{
    auto const sol =
        solve_partition(base, base.paoi_threshold, base.sinr_threshold,
                        partition_options(spec, quad));
    Table t;
    t.header = {"beta", "upsilon_nw", "theta_star", "stable", "kind"};
    for (auto const& c : sol.curve) {
        bool const endpoint = c.beta == 0.0 || c.beta == 1.0;
        t.rows.push_back({num(c.beta), num(c.upsilon_nw), opt_num(c.theta_star),
                          c.stable ? "1" : "0", endpoint ? "endpoint" : "grid"});
    }
    t.rows.push_back({num(sol.beta_star), num(sol.upsilon_nw_star), opt_num(sol.theta_star),
                      sol.feasible_interval ? "1" : "0", "beta_star"});
    infeasible = !sol.feasible_interval;
    return t;
}

Table sweep(ExperimentSpec const& spec, SystemParameters const& base, SweepAxis const& axis,
            QuadratureSpec const& quad)
{
    std::vector<double> si;
    for (double v : axis.values) si.push_back(axis_si(axis, v));
    auto const entries = sensitivity_sweep(base, axis.field, si, base.paoi_threshold,
                                           base.sinr_threshold, partition_options(spec, quad));
    Table t;
    t.header = {axis.field,    "beta_star",   "upsilon_nw_star", "theta_star",
                "feasible_lo", "feasible_hi", "error"};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto const& e = entries[i];
        if (!e.solution) {
            t.rows.push_back({num(axis.values[i]), "", "", "", "", "", one_line(e.error)});
            continue;
        }
        auto const& s = *e.solution;
        std::string lo, hi;
        if (s.feasible_interval) {
            lo = num(s.feasible_interval->first);
            hi = num(s.feasible_interval->second);
        }
        t.rows.push_back({num(axis.values[i]), num(s.beta_star), num(s.upsilon_nw_star),
                          opt_num(s.theta_star), lo, hi, ""});
    }
    return t;
}

json sidecar(ExperimentSpec const& spec, SystemParameters const& p, SweepAxis const& axis,
             QuadratureSpec const& quad)
{
    json j;
    j["command"] = command_name(spec.command);
    j["version"] = version();
    j["seed"] = spec.seed;
    j["params_file"] = spec.params_file;
    j["params"] = to_config(p);
    json ov = json::array();
    for (auto const& o : spec.overrides) {
        ov.push_back({{"field", o.field}, {"value", o.value}, {"unit", o.unit}});
    }
    j["overrides"] = ov;
    j["axis"] = {{"field", axis.field}, {"values", axis.values}, {"unit", axis.unit}};
    j["quadrature"] = {{"abs_tol", quad.abs_tol},
                       {"rel_tol", quad.rel_tol},
                       {"max_subdivisions", quad.max_subdivisions}};
    ThetaSearch const ts;
    j["theta"] = {{"fixed", spec.theta ? json(*spec.theta) : json(nullptr)},
                  {"search", {{"lo", ts.lo}, {"hi", ts.hi}, {"points", ts.points}}}};
    if (spec.mc_budget) {
        auto const o = simulation(spec);
        j["monte_carlo"] = {
            {"realizations", spec.mc_budget->first},
            {"packets", spec.mc_budget->second},
            {"interference_radius_m", o.interference_radius},
            {"comm_cluster_radius_m", comm_cluster_radius(p, o)},
            {"arrivals", spec.arrivals == ArrivalMode::analytic ? "analytic" : "physical"},
            {"service", spec.service == ServiceMode::hardened ? "hardened" : "rayleigh"}};
    }
    return j;
}

}  // namespace

Override parse_override(std::string const& text)
{
    auto const eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorCode::config, "override '" + text + "' is not key=value[:unit]");
    }
    Override o;
    o.field = canonical_field(text.substr(0, eq));
    std::string rest = text.substr(eq + 1);
    if (auto const colon = rest.find(':'); colon != std::string::npos) {
        o.unit = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
    }
    std::size_t used = 0;
    try {
        o.value = std::stod(rest, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != rest.size()) {
        throw Error(ErrorCode::config, "override value '" + rest + "' is not a number", o.field);
    }
    return o;
}

std::string canonical_field(std::string const& name)
{
    static std::map<std::string, std::string> const aliases = {
        {"delta", "detect_threshold"}, {"zeta", "paoi_threshold"},
        {"gamma_th", "sinr_threshold"}, {"sigma_bar", "rcs_mean"},
        {"rcs", "rcs_mean"},           {"lambda", "lambda_total"},
        {"tau_tr", "pilot_symbols"},   {"tau_c", "coherence_symbols"},
        {"rho_tr", "pilot_snr"},       {"t_s", "scan_interval"},
        {"n", "n_antennas"},           {"theta_beam", "beam_halfwidth"},
    };
    auto const it = aliases.find(name);
    std::string const field = it == aliases.end() ? name : it->second;
    for (auto f : field_names()) {
        if (f == field) return field;
    }
    throw Error(ErrorCode::config, "unknown parameter '" + name + "'", name);
}

char const* command_name(Command c)
{
    switch (c) {
    case Command::analyze: return "analyze";
    case Command::simulate: return "simulate";
    case Command::optimize: return "optimize";
    case Command::sweep: return "sweep";
    }
    return "?";
}

char const* version() { return PAOI_VERSION_STRING; }

void validate(ExperimentSpec const& spec)
{
    if (spec.params_file.empty()) throw Error(ErrorCode::config, "--params is required");
    if (spec.command == Command::sweep && !spec.sweep_axis) {
        throw Error(ErrorCode::config, "sweep requires --axis and --values");
    }
    if (spec.command == Command::simulate && !spec.mc_budget) {
        throw Error(ErrorCode::config, "simulate requires --realizations and --packets");
    }
    if (spec.sweep_axis && spec.sweep_axis->values.empty()) {
        throw Error(ErrorCode::config, "--values must list at least one value");
    }
    if (spec.mc_budget && (spec.mc_budget->first < 1 || spec.mc_budget->second < 2)) {
        throw Error(ErrorCode::config, "need realizations >= 1 and packets >= 2");
    }
    if (spec.theta && !(*spec.theta > 0.0)) {
        throw Error(ErrorCode::config, "--theta must be positive");
    }
}

int run(ExperimentSpec const& spec)
{
    try {
        validate(spec);
        auto const p = load_params(spec);
        auto const quad = quadrature(spec);
        auto axis = axis_or_default(spec, p);
        axis.field = canonical_field(axis.field);

        fs::path const dir(spec.output_path);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::config, "cannot create output directory: " + ec.message());

        bool infeasible = false;
        Table table;
        switch (spec.command) {
        case Command::analyze: table = analyze(spec, p, axis, quad); break;
        case Command::simulate: table = simulate(spec, p, axis, dir); break;
        case Command::optimize: table = optimize(spec, p, quad, infeasible); break;
        case Command::sweep: table = sweep(spec, p, axis, quad); break;
        }
        std::string const stem = command_name(spec.command);
        write_csv(dir / (stem + ".csv"), table);
        std::ofstream meta(dir / (stem + ".json"), std::ios::binary);
        meta << sidecar(spec, p, axis, quad).dump(2) << '\n';

        if (infeasible) {
            std::cerr << "paoi: error[infeasible]: no stable theta for any partition\n";
            return 4;
        }
        return 0;
    } catch (Error const& e) {
        std::cerr << "paoi: error[" << to_string(e.code()) << "]: " << one_line(e.what());
        if (!e.field().empty()) std::cerr << " (field " << e.field() << ")";
        std::cerr << '\n';
        return exit_code(e.code());
    } catch (std::exception const& e) {
        std::cerr << "paoi: error[internal]: " << one_line(e.what()) << '\n';
        return 3;
    }
}

}  // namespace paoi::cli
