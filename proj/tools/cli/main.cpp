// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiment.hpp"
#include "paoi/error.hpp"

int main(int argc, char** argv)
{
    using paoi::cli::Command;
    CLI::App app{"PAoI violation analysis for cell-free networks with sensing coexistence"};
    app.set_version_flag("--version", std::string(paoi::cli::version()));
    app.require_subcommand(1);

    std::string params;
    std::vector<std::string> sets;
    std::string axis;
    std::vector<double> values;
    std::string unit;
    std::string out = "out";
    std::uint64_t seed = 1;
    std::size_t realizations = 0;
    std::size_t packets = 0;
    double theta = 0.0;
    double quad_tol = 0.0;
    std::string arrivals = "analytic";
    std::string service = "hardened";
    bool trace = false;
    unsigned threads = 0;

    std::map<CLI::App*, Command> commands;
    auto add = [&](char const* name, char const* help, Command c) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--params", params, "parameter file (JSON)")->required();
        sub->add_option("--set", sets, "override key=value[:unit], repeatable");
        sub->add_option("--out", out, "output directory");
        sub->add_option("--quad-tol", quad_tol, "quadrature relative tolerance");
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
        commands[sub] = c;
        return sub;
    };
    auto* analyze = add("analyze", "analytical coverage and PAVP bound", Command::analyze);
    auto* simulate = add("simulate", "Monte Carlo estimates", Command::simulate);
    auto* optimize = add("optimize", "optimal partition factor", Command::optimize);
    auto* sweep = add("sweep", "optimal partition per parameter value", Command::sweep);

    for (auto* sub : {analyze, simulate, sweep}) {
        sub->add_option("--axis", axis, "parameter to vary");
        sub->add_option("--values", values, "comma separated axis values")->delimiter(',');
        sub->add_option("--unit", unit, "unit of the axis values (default SI)");
    }
    for (auto* sub : {analyze, optimize, sweep}) {
        sub->add_option("--theta", theta, "fixed Chernoff parameter [1/s]");
    }
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--realizations", realizations, "spatial realizations");
    simulate->add_option("--packets", packets, "packets per realization");
    simulate->add_option("--arrivals", arrivals, "analytic | physical")
        ->check(CLI::IsMember({"analytic", "physical"}));
    simulate->add_option("--service", service, "hardened | rayleigh")
        ->check(CLI::IsMember({"hardened", "rayleigh"}));
    simulate->add_flag("--trace", trace, "write the first realization's packet trace");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "paoi: error[config]: " << e.what() << '\n';
        return 2;
    }

    paoi::cli::ExperimentSpec spec;
    for (auto const& [sub, c] : commands) {
        if (sub->parsed()) spec.command = c;
    }
    spec.params_file = params;
    spec.output_path = out;
    spec.seed = seed;
    spec.threads = threads;
    spec.trace = trace;
    spec.arrivals = arrivals == "physical" ? paoi::ArrivalMode::physical
                                           : paoi::ArrivalMode::analytic;
    spec.service = service == "rayleigh" ? paoi::ServiceMode::rayleigh
                                         : paoi::ServiceMode::hardened;
    auto* active = app.get_subcommands().front();
    auto given = [active](char const* name) {
        auto const* opt = active->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    try {
        for (auto const& s : sets) spec.overrides.push_back(paoi::cli::parse_override(s));
    } catch (paoi::Error const& e) {
        std::cerr << "paoi: error[config]: " << e.what() << '\n';
        return 2;
    }
    if (given("--axis") || given("--values")) {
        spec.sweep_axis = paoi::cli::SweepAxis{axis.empty() ? "beta" : axis, values, unit};
    }
    if (given("--realizations") || given("--packets")) {
        spec.mc_budget = {realizations, packets};
    }
    if (given("--theta")) spec.theta = theta;
    if (given("--quad-tol")) spec.quad_tol = quad_tol;
    return paoi::cli::run(spec);
}
