// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <vector>

#include <benchmark/benchmark.h>

#include "paoi/comm.hpp"
#include "paoi/montecarlo.hpp"
#include "paoi/numerics.hpp"
#include "paoi/params.hpp"
#include "paoi/sensing.hpp"
#include "paoi/snc.hpp"

namespace {

paoi::SystemParameters const& table1()
{
    static paoi::SystemParameters const p = [] {
        std::ifstream in(PAOI_TABLE1);
        return paoi::from_config(nlohmann::json::parse(in));
    }();
    return p;
}

void BM_Hyp2f1(benchmark::State& state)
{
    double const rho = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(paoi::hyp2f1_interference(rho, 2.1));
    }
}
BENCHMARK(BM_Hyp2f1)->Arg(1)->Arg(10)->Arg(1000);

void BM_SensingCoverage(benchmark::State& state)
{
    auto const& p = table1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(paoi::sensing_coverage(p).p_cov_s);
    }
}
BENCHMARK(BM_SensingCoverage)->Unit(benchmark::kMillisecond);

void BM_ServiceMgf(benchmark::State& state)
{
    auto const& p = table1();
    auto const bound = paoi::comm_coverage(p.sinr_threshold, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(paoi::service_mgf(50.0, p.sinr_threshold, p, bound).value);
    }
}
BENCHMARK(BM_ServiceMgf)->Unit(benchmark::kMicrosecond);

void BM_BestTheta(benchmark::State& state)
{
    auto const& p = table1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(paoi::best_theta(p.paoi_threshold, p, p.sinr_threshold));
    }
}
BENCHMARK(BM_BestTheta)->Unit(benchmark::kMillisecond);

void BM_RunQueue(benchmark::State& state)
{
    auto const n = static_cast<std::size_t>(state.range(0));
    paoi::Rng rng(1, 0);
    std::vector<double> arrivals(n);
    std::vector<double> services(n);
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        t += 1e-3 * static_cast<double>(rng.trials_until_success(0.3));
        arrivals[i] = t;
        services[i] = 2.1e-4 * static_cast<double>(rng.trials_until_success(0.1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(paoi::run_queue(arrivals, services, 5e-3).violations);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RunQueue)->Arg(10000);

void BM_SensingTrial(benchmark::State& state)
{
    auto const& p = table1();
    paoi::SimulationOptions const opt;
    paoi::Rng rng(1, 0);
    for (auto _ : state) {
        auto const real = paoi::sample_sensing_realization(p, opt, rng);
        benchmark::DoNotOptimize(paoi::simulate_sensing_trial(real, p, rng));
    }
}
BENCHMARK(BM_SensingTrial)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
