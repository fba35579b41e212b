// Copyright 2026 The mwion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "mwion/addressing.hpp"
#include "mwion/constants.hpp"
#include "mwion/crystal.hpp"
#include "mwion/dynamics.hpp"
#include "mwion/fidelity.hpp"
#include "mwion/zeeman.hpp"

namespace {

mwion::TrapConfig chain_config(int n) {
    mwion::TrapConfig c;
    c.species = mwion::ytterbium171();
    c.n_ions = n;
    c.omega_z = mwion::constants::kTwoPi * 1e5;
    c.omega_r = 1.25 * mwion::linearity_threshold(n) * c.omega_z;
    return c;
}

void BM_SolveChain(benchmark::State& state) {
    const auto c = chain_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mwion::solve_chain(c));
}
BENCHMARK(BM_SolveChain)->Arg(10)->Arg(40)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EstimateSpread(benchmark::State& state) {
    const mwion::QubitLevels levels(mwion::ytterbium171());
    auto c = chain_config(static_cast<int>(state.range(0)));
    c.gradient_b = mwion::required_gradient(c, levels);
    mwion::SpreadOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(mwion::estimate_spread(c, levels, opts));
}
BENCHMARK(BM_EstimateSpread)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EvolveSideband(benchmark::State& state) {
    mwion::DriveSpec d;
    d.epsilon_c = 0.05;
    d.detuning = 1.0;
    d.rabi_frequency = 0.01;
    d.duration = 3.14159 / (0.05 * 0.01);
    const auto start = mwion::QuantumState::basis(0, 0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mwion::evolve(start, d, 1.0));
}
BENCHMARK(BM_EvolveSideband)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
