// Copyright 2026 dephasim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dephasim/analysis.hpp"
#include "dephasim/correlations.hpp"
#include "dephasim/dynamics.hpp"
#include "dephasim/states.hpp"

namespace {

using namespace dephasim;

const Orientation kTilted = Orientation::normalized(0.0, 1.0, 2.0);

void BM_BuildGenerator(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_generator(kTilted).matrix);
  }
}
BENCHMARK(BM_BuildGenerator);

void BM_CollectiveOperator(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(collective_operator(kTilted).eigenvalues);
  }
}
BENCHMARK(BM_CollectiveOperator);

void BM_EvolveExact(benchmark::State& state) {
  const DensityMatrix rho0 = rho_alpha_beta(0.4, 0.7);
  const CollectiveOperator op = collective_operator(kTilted);
  double tau = 0.0;
  for (auto _ : state) {
    tau += 1e-3;
    benchmark::DoNotOptimize(evolve_exact(rho0, op, tau).matrix());
  }
}
BENCHMARK(BM_EvolveExact);

void BM_EvolveSuperop(benchmark::State& state) {
  const DensityMatrix rho0 = rho_alpha_beta(0.4, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_superop(rho0, kTilted, 1.0).matrix());
  }
}
BENCHMARK(BM_EvolveSuperop);

void BM_Negativity(benchmark::State& state) {
  const DensityMatrix rho = rho_alpha_beta(0.4, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity(rho));
  }
}
BENCHMARK(BM_Negativity);

void BM_Lqu(benchmark::State& state) {
  const DensityMatrix rho = rho_alpha_beta(0.4, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lqu(rho));
  }
}
BENCHMARK(BM_Lqu);

void BM_LquBruteforce(benchmark::State& state) {
  const DensityMatrix rho = rho_alpha_beta(0.4, 0.7);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lqu_bruteforce(rho, grid));
  }
}
BENCHMARK(BM_LquBruteforce)->Arg(16)->Arg(64);

void BM_StochasticUnfold(benchmark::State& state) {
  const DensityMatrix rho0 = bell_states().phi_plus.density();
  const std::int64_t trajectories = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        stochastic_unfold(rho0, kTilted, 1.0, trajectories, 11).matrix());
  }
  state.SetItemsProcessed(state.iterations() * trajectories);
}
BENCHMARK(BM_StochasticUnfold)->Arg(1000)->Arg(10000);

void BM_SampleTrajectory(benchmark::State& state) {
  const DensityMatrix rho0 = rho_alpha_beta(0.4, 0.7);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_trajectory(rho0, kTilted, 20.0, steps).times);
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SampleTrajectory)->Arg(101)->Arg(501);

void BM_Classify(benchmark::State& state) {
  const Trajectory series =
      sample_trajectory(rho_alpha_beta(0.4, 0.7), kTilted, 20.0, 401);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(series, Measure::Negativity).kind);
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
