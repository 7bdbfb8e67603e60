// Copyright 2026 The urllc-power Authors
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

#include <cmath>
#include <vector>

#include "benchmark/benchmark.h"
#include "urllc/alloc.h"
#include "urllc/channel.h"
#include "urllc/fbl.h"
#include "urllc/random.h"
#include "urllc/sim.h"
#include "urllc/special_functions.h"

namespace urllc {
namespace {

void BM_GaussianQInv(benchmark::State& state) {
  double p = 1e-5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GaussianQInv(p));
    p = p * 1.0001 < 0.5 ? p * 1.0001 : 1e-9;
  }
}
BENCHMARK(BM_GaussianQInv);

void BM_MinPowerPerfect(benchmark::State& state) {
  const FblParams params;
  double gain = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinPowerPerfect(gain, params));
    gain = gain < 10.0 ? gain * 1.01 : 0.01;
  }
}
BENCHMARK(BM_MinPowerPerfect);

void BM_ExactGainCdf(benchmark::State& state) {
  const double est = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(ExactGainCdf(est, 1e-3, 0.8 * est));
}
BENCHMARK(BM_ExactGainCdf)->Arg(1)->Arg(100)->Arg(1000);

void BM_ChernoffGain(benchmark::State& state) {
  const double est = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(ChernoffGain(est, 1e-3, 0.5e-5));
}
BENCHMARK(BM_ChernoffGain)->Arg(1)->Arg(100)->Arg(1000);

void BM_AllocateSorting(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FblParams params;
  const std::vector<SubChannelState> channels = SampleRayleigh(m, RandomStream(3));
  MinPowerVector costs;
  for (const SubChannelState& ch : channels) costs.push_back(MinPowerPerfect(ch.a_true(), params));
  for (auto _ : state) benchmark::DoNotOptimize(AllocateSorting(costs, 10.0 * m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_AllocateSorting)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_RunTrial(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.subchannels = static_cast<int>(state.range(0));
  const std::vector<Allocator> allocators = DefaultAllocators(cfg);
  uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunTrial(cfg, trial++, allocators));
}
BENCHMARK(BM_RunTrial)->Arg(20)->Arg(40);

void BM_RunTrialImperfect(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.subchannels = 20;
  cfg.sigma_e2 = 1e-3;
  cfg.decoding_error = cfg.outage_budget = 0.5e-5;
  const std::vector<Allocator> allocators = DefaultAllocators(cfg);
  uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunTrial(cfg, trial++, allocators));
}
BENCHMARK(BM_RunTrialImperfect);

}  // namespace
}  // namespace urllc

BENCHMARK_MAIN();
