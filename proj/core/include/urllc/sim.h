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

#ifndef URLLC_SIM_H_
#define URLLC_SIM_H_

// Seeded Monte Carlo campaigns over Rayleigh-fading sub-channels. A trial is
// one channel realization shared by every requested allocator; a campaign
// aggregates trials into the CCDF of the user capacity and the average power
// spent per served user.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "urllc/alloc.h"
#include "urllc/channel.h"
#include "urllc/fbl.h"

namespace urllc {

double DbToLinear(double db);
double LinearToDb(double linear);

struct ScenarioConfig {
  int subchannels = 20;      // M
  double power_db = 10.0;    // P in dB, kept for reporting
  double power = 10.0;       // P, linear; budget is M * P
  double noise_power = 1.0;  // N0
  int packet_bits = 256;
  double latency_s = 0.5e-3;
  double subcarrier_hz = 240e3;
  double per_target = 1e-5;
  double decoding_error = 1e-5;  // epsilon
  double outage_budget = 0.0;    // 0 under perfect CSIT
  double sigma_e2 = 0.0;         // CSIT error variance; 0 means perfect
  double power_ceiling_db = 60.0;  // search ceiling relative to N0
  long trials = 10000;
  uint64_t seed = 1;

  bool perfect_csit() const { return sigma_e2 == 0.0; }
  // latency_s * subcarrier_hz, rounded; Validate() checks integrality.
  long Blocklength() const;
  double RateTarget() const;
  double Budget() const { return subchannels * power; }
  FblParams Fbl() const;

  // Throws urllc::Error (validation) naming the offending field.
  void Validate() const;
};

// Rejects empty sets, duplicates, and baselines that ignore CSIT error when
// sigma_e2 > 0.
void ValidateAllocators(const ScenarioConfig& cfg, std::span<const Allocator> allocators);

// Default allocator set: all four with perfect CSIT, sorting and equal power
// otherwise.
std::vector<Allocator> DefaultAllocators(const ScenarioConfig& cfg);

using TrialResult = std::map<Allocator, AllocationResult>;

// Per-sub-channel minimum enabling power: from the true gain with perfect
// CSIT, from the estimate through the Chernoff threshold otherwise.
MinPowerVector ComputeCosts(const ScenarioConfig& cfg, std::span<const SubChannelState> channels);

// Channels of trial `trial_index`: h from (seed, trial, 0, m), CSIT error
// from (seed, trial, 1, m).
std::vector<SubChannelState> DrawChannels(const ScenarioConfig& cfg, uint64_t trial_index);

TrialResult RunTrial(const ScenarioConfig& cfg, uint64_t trial_index,
                     std::span<const Allocator> allocators);
TrialResult RunTrialOnChannels(const ScenarioConfig& cfg,
                               std::span<const SubChannelState> channels,
                               std::span<const Allocator> allocators);

struct AllocatorMetrics {
  Allocator allocator = Allocator::kSorting;
  std::vector<double> gamma;  // {0, 1/M, ..., 1}
  std::vector<double> ccdf;   // P(Gamma >= gamma)
  std::vector<long> user_histogram;  // trials with K = k, k = 0..M
  std::vector<int> users_per_trial;
  double mean_capacity = 0.0;
  double mean_capacity_stderr = 0.0;
  double enabled_power_sum = 0.0;
  long enabled_users = 0;
  // Ratio of sums, linear and dB; NaN when no user was ever enabled.
  double avg_power_per_user = 0.0;
  double avg_power_per_user_db = 0.0;

  // Smallest gamma whose empirical CDF reaches q.
  double CapacityQuantile(double q) const;
  double FullServiceProbability() const { return ccdf.back(); }
};

struct CampaignMetrics {
  int subchannels = 0;
  double power_db = 0.0;
  double sigma_e2 = 0.0;
  uint64_t seed = 0;
  long trials_run = 0;
  std::vector<AllocatorMetrics> allocators;
  std::vector<std::string> diagnostics;

  // Throws std::out_of_range if the allocator was not run.
  const AllocatorMetrics& For(Allocator allocator) const;
};

// Runs cfg.trials trials on `workers` threads (0: hardware concurrency).
// Output does not depend on the worker count.
CampaignMetrics RunCampaign(const ScenarioConfig& cfg, std::span<const Allocator> allocators,
                            int workers = 0);

// One campaign per power level; point i uses seed cfg.seed + i.
std::vector<CampaignMetrics> SweepPower(const ScenarioConfig& cfg,
                                        std::span<const double> power_db_list,
                                        std::span<const Allocator> allocators, int workers = 0);

}  // namespace urllc

#endif  // URLLC_SIM_H_
