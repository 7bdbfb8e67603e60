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

#include "urllc/sim.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "urllc/errors.h"

namespace urllc {
namespace {

constexpr uint64_t kChannelDomain = 0;
constexpr uint64_t kCsitErrorDomain = 1;

bool InUnitInterval(double p) { return p > 0.0 && p < 1.0; }

void Audit(const AllocationResult& result, double budget, Allocator allocator) {
  for (double p : result.powers) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCategory::kAudit, std::string(AllocatorName(allocator)),
                  "negative power allocated");
    }
  }
  if (result.total_power > budget + BudgetTolerance(budget)) {
    throw Error(ErrorCategory::kAudit, std::string(AllocatorName(allocator)),
                "allocation exceeds the power budget");
  }
}

struct TrialSlot {
  int users = 0;
  double enabled_power = 0.0;
};

AllocatorMetrics Aggregate(Allocator allocator, int subchannels,
                           const std::vector<TrialSlot>& slots) {
  AllocatorMetrics metrics;
  metrics.allocator = allocator;
  const auto trials = static_cast<double>(slots.size());
  const auto m = static_cast<double>(subchannels);
  metrics.user_histogram.assign(static_cast<size_t>(subchannels) + 1, 0);
  metrics.users_per_trial.reserve(slots.size());
  double users_sq_sum = 0.0;
  for (const TrialSlot& slot : slots) {
    ++metrics.user_histogram[static_cast<size_t>(slot.users)];
    metrics.users_per_trial.push_back(slot.users);
    metrics.enabled_users += slot.users;
    metrics.enabled_power_sum += slot.enabled_power;
    users_sq_sum += static_cast<double>(slot.users) * slot.users;
  }
  const double mean_users = static_cast<double>(metrics.enabled_users) / trials;
  metrics.mean_capacity = mean_users / m;
  const double variance = std::max(0.0, users_sq_sum / trials - mean_users * mean_users);
  metrics.mean_capacity_stderr = std::sqrt(variance / trials) / m;

  long at_least = static_cast<long>(slots.size());
  for (int k = 0; k <= subchannels; ++k) {
    metrics.gamma.push_back(k / m);
    metrics.ccdf.push_back(static_cast<double>(at_least) / trials);
    at_least -= metrics.user_histogram[static_cast<size_t>(k)];
  }

  if (metrics.enabled_users > 0) {
    metrics.avg_power_per_user =
        metrics.enabled_power_sum / static_cast<double>(metrics.enabled_users);
    metrics.avg_power_per_user_db = LinearToDb(metrics.avg_power_per_user);
  } else {
    metrics.avg_power_per_user = std::numeric_limits<double>::quiet_NaN();
    metrics.avg_power_per_user_db = std::numeric_limits<double>::quiet_NaN();
  }
  return metrics;
}

}  // namespace

double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }
double LinearToDb(double linear) { return 10.0 * std::log10(linear); }

long ScenarioConfig::Blocklength() const {
  return std::lround(latency_s * subcarrier_hz);
}

double ScenarioConfig::RateTarget() const {
  return static_cast<double>(packet_bits) / static_cast<double>(Blocklength());
}

FblParams ScenarioConfig::Fbl() const {
  FblParams params;
  params.blocklength = Blocklength();
  params.decoding_error = decoding_error;
  params.noise_power = noise_power;
  params.rate_target = RateTarget();
  params.power_ceiling = noise_power * DbToLinear(power_ceiling_db);
  return params;
}

void ScenarioConfig::Validate() const {
  if (subchannels < 1) throw ValidationError("M", "must be >= 1");
  if (!std::isfinite(power_db)) throw ValidationError("P_db", "must be finite");
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw ValidationError("P_db", "linear power must be finite and >= 0");
  }
  if (!(noise_power > 0.0) || !std::isfinite(noise_power)) {
    throw ValidationError("N0", "must be finite and > 0");
  }
  if (packet_bits < 1) throw ValidationError("packet_bits", "must be >= 1");
  if (!(latency_s > 0.0) || !std::isfinite(latency_s)) {
    throw ValidationError("latency_s", "must be finite and > 0");
  }
  if (!(subcarrier_hz > 0.0) || !std::isfinite(subcarrier_hz)) {
    throw ValidationError("subcarrier_hz", "must be finite and > 0");
  }
  const double symbols = latency_s * subcarrier_hz;
  if (std::abs(symbols - std::round(symbols)) > 1e-9 * std::max(1.0, symbols) ||
      std::round(symbols) < 1.0) {
    throw ValidationError("latency_s", "latency_s * subcarrier_hz = " +
                                           std::to_string(symbols) +
                                           " is not a positive integer blocklength");
  }
  if (!(per_target > 0.0 && per_target <= 0.5)) {
    throw ValidationError("per_target", "must lie in (0, 0.5]");
  }
  if (!(decoding_error > 0.0 && decoding_error <= 0.5)) {
    throw ValidationError("eps", "must lie in (0, 0.5]");
  }
  if (!(sigma_e2 >= 0.0) || !std::isfinite(sigma_e2)) {
    throw ValidationError("sigma_e2", "must be finite and >= 0");
  }
  if (perfect_csit()) {
    if (outage_budget != 0.0) {
      throw ValidationError("outage_budget", "must be 0 with perfect CSIT");
    }
    if (std::abs(decoding_error - per_target) > 1e-12 * per_target) {
      throw ValidationError("eps", "must equal per_target with perfect CSIT");
    }
  } else {
    if (!(decoding_error < per_target)) {
      throw ValidationError("eps", "must be below per_target with imperfect CSIT");
    }
    if (!InUnitInterval(outage_budget)) {
      throw ValidationError("outage_budget", "must lie in (0, 1) with imperfect CSIT");
    }
    if (std::abs(decoding_error + outage_budget - per_target) > 1e-9 * per_target) {
      throw ValidationError("outage_budget", "eps + outage_budget must equal per_target");
    }
  }
  if (!std::isfinite(power_ceiling_db)) {
    throw ValidationError("power_ceiling_db", "must be finite");
  }
  if (trials < 1) throw ValidationError("trials", "must be >= 1");
}

void ValidateAllocators(const ScenarioConfig& cfg, std::span<const Allocator> allocators) {
  if (allocators.empty()) throw ValidationError("allocators", "at least one is required");
  std::set<Allocator> seen;
  for (Allocator a : allocators) {
    if (!seen.insert(a).second) {
      throw ValidationError("allocators", "duplicate '" + std::string(AllocatorName(a)) + "'");
    }
    if (!cfg.perfect_csit() && (a == Allocator::kWaterfilling || a == Allocator::kEqualIsnr)) {
      throw ValidationError("allocators", "'" + std::string(AllocatorName(a)) +
                                              "' does not handle imperfect CSIT");
    }
  }
}

std::vector<Allocator> DefaultAllocators(const ScenarioConfig& cfg) {
  if (cfg.perfect_csit()) {
    return {Allocator::kSorting, Allocator::kEqualPower, Allocator::kWaterfilling,
            Allocator::kEqualIsnr};
  }
  return {Allocator::kSorting, Allocator::kEqualPower};
}

MinPowerVector ComputeCosts(const ScenarioConfig& cfg,
                            std::span<const SubChannelState> channels) {
  const FblParams params = cfg.Fbl();
  MinPowerVector costs;
  costs.reserve(channels.size());
  for (const SubChannelState& ch : channels) {
    if (cfg.perfect_csit()) {
      costs.push_back(MinPowerPerfect(ch.a_true(), params));
    } else {
      costs.push_back(MinPowerImperfect(ch.a_est(), cfg.sigma_e2, cfg.outage_budget, params));
    }
  }
  return costs;
}

std::vector<SubChannelState> DrawChannels(const ScenarioConfig& cfg, uint64_t trial_index) {
  const RandomStream trial = RandomStream(cfg.seed).Fork(trial_index);
  std::vector<SubChannelState> channels =
      SampleRayleigh(cfg.subchannels, trial.Fork(kChannelDomain));
  if (!cfg.perfect_csit()) {
    const CsitModel model = CsitModel::WithErrorVariance(cfg.sigma_e2);
    const RandomStream errors = trial.Fork(kCsitErrorDomain);
    for (size_t m = 0; m < channels.size(); ++m) {
      RandomStream stream = errors.Fork(m);
      channels[m] = CorruptCsit(channels[m], model, stream);
    }
  }
  return channels;
}

TrialResult RunTrial(const ScenarioConfig& cfg, uint64_t trial_index,
                     std::span<const Allocator> allocators) {
  return RunTrialOnChannels(cfg, DrawChannels(cfg, trial_index), allocators);
}

TrialResult RunTrialOnChannels(const ScenarioConfig& cfg,
                               std::span<const SubChannelState> channels,
                               std::span<const Allocator> allocators) {
  if (channels.empty()) throw ValidationError("M", "no sub-channels");
  const MinPowerVector costs = ComputeCosts(cfg, channels);
  const double budget = channels.size() * cfg.power;

  std::vector<double> gains;
  gains.reserve(channels.size());
  for (const SubChannelState& ch : channels) gains.push_back(ch.a_true());

  TrialResult results;
  for (Allocator allocator : allocators) {
    AllocationResult result;
    switch (allocator) {
      case Allocator::kSorting:
        result = AllocateSorting(costs, budget);
        break;
      case Allocator::kEqualPower:
        result = AllocateEqualPower(costs, cfg.power);
        break;
      case Allocator::kWaterfilling:
        result = AllocateWaterfilling(gains, cfg.noise_power, budget, costs);
        break;
      case Allocator::kEqualIsnr:
        result = AllocateEqualIsnr(gains, budget, costs);
        break;
    }
    Audit(result, budget, allocator);
    results.emplace(allocator, std::move(result));
  }
  return results;
}

double AllocatorMetrics::CapacityQuantile(double q) const {
  const long trials = static_cast<long>(users_per_trial.size());
  long cumulative = 0;
  for (size_t k = 0; k < user_histogram.size(); ++k) {
    cumulative += user_histogram[k];
    if (static_cast<double>(cumulative) >= q * static_cast<double>(trials)) return gamma[k];
  }
  return gamma.back();
}

const AllocatorMetrics& CampaignMetrics::For(Allocator allocator) const {
  for (const AllocatorMetrics& m : allocators) {
    if (m.allocator == allocator) return m;
  }
  throw std::out_of_range("allocator '" + std::string(AllocatorName(allocator)) +
                          "' was not part of this campaign");
}

CampaignMetrics RunCampaign(const ScenarioConfig& cfg, std::span<const Allocator> allocators,
                            int workers) {
  cfg.Validate();
  ValidateAllocators(cfg, allocators);
  const auto trials = static_cast<size_t>(cfg.trials);
  std::vector<std::vector<TrialSlot>> slots(allocators.size(), std::vector<TrialSlot>(trials));

  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<size_t>(static_cast<size_t>(workers), trials));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](size_t first) {
    try {
      for (size_t t = first; t < trials; t += static_cast<size_t>(workers)) {
        const TrialResult result = RunTrial(cfg, t, allocators);
        for (size_t i = 0; i < allocators.size(); ++i) {
          const AllocationResult& r = result.at(allocators[i]);
          slots[i][t] = {r.users, r.EnabledPower()};
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<size_t>(w));
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CampaignMetrics metrics;
  metrics.subchannels = cfg.subchannels;
  metrics.power_db = cfg.power_db;
  metrics.sigma_e2 = cfg.sigma_e2;
  metrics.seed = cfg.seed;
  metrics.trials_run = cfg.trials;
  bool anyone_served = false;
  for (size_t i = 0; i < allocators.size(); ++i) {
    metrics.allocators.push_back(Aggregate(allocators[i], cfg.subchannels, slots[i]));
    anyone_served = anyone_served || metrics.allocators.back().enabled_users > 0;
  }
  if (!anyone_served) {
    metrics.diagnostics.push_back("no allocator enabled a single user in any trial");
  }
  return metrics;
}

std::vector<CampaignMetrics> SweepPower(const ScenarioConfig& cfg,
                                        std::span<const double> power_db_list,
                                        std::span<const Allocator> allocators, int workers) {
  std::vector<CampaignMetrics> points;
  points.reserve(power_db_list.size());
  for (size_t i = 0; i < power_db_list.size(); ++i) {
    ScenarioConfig point = cfg;
    point.power_db = power_db_list[i];
    point.power = DbToLinear(power_db_list[i]);
    point.seed = cfg.seed + i;
    points.push_back(RunCampaign(point, allocators, workers));
  }
  return points;
}

}  // namespace urllc
