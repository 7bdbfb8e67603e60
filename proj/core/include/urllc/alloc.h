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

#ifndef URLLC_ALLOC_H_
#define URLLC_ALLOC_H_

// Power allocators over M sub-channels sharing a total budget M * P, and the
// user-capacity objective: a sub-channel serves a URLLC user when its power
// reaches its minimum enabling power.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urllc/fbl.h"

namespace urllc {

using MinPowerVector = std::vector<MinPower>;

struct AllocationResult {
  std::vector<double> powers;
  std::vector<bool> enabled;
  int users = 0;          // K
  double capacity = 0.0;  // K / M
  double total_power = 0.0;

  // Sum of powers over enabled sub-channels.
  double EnabledPower() const;
};

// Relative slack of the enabled indicator, inclusive at equality.
inline constexpr double kEnableTolerance = 1e-12;

// Budget slack used by the feasibility audit: 1e-9 * budget.
inline double BudgetTolerance(double budget) { return 1e-9 * budget; }

struct EnabledCount {
  int users = 0;
  double capacity = 0.0;
};

// K = #{m : cost finite and power >= cost (1 - 1e-12)}. Throws
// std::invalid_argument on length mismatch.
EnabledCount CountEnabled(std::span<const double> powers, const MinPowerVector& costs);

// Optimal user maximization: enable the cheapest sub-channels while their
// cumulative cost fits the budget; each gets exactly its cost, the rest get
// zero. Ties keep the original order. Leftover budget is not spent.
AllocationResult AllocateSorting(const MinPowerVector& costs, double budget);

// P_m = P for every sub-channel.
AllocationResult AllocateEqualPower(const MinPowerVector& costs, double power_per_channel);

// Throughput waterfilling P_m = max(0, level - N0 / a_m), level set by
// bisection so the powers use the whole budget. Throws std::invalid_argument
// if every gain is zero.
AllocationResult AllocateWaterfilling(std::span<const double> gains, double noise_power,
                                      double budget, const MinPowerVector& costs);

// Equal instantaneous SNR: P_m = (budget / a_m) / sum_k (1 / a_k). If any
// gain is below 1e-300 the whole allocation fails (all zeros, K = 0).
AllocationResult AllocateEqualIsnr(std::span<const double> gains, double budget,
                                   const MinPowerVector& costs);

enum class Allocator { kSorting, kEqualPower, kWaterfilling, kEqualIsnr };

std::string_view AllocatorName(Allocator allocator);
// Accepts "sorting", "equal", "waterfilling", "isnr". Throws
// std::invalid_argument otherwise.
Allocator ParseAllocator(std::string_view name);

}  // namespace urllc

#endif  // URLLC_ALLOC_H_
