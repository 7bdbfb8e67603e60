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

#include "urllc/alloc.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace urllc {
namespace {

constexpr double kMinIsnrGain = 1e-300;

AllocationResult Finish(std::vector<double> powers, const MinPowerVector& costs) {
  AllocationResult result;
  const EnabledCount count = CountEnabled(powers, costs);
  result.enabled.resize(powers.size());
  for (size_t m = 0; m < powers.size(); ++m) {
    result.enabled[m] = costs[m].reachable() &&
                        powers[m] >= costs[m].value() * (1.0 - kEnableTolerance);
  }
  result.users = count.users;
  result.capacity = count.capacity;
  result.total_power = std::accumulate(powers.begin(), powers.end(), 0.0);
  result.powers = std::move(powers);
  return result;
}

void CheckBudget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("budget must be finite and >= 0");
  }
}

void CheckSizes(size_t gains, size_t costs) {
  if (gains != costs) throw std::invalid_argument("gains and costs differ in length");
  if (gains == 0) throw std::invalid_argument("no sub-channels");
}

}  // namespace

double AllocationResult::EnabledPower() const {
  double sum = 0.0;
  for (size_t m = 0; m < powers.size(); ++m) {
    if (enabled[m]) sum += powers[m];
  }
  return sum;
}

EnabledCount CountEnabled(std::span<const double> powers, const MinPowerVector& costs) {
  if (powers.size() != costs.size()) {
    throw std::invalid_argument("CountEnabled: powers and costs differ in length");
  }
  if (powers.empty()) throw std::invalid_argument("CountEnabled: no sub-channels");
  EnabledCount count;
  for (size_t m = 0; m < powers.size(); ++m) {
    if (costs[m].reachable() && powers[m] >= costs[m].value() * (1.0 - kEnableTolerance)) {
      ++count.users;
    }
  }
  count.capacity = static_cast<double>(count.users) / static_cast<double>(powers.size());
  return count;
}

AllocationResult AllocateSorting(const MinPowerVector& costs, double budget) {
  CheckBudget(budget);
  if (costs.empty()) throw std::invalid_argument("AllocateSorting: no sub-channels");
  std::vector<size_t> order(costs.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t i, size_t j) { return costs[i].SortKey() < costs[j].SortKey(); });

  std::vector<double> powers(costs.size(), 0.0);
  double spent = 0.0;
  for (size_t m : order) {
    if (!costs[m].reachable()) break;
    const double next = spent + costs[m].value();
    if (next > budget) break;
    powers[m] = costs[m].value();
    spent = next;
  }
  AllocationResult result = Finish(std::move(powers), costs);
  // Summed in ascending-cost order, matching the prefix test above.
  result.total_power = spent;
  return result;
}

AllocationResult AllocateEqualPower(const MinPowerVector& costs, double power_per_channel) {
  CheckBudget(power_per_channel);
  if (costs.empty()) throw std::invalid_argument("AllocateEqualPower: no sub-channels");
  return Finish(std::vector<double>(costs.size(), power_per_channel), costs);
}

AllocationResult AllocateWaterfilling(std::span<const double> gains, double noise_power,
                                      double budget, const MinPowerVector& costs) {
  CheckSizes(gains.size(), costs.size());
  CheckBudget(budget);
  double max_floor = 0.0;
  bool any_active = false;
  for (double a : gains) {
    if (!(a >= 0.0)) throw std::invalid_argument("AllocateWaterfilling: negative gain");
    if (a > 0.0) {
      any_active = true;
      max_floor = std::max(max_floor, noise_power / a);
    }
  }
  if (!any_active) throw std::invalid_argument("AllocateWaterfilling: all gains are zero");

  auto fill = [&](double level) {
    std::vector<double> powers(gains.size(), 0.0);
    for (size_t m = 0; m < gains.size(); ++m) {
      if (gains[m] > 0.0) powers[m] = std::max(0.0, level - noise_power / gains[m]);
    }
    return powers;
  };
  auto total = [](const std::vector<double>& p) {
    return std::accumulate(p.begin(), p.end(), 0.0);
  };

  const double tolerance = BudgetTolerance(budget);
  double lo = 0.0;
  double hi = budget + max_floor;
  std::vector<double> best = fill(lo);
  for (int i = 0; i < 200; ++i) {
    const double level = 0.5 * (lo + hi);
    std::vector<double> powers = fill(level);
    const double spent = total(powers);
    if (spent > budget) {
      hi = level;
    } else {
      lo = level;
      best = std::move(powers);
      if (budget - spent <= tolerance) break;
    }
  }
  return Finish(std::move(best), costs);
}

AllocationResult AllocateEqualIsnr(std::span<const double> gains, double budget,
                                   const MinPowerVector& costs) {
  CheckSizes(gains.size(), costs.size());
  CheckBudget(budget);
  double inverse_sum = 0.0;
  for (double a : gains) {
    if (!(a >= kMinIsnrGain)) {
      return Finish(std::vector<double>(gains.size(), 0.0), costs);
    }
    inverse_sum += 1.0 / a;
  }
  std::vector<double> powers(gains.size());
  for (size_t m = 0; m < gains.size(); ++m) {
    powers[m] = budget / gains[m] / inverse_sum;
  }
  return Finish(std::move(powers), costs);
}

std::string_view AllocatorName(Allocator allocator) {
  switch (allocator) {
    case Allocator::kSorting:
      return "sorting";
    case Allocator::kEqualPower:
      return "equal";
    case Allocator::kWaterfilling:
      return "waterfilling";
    case Allocator::kEqualIsnr:
      return "isnr";
  }
  return "unknown";
}

Allocator ParseAllocator(std::string_view name) {
  for (Allocator a : {Allocator::kSorting, Allocator::kEqualPower, Allocator::kWaterfilling,
                      Allocator::kEqualIsnr}) {
    if (AllocatorName(a) == name) return a;
  }
  throw std::invalid_argument("unknown allocator '" + std::string(name) + "'");
}

}  // namespace urllc
