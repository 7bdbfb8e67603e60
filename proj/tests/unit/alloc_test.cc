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
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracle/oracles.h"

namespace urllc {
namespace {

MinPowerVector Costs(std::initializer_list<double> values) {
  MinPowerVector costs;
  for (double v : values) {
    costs.push_back(std::isinf(v) ? MinPower::Unreachable() : MinPower::Finite(v));
  }
  return costs;
}

constexpr double kInf = INFINITY;

TEST(AllocateSortingTest, PrefixFitsBudget) {
  const AllocationResult r = AllocateSorting(Costs({1, 2, 3, 4}), 7.0);
  EXPECT_EQ(r.powers, (std::vector<double>{1, 2, 3, 0}));
  EXPECT_EQ(r.users, 3);
  EXPECT_DOUBLE_EQ(r.capacity, 0.75);
  EXPECT_EQ(r.total_power, 6.0);
}

TEST(AllocateSortingTest, ReportsInOriginalOrder) {
  const AllocationResult r = AllocateSorting(Costs({4, 1}), 1.0);
  EXPECT_EQ(r.powers, (std::vector<double>{0, 1}));
  EXPECT_EQ(r.enabled, (std::vector<bool>{false, true}));
  EXPECT_EQ(r.users, 1);
}

TEST(AllocateSortingTest, AllUnreachable) {
  const AllocationResult r = AllocateSorting(Costs({kInf, kInf}), 100.0);
  EXPECT_EQ(r.users, 0);
  EXPECT_EQ(r.total_power, 0.0);
}

TEST(AllocateSortingTest, TiesKeepOriginalOrder) {
  const AllocationResult r = AllocateSorting(Costs({2, 2, 2}), 4.0);
  EXPECT_EQ(r.enabled, (std::vector<bool>{true, true, false}));
}

TEST(AllocateSortingTest, MatchesBruteForceOptimum) {
  std::mt19937_64 gen(2718);
  std::uniform_int_distribution<int> size(1, 12);
  std::exponential_distribution<double> gain(1.0);
  std::uniform_real_distribution<double> budget_scale(0.0, 2.0);
  std::bernoulli_distribution unreachable(0.05);
  for (int instance = 0; instance < 1000; ++instance) {
    const int m = size(gen);
    MinPowerVector costs;
    std::vector<double> finite;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      if (unreachable(gen)) {
        costs.push_back(MinPower::Unreachable());
        continue;
      }
      const double c = 5.445 / std::max(gain(gen), 1e-9);
      costs.push_back(MinPower::Finite(c));
      finite.push_back(c);
      total += c;
    }
    const double budget = budget_scale(gen) * std::max(total, 1.0) / 2.0;
    const AllocationResult r = AllocateSorting(costs, budget);
    ASSERT_EQ(r.users, oracle::BruteForceMaxUsers(finite, budget)) << "instance " << instance;

    // Minimal spend: exactly the K smallest costs, summed in ascending order.
    std::sort(finite.begin(), finite.end());
    double smallest = 0.0;
    for (int k = 0; k < r.users; ++k) smallest += finite[static_cast<size_t>(k)];
    EXPECT_EQ(r.total_power, smallest);
    EXPECT_LE(r.total_power, budget);
  }
}

TEST(AllocateEqualPowerTest, Examples) {
  EXPECT_EQ(AllocateEqualPower(Costs({0.5, 2}), 1.0).enabled, (std::vector<bool>{true, false}));
  EXPECT_EQ(AllocateEqualPower(Costs({0.5, 1.0, 0.9}), 1.0).capacity, 1.0);
  EXPECT_EQ(AllocateEqualPower(Costs({kInf, kInf}), 1e9).capacity, 0.0);
}

TEST(AllocateWaterfillingTest, SymmetricChannels) {
  const std::vector<double> gains = {1.0, 1.0};
  const AllocationResult r = AllocateWaterfilling(gains, 1.0, 4.0, Costs({1, 1}));
  EXPECT_NEAR(r.powers[0], 2.0, 1e-8);
  EXPECT_NEAR(r.powers[1], 2.0, 1e-8);
}

TEST(AllocateWaterfillingTest, DeepFadeGetsNothing) {
  const std::vector<double> gains = {1.0, 1e-9};
  const AllocationResult r = AllocateWaterfilling(gains, 1.0, 4.0, Costs({1, kInf}));
  EXPECT_EQ(r.powers[1], 0.0);
  EXPECT_NEAR(r.powers[0], 4.0, 1e-8);
}

TEST(AllocateWaterfillingTest, AllZeroGainsIsAnError) {
  const std::vector<double> gains = {0.0, 0.0};
  EXPECT_THROW(AllocateWaterfilling(gains, 1.0, 4.0, Costs({kInf, kInf})),
               std::invalid_argument);
}

TEST(AllocateWaterfillingTest, SpendsBudgetWithCommonLevel) {
  std::mt19937_64 gen(31);
  std::exponential_distribution<double> gain(1.0);
  std::uniform_int_distribution<int> size(1, 40);
  std::uniform_real_distribution<double> log_p(-1.0, 2.5);
  for (int i = 0; i < 1000; ++i) {
    const int m = size(gen);
    std::vector<double> gains(static_cast<size_t>(m));
    for (double& a : gains) a = gain(gen);
    const double budget = m * std::pow(10.0, log_p(gen));
    const AllocationResult r =
        AllocateWaterfilling(gains, 1.0, budget, MinPowerVector(gains.size(), MinPower::Finite(1)));
    EXPECT_NEAR(r.total_power, budget, BudgetTolerance(budget));
    EXPECT_LE(r.total_power, budget + BudgetTolerance(budget));
    // Active channels share one water level.
    double level = -1.0;
    for (size_t k = 0; k < gains.size(); ++k) {
      if (r.powers[k] <= 0.0) continue;
      const double this_level = r.powers[k] + 1.0 / gains[k];
      if (level < 0) level = this_level;
      EXPECT_NEAR(this_level, level, 1e-9 * level);
    }
    for (size_t k = 0; k < gains.size(); ++k) {
      if (r.powers[k] == 0.0) EXPECT_GE(1.0 / gains[k], level * (1 - 1e-9));
    }
  }
}

TEST(AllocateEqualIsnrTest, Example) {
  const std::vector<double> gains = {1.0, 0.5};
  const AllocationResult r = AllocateEqualIsnr(gains, 6.0, Costs({1, 1}));
  EXPECT_DOUBLE_EQ(r.powers[0], 2.0);
  EXPECT_DOUBLE_EQ(r.powers[1], 4.0);
  EXPECT_DOUBLE_EQ(gains[0] * r.powers[0], gains[1] * r.powers[1]);
}

TEST(AllocateEqualIsnrTest, EqualGainsMatchEqualPower) {
  const std::vector<double> gains(5, 0.8);
  const MinPowerVector costs = Costs({2, 3, 4, 5, 6});
  const AllocationResult isnr = AllocateEqualIsnr(gains, 5 * 4.0, costs);
  const AllocationResult equal = AllocateEqualPower(costs, 4.0);
  for (size_t m = 0; m < gains.size(); ++m) EXPECT_NEAR(isnr.powers[m], equal.powers[m], 1e-12);
  EXPECT_EQ(isnr.enabled, equal.enabled);
}

TEST(AllocateEqualIsnrTest, ZeroGainFailsWholeTrial) {
  const std::vector<double> gains = {1.0, 0.0};
  const AllocationResult r = AllocateEqualIsnr(gains, 100.0, Costs({1, kInf}));
  EXPECT_EQ(r.users, 0);
  EXPECT_EQ(r.total_power, 0.0);
}

TEST(CountEnabledTest, Examples) {
  const MinPowerVector costs = Costs({1.5, 2.5, kInf});
  const std::vector<double> exact = {1.5, 2.5, 1e12};
  EXPECT_EQ(CountEnabled(exact, costs).users, 2);
  const std::vector<double> zeros = {0, 0, 0};
  EXPECT_EQ(CountEnabled(zeros, costs).users, 0);
  const std::vector<double> short_powers = {1.0};
  EXPECT_THROW(CountEnabled(short_powers, costs), std::invalid_argument);
}

// Random instances shared by the cross-allocator properties below.
struct Instance {
  std::vector<double> gains;
  MinPowerVector costs;
  double power;
};

std::vector<Instance> RandomInstances(int count, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> gain(1.0);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> p_db(0.0, 20.0);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    Instance inst;
    inst.power = std::pow(10.0, p_db(gen) / 10.0);
    const int m = size(gen);
    for (int k = 0; k < m; ++k) {
      const double a = gain(gen);
      inst.gains.push_back(a);
      inst.costs.push_back(MinPower::Finite(5.445 / a));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

TEST(AllocatorPropertiesTest, SortingDominatesBaselinesAndBudgetsHold) {
  for (const Instance& inst : RandomInstances(1000, 77)) {
    const double budget = inst.gains.size() * inst.power;
    const AllocationResult sorting = AllocateSorting(inst.costs, budget);
    const AllocationResult equal = AllocateEqualPower(inst.costs, inst.power);
    const AllocationResult wf = AllocateWaterfilling(inst.gains, 1.0, budget, inst.costs);
    const AllocationResult isnr = AllocateEqualIsnr(inst.gains, budget, inst.costs);
    for (const AllocationResult* r : {&sorting, &equal, &wf, &isnr}) {
      EXPECT_GE(sorting.users, r->users);
      EXPECT_LE(r->total_power, budget + BudgetTolerance(budget));
      for (double p : r->powers) EXPECT_GE(p, 0.0);
    }
    // Equal-iSNR is all or nothing, and succeeds exactly when sorting serves all.
    EXPECT_TRUE(isnr.users == 0 || isnr.capacity == 1.0);
    EXPECT_EQ(isnr.capacity == 1.0, sorting.capacity == 1.0);
  }
}

TEST(AllocatorPropertiesTest, PermutationEquivariance) {
  std::mt19937_64 gen(4);
  for (const Instance& inst : RandomInstances(200, 91)) {
    const size_t m = inst.gains.size();
    std::vector<size_t> perm(m);
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<double> gains2(m);
    MinPowerVector costs2;
    for (size_t k = 0; k < m; ++k) {
      gains2[k] = inst.gains[perm[k]];
      costs2.push_back(inst.costs[perm[k]]);
    }
    const double budget = m * inst.power;
    const auto check = [&](const AllocationResult& a, const AllocationResult& b) {
      for (size_t k = 0; k < m; ++k) {
        EXPECT_NEAR(b.powers[k], a.powers[perm[k]], 1e-9 * budget);
        EXPECT_EQ(b.enabled[k], a.enabled[perm[k]]);
      }
    };
    check(AllocateSorting(inst.costs, budget), AllocateSorting(costs2, budget));
    check(AllocateEqualPower(inst.costs, inst.power), AllocateEqualPower(costs2, inst.power));
    check(AllocateWaterfilling(inst.gains, 1.0, budget, inst.costs),
          AllocateWaterfilling(gains2, 1.0, budget, costs2));
    check(AllocateEqualIsnr(inst.gains, budget, inst.costs),
          AllocateEqualIsnr(gains2, budget, costs2));
  }
}

TEST(AllocatorNameTest, RoundTrip) {
  for (Allocator a : {Allocator::kSorting, Allocator::kEqualPower, Allocator::kWaterfilling,
                      Allocator::kEqualIsnr}) {
    EXPECT_EQ(ParseAllocator(AllocatorName(a)), a);
  }
  EXPECT_THROW(ParseAllocator("greedy"), std::invalid_argument);
}

}  // namespace
}  // namespace urllc
