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

#include "urllc/channel.h"

#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracle/oracles.h"

namespace urllc {
namespace {

TEST(SampleRayleighTest, UnitMeanExponentialGain) {
  const auto states = SampleRayleigh(1000000, RandomStream(42));
  double sum = 0.0;
  long below = 0;
  for (const auto& s : states) {
    sum += s.a_true();
    if (s.a_true() < 0.1) ++below;
    ASSERT_EQ(s.h_est, s.h_true);
  }
  EXPECT_NEAR(sum / 1e6, 1.0, 0.01);
  EXPECT_NEAR(below / 1e6, 1.0 - std::exp(-0.1), 0.002);
}

TEST(SampleRayleighTest, SameSeedSameDraws) {
  const auto a = SampleRayleigh(64, RandomStream(5).Fork(3));
  const auto b = SampleRayleigh(64, RandomStream(5).Fork(3));
  const auto c = SampleRayleigh(64, RandomStream(6).Fork(3));
  for (size_t m = 0; m < a.size(); ++m) {
    EXPECT_EQ(a[m].h_true, b[m].h_true);
  }
  EXPECT_NE(a[0].h_true, c[0].h_true);
}

TEST(SampleRayleighTest, SubChannelDrawDoesNotDependOnCount) {
  const auto few = SampleRayleigh(3, RandomStream(9));
  const auto many = SampleRayleigh(40, RandomStream(9));
  for (size_t m = 0; m < few.size(); ++m) EXPECT_EQ(few[m].h_true, many[m].h_true);
}

TEST(SampleRayleighTest, RejectsEmpty) {
  EXPECT_THROW(SampleRayleigh(0, RandomStream(1)), std::invalid_argument);
}

TEST(CorruptCsitTest, PerfectModelCopiesExactly) {
  RandomStream rng(1);
  const SubChannelState s = SubChannelState::Known({0.3, -1.2});
  const SubChannelState out = CorruptCsit(s, CsitModel::Perfect(), rng);
  EXPECT_EQ(out.h_est, s.h_true);
  EXPECT_EQ(rng.counter(), 0u);
}

TEST(CorruptCsitTest, ErrorVarianceAndGainMean) {
  const double s2 = 1e-3;
  const CsitModel model = CsitModel::WithErrorVariance(s2);
  const SubChannelState fixed = SubChannelState::Known({0.6, 0.8});
  RandomStream rng(2024);
  double err_sq = 0.0;
  double est_gain = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const SubChannelState s = CorruptCsit(fixed, model, rng);
    err_sq += std::norm(s.h_est - s.h_true);
    est_gain += s.a_est();
  }
  EXPECT_NEAR(err_sq / n / s2, 1.0, 0.02);
  EXPECT_NEAR(est_gain / n, fixed.a_true() + s2, 1e-4);
}

TEST(CsitModelTest, RejectsNegativeVariance) {
  EXPECT_THROW(CsitModel::WithErrorVariance(-1e-3), std::invalid_argument);
  EXPECT_TRUE(CsitModel::WithErrorVariance(0.0).perfect());
  EXPECT_FALSE(CsitModel::WithErrorVariance(1e-9).perfect());
}

TEST(ExactGainCdfTest, Examples) {
  EXPECT_EQ(ExactGainCdf(1.0, 1e-3, 0.0), 0.0);
  EXPECT_NEAR(ExactGainCdf(0.0, 0.2, 0.1), 1.0 - std::exp(-0.5), 1e-15);
  // scipy ncx2 reference 0.49553941086177933.
  EXPECT_NEAR(ExactGainCdf(1.0, 1e-3, 1.0), 0.5, 0.01);
  EXPECT_NEAR(ExactGainCdf(1.0, 1e-3, 1.0), 0.49553941086177933, 1e-12);
}

TEST(ExactGainCdfTest, DomainErrors) {
  EXPECT_THROW(ExactGainCdf(1.0, 0.0, 0.5), std::domain_error);
  EXPECT_THROW(ExactGainCdf(1.0, -1.0, 0.5), std::domain_error);
  EXPECT_THROW(ExactGainCdf(1.0, 1e-3, -0.5), std::domain_error);
}

TEST(ExactGainCdfTest, Monotone) {
  double previous = 0.0;
  for (double a = 0.0; a < 2.0; a += 0.01) {
    const double p = ExactGainCdf(1.0, 1e-2, a);
    EXPECT_GE(p, previous);
    previous = p;
  }
}

TEST(ExactGainCdfTest, AgreesWithMonteCarlo) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> gain(0.01, 3.0);
  std::uniform_real_distribution<double> log_var(-3.0, 0.0);
  std::uniform_real_distribution<double> where(-2.5, 2.5);
  for (int i = 0; i < 50; ++i) {
    const double est = gain(gen);
    const double s2 = std::pow(10.0, log_var(gen));
    // Spread thresholds around the bulk: mean +/- a few standard deviations.
    const double sd = std::sqrt(s2 * s2 + 2.0 * est * s2);
    const double a = std::max(1e-6, est + s2 + where(gen) * sd);
    const auto mc = oracle::SampledGainCdf(est, s2, a, 10000000, 1000 + i);
    EXPECT_NEAR(ExactGainCdf(est, s2, a), mc.probability, 3.0 * mc.stderr_)
        << "est=" << est << " s2=" << s2 << " a=" << a;
  }
}

TEST(ExactGainCdfTest, AgreesWithBoostDeepInTheTail) {
  for (double est : {0.05, 1.0, 8.0}) {
    for (double s2 : {1e-5, 1e-3, 1e-2}) {
      boost::math::non_central_chi_squared dist(2.0, 2.0 * est / s2);
      for (double frac : {0.3, 0.7, 0.9}) {
        const double a = frac * est;
        const double expected = boost::math::cdf(dist, 2.0 * a / s2);
        if (expected < 1e-290) continue;
        EXPECT_NEAR(ExactGainCdf(est, s2, a) / expected, 1.0, 1e-9)
            << est << " " << s2 << " " << a;
      }
    }
  }
}

TEST(ChernoffTTest, FormulaTranscription) {
  const double s2 = 1e-2, a = 0.7;
  const double direct = (s2 + std::sqrt(s2 * s2 + 4.0 * a * a)) / (2.0 * s2 * a) - 1.0 / s2;
  EXPECT_NEAR(ChernoffT(a, a, s2), direct, 1e-9 * std::abs(direct));
  EXPECT_NEAR(ChernoffT(0.3, 0.0, s2), 1.0 / 0.3 - 1.0 / s2, 1e-9);
}

TEST(ChernoffTTest, PositiveBelowTheMean) {
  // Below the mean the bound is E[exp(-t X)] e^{t a} with t > 0: the MGF is
  // taken at the negative argument -t.
  const double t = ChernoffT(0.01, 1.0, 1e-3);
  EXPECT_GT(t, 0.0);
  EXPECT_NEAR(t, 9050.0, 10.0);
  EXPECT_NEAR(ChernoffT(1.0 + 1e-3, 1.0, 1e-3), 0.0, 1e-6);
  EXPECT_LT(ChernoffT(1.5, 1.0, 1e-3), 0.0);
}

TEST(ChernoffTTest, DomainErrors) {
  EXPECT_THROW(ChernoffT(0.0, 1.0, 1e-3), std::domain_error);
  EXPECT_THROW(ChernoffT(0.5, 1.0, 0.0), std::domain_error);
}

TEST(ChernoffBoundTest, DominatesExactLowerTail) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> gain(0.01, 10.0);
  std::uniform_real_distribution<double> log_var(-5.0, -1.0);
  std::uniform_real_distribution<double> frac(0.02, 0.999);
  for (int i = 0; i < 300; ++i) {
    const double est = gain(gen);
    const double s2 = std::pow(10.0, log_var(gen));
    const double a = frac(gen) * (est + s2);
    const double exact = ExactGainCdf(est, s2, a);
    EXPECT_GE(ChernoffBound(a, est, s2), exact) << est << " " << s2 << " " << a;
  }
}

TEST(ChernoffGainTest, ExampleIsPessimistic) {
  const double budget = 0.5e-5;
  const auto a = ChernoffGain(1.0, 1e-3, budget);
  ASSERT_TRUE(a.has_value());
  // 50-digit root of f(a) = budget: 0.79218649273199033199.
  EXPECT_NEAR(*a / 0.79218649273199033, 1.0, 1e-13);
  EXPECT_NEAR(ChernoffBound(*a, 1.0, 1e-3) / budget, 1.0, 1e-12);
  EXPECT_LE(ExactGainCdf(1.0, 1e-3, *a), budget);
  // The exact threshold, from scipy ncx2 + brentq: 0.8126882072685588.
  const auto exact = ExactGainThreshold(1.0, 1e-3, budget);
  ASSERT_TRUE(exact.has_value());
  EXPECT_NEAR(*exact, 0.8126882072685588, 1e-11);
  EXPECT_LT(*a, *exact);
  EXPECT_GT(*a, 0.0);
  EXPECT_LT(*a, 1.0 + 1e-3);
}

TEST(ChernoffGainTest, IncreasingInOutageBudget) {
  double previous = 0.0;
  for (double budget : {1e-12, 1e-9, 1e-6, 1e-3, 0.1, 0.4}) {
    const double a = ChernoffGain(2.0, 1e-2, budget).value();
    EXPECT_GT(a, previous);
    previous = a;
  }
}

TEST(ChernoffGainTest, NoSolutionWhenTailCannotBeMet) {
  EXPECT_FALSE(ChernoffGain(0.0, 1.0, 1e-300).has_value());
}

TEST(ChernoffGainTest, DomainErrors) {
  EXPECT_THROW(ChernoffGain(1.0, 0.0, 1e-5), std::domain_error);
  EXPECT_THROW(ChernoffGain(1.0, 1e-3, 0.0), std::domain_error);
  EXPECT_THROW(ChernoffGain(1.0, 1e-3, 1.0), std::domain_error);
}

}  // namespace
}  // namespace urllc
