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

#include <cmath>
#include <stdexcept>

#include "urllc/special_functions.h"

namespace urllc {
namespace {

constexpr double kMinThreshold = 1e-30;

void CheckTailArgs(double est_gain, double sigma_e2) {
  if (!(sigma_e2 > 0.0) || !std::isfinite(sigma_e2)) {
    throw std::domain_error("error variance must be finite and > 0");
  }
  if (!(est_gain >= 0.0) || !std::isfinite(est_gain)) {
    throw std::domain_error("estimated gain must be finite and >= 0");
  }
}

void CheckOutage(double outage_budget) {
  if (!(outage_budget > 0.0 && outage_budget < 1.0)) {
    throw std::domain_error("outage budget must lie in (0, 1)");
  }
}

// sigma_e2 * t, i.e. u - 1 with u = 1 + s2 t.
double ScaledT(double threshold, double est_gain, double sigma_e2) {
  const double root = std::sqrt(sigma_e2 * sigma_e2 + 4.0 * threshold * est_gain);
  if (2.0 * threshold > sigma_e2) {
    // Rationalized to stay accurate as the threshold approaches the mean.
    return 2.0 * (est_gain + sigma_e2 - threshold) / (root + 2.0 * threshold - sigma_e2);
  }
  return (sigma_e2 + root) / (2.0 * threshold) - 1.0;
}

}  // namespace

CsitModel CsitModel::WithErrorVariance(double sigma_e2) {
  if (!(sigma_e2 >= 0.0) || !std::isfinite(sigma_e2)) {
    throw std::invalid_argument("CSIT error variance must be finite and >= 0");
  }
  return CsitModel(sigma_e2);
}

std::vector<SubChannelState> SampleRayleigh(int count, const RandomStream& rng) {
  if (count < 1) throw std::invalid_argument("SampleRayleigh: count must be >= 1");
  std::vector<SubChannelState> states;
  states.reserve(static_cast<size_t>(count));
  for (int m = 0; m < count; ++m) {
    RandomStream stream = rng.Fork(static_cast<uint64_t>(m));
    states.push_back(SubChannelState::Known(stream.NextComplexGaussian(1.0)));
  }
  return states;
}

SubChannelState CorruptCsit(const SubChannelState& state, const CsitModel& model,
                            RandomStream& rng) {
  if (model.perfect()) return SubChannelState::Known(state.h_true);
  return {state.h_true, state.h_true + rng.NextComplexGaussian(model.sigma_e2())};
}

double ExactGainCdf(double est_gain, double sigma_e2, double threshold) {
  CheckTailArgs(est_gain, sigma_e2);
  if (!(threshold >= 0.0)) throw std::domain_error("threshold must be >= 0");
  return NoncentralChi2Cdf(est_gain / sigma_e2, threshold / sigma_e2);
}

double ChernoffT(double threshold, double est_gain, double sigma_e2) {
  CheckTailArgs(est_gain, sigma_e2);
  if (!(threshold > 0.0)) throw std::domain_error("ChernoffT: threshold must be > 0");
  return ScaledT(threshold, est_gain, sigma_e2) / sigma_e2;
}

double ChernoffLogBound(double threshold, double est_gain, double sigma_e2) {
  const double t = ChernoffT(threshold, est_gain, sigma_e2);
  const double scaled = sigma_e2 * t;
  return t * (threshold - est_gain / (1.0 + scaled)) - std::log1p(scaled);
}

double ChernoffBound(double threshold, double est_gain, double sigma_e2) {
  return std::exp(ChernoffLogBound(threshold, est_gain, sigma_e2));
}

std::optional<double> ChernoffGain(double est_gain, double sigma_e2, double outage_budget) {
  CheckTailArgs(est_gain, sigma_e2);
  CheckOutage(outage_budget);
  const double log_target = std::log(outage_budget);
  auto excess = [&](double a) {
    return ChernoffLogBound(a, est_gain, sigma_e2) - log_target;
  };

  // f is increasing on (0, mean) and equals 1 at the mean.
  double lo = kMinThreshold;
  double hi = est_gain + sigma_e2;
  if (excess(lo) > 0.0) return std::nullopt;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi)) break;
    if (excess(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

std::optional<double> ExactGainThreshold(double est_gain, double sigma_e2,
                                         double outage_budget) {
  CheckTailArgs(est_gain, sigma_e2);
  CheckOutage(outage_budget);
  auto cdf = [&](double a) { return ExactGainCdf(est_gain, sigma_e2, a); };

  double lo = kMinThreshold;
  if (cdf(lo) >= outage_budget) return std::nullopt;
  double hi = est_gain + sigma_e2;
  while (cdf(hi) < outage_budget) hi *= 2.0;
  while (true) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi) || hi - lo <= 1e-13 * hi) break;
    if (cdf(mid) >= outage_budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace urllc
