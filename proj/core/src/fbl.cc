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

#include "urllc/fbl.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "urllc/channel.h"
#include "urllc/special_functions.h"

namespace urllc {
namespace {

void CheckQuery(const RateQuery& q) {
  if (!(q.gain >= 0.0) || !(q.power >= 0.0) || !std::isfinite(q.gain * q.power)) {
    throw std::invalid_argument("rate query: gain and power must be finite and >= 0");
  }
}

}  // namespace

void FblParams::Validate() const {
  auto fail = [](const std::string& field, const std::string& what) {
    throw std::invalid_argument("FblParams." + field + ": " + what);
  };
  if (blocklength < 1) fail("blocklength", "must be >= 1");
  if (!(decoding_error > 0.0 && decoding_error <= 0.5)) {
    fail("decoding_error", "must lie in (0, 0.5]");
  }
  if (!(noise_power > 0.0) || !std::isfinite(noise_power)) fail("noise_power", "must be > 0");
  if (!(rate_target > 0.0) || !std::isfinite(rate_target)) fail("rate_target", "must be > 0");
  if (!(power_ceiling > 0.0) || !std::isfinite(power_ceiling)) {
    fail("power_ceiling", "must be > 0");
  }
}

MinPower MinPower::Finite(double power) {
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("MinPower: finite power must be >= 0");
  }
  MinPower p;
  p.reachable_ = true;
  p.power_ = power;
  return p;
}

double MinPower::value() const {
  if (!reachable_) throw std::logic_error("MinPower: unreachable has no value");
  return power_;
}

double Dispersion(const RateQuery& q, const FblParams& params) {
  CheckQuery(q);
  const double snr = q.gain * q.power / params.noise_power;
  // x (2 + x) / (1 + x)^2 avoids the cancellation of 1 - (1 + x)^-2 near 0;
  // the direct form is monotone in floating point at high SNR.
  const double one_plus = 1.0 + snr;
  if (snr > 1.0) return 1.0 - 1.0 / (one_plus * one_plus);
  return snr * (2.0 + snr) / (one_plus * one_plus);
}

double AchievableRate(const RateQuery& q, const FblParams& params) {
  const double snr = q.gain * q.power / params.noise_power;
  const double dispersion = Dispersion(q, params);
  const double penalty = std::sqrt(dispersion / static_cast<double>(params.blocklength)) *
                         GaussianQInv(params.decoding_error);
  return (std::log1p(snr) - penalty) / std::numbers::ln2;
}

MinPower MinPowerPerfect(double gain, const FblParams& params) {
  if (!(gain >= 0.0) || !std::isfinite(gain)) {
    throw std::invalid_argument("MinPowerPerfect: gain must be finite and >= 0");
  }
  if (gain == 0.0) return MinPower::Unreachable();

  auto rate_at = [&](double power) { return AchievableRate({gain, power}, params); };
  double lo = 0.0;
  double hi = params.power_ceiling;
  if (rate_at(hi) < params.rate_target) return MinPower::Unreachable();

  // Invariant: rate(lo) < target <= rate(hi).
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (rate_at(mid) >= params.rate_target) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 1e-12 * hi) break;
  }
  return MinPower::Finite(hi);
}

MinPower MinPowerImperfect(double estimated_gain, double error_variance,
                           double outage_budget, const FblParams& params) {
  if (!(error_variance > 0.0)) {
    throw std::domain_error("MinPowerImperfect: error variance must be > 0");
  }
  const auto threshold = ChernoffGain(estimated_gain, error_variance, outage_budget);
  if (!threshold) return MinPower::Unreachable();
  return MinPowerPerfect(*threshold, params);
}

}  // namespace urllc
