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

#ifndef URLLC_FBL_H_
#define URLLC_FBL_H_

// Finite-blocklength (normal approximation) rate of a single sub-channel and
// the minimum transmit power that lets it carry a URLLC packet.

#include <compare>
#include <limits>

namespace urllc {

struct FblParams {
  long blocklength = 120;           // channel uses per packet
  double decoding_error = 1e-5;     // in (0, 0.5]
  double noise_power = 1.0;         // linear
  double rate_target = 256.0 / 120.0;  // bits per channel use
  // Searches for a minimum power stop here; the channel is then unreachable.
  double power_ceiling = 1e6;

  // Throws std::invalid_argument naming the first bad field.
  void Validate() const;
};

// Default power ceiling, 60 dB above the noise floor.
inline double DefaultPowerCeiling(double noise_power) { return 1e6 * noise_power; }

struct RateQuery {
  double gain = 0.0;   // |h|^2
  double power = 0.0;  // linear
};

// Minimum enabling power of one sub-channel, or Unreachable. Unreachable
// orders after every finite power.
class MinPower {
 public:
  static MinPower Unreachable() { return MinPower(); }
  static MinPower Finite(double power);

  bool reachable() const { return reachable_; }
  // Throws std::logic_error when unreachable.
  double value() const;
  // +inf when unreachable.
  double SortKey() const {
    return reachable_ ? power_ : std::numeric_limits<double>::infinity();
  }

  friend bool operator==(const MinPower& a, const MinPower& b) {
    return a.reachable_ == b.reachable_ && (!a.reachable_ || a.power_ == b.power_);
  }
  friend std::partial_ordering operator<=>(const MinPower& a, const MinPower& b) {
    return a.SortKey() <=> b.SortKey();
  }

 private:
  MinPower() = default;
  bool reachable_ = false;
  double power_ = 0.0;
};

// Channel dispersion V = 1 - (1 + snr)^-2 with snr = gain * power / N0.
double Dispersion(const RateQuery& q, const FblParams& params);

// log2(1 + snr) - sqrt(V / L) Q^-1(eps) / ln 2. Negative values at low SNR
// are returned unclamped.
double AchievableRate(const RateQuery& q, const FblParams& params);

// Residual tolerance of the minimum-power search, bits per channel use.
inline constexpr double kRateTolerance = 1e-9;

// Smallest power P with AchievableRate(gain, P) >= rate_target, found by
// bisection on [0, power_ceiling]. The returned power always meets the target
// (it is the upper end of the final bracket).
MinPower MinPowerPerfect(double gain, const FblParams& params);

// Minimum power when only an estimate of the channel is known: the gain is
// replaced by the Chernoff threshold for the given outage budget. Throws
// std::domain_error for error_variance <= 0.
MinPower MinPowerImperfect(double estimated_gain, double error_variance,
                           double outage_budget, const FblParams& params);

}  // namespace urllc

#endif  // URLLC_FBL_H_
