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

#ifndef URLLC_CHANNEL_H_
#define URLLC_CHANNEL_H_

// Rayleigh sub-channels, the Gaussian CSIT error model, and the lower-tail
// machinery for the true gain given an estimate: exact CDF (non-central
// chi-square) and the Chernoff threshold used for allocation.
//
// Convention: e ~ CN(0, s2) has total variance s2, i.e. s2/2 per real
// dimension. Given the estimate h_est, the transmitter models the true gain
// as X = |h_est - e|^2 with mean |h_est|^2 + s2.

#include <complex>
#include <optional>
#include <vector>

#include "urllc/random.h"

namespace urllc {

struct SubChannelState {
  std::complex<double> h_true;
  std::complex<double> h_est;

  double a_true() const { return std::norm(h_true); }
  double a_est() const { return std::norm(h_est); }

  // A perfectly known channel: h_est == h_true.
  static SubChannelState Known(std::complex<double> h) { return {h, h}; }
};

class CsitModel {
 public:
  static CsitModel Perfect() { return CsitModel(0.0); }
  // Throws std::invalid_argument for negative or non-finite variance.
  static CsitModel WithErrorVariance(double sigma_e2);

  double sigma_e2() const { return sigma_e2_; }
  bool perfect() const { return sigma_e2_ == 0.0; }

 private:
  explicit CsitModel(double sigma_e2) : sigma_e2_(sigma_e2) {}
  double sigma_e2_;
};

// M independent CN(0, 1) sub-channels with perfect CSIT. Sub-channel m draws
// from rng.Fork(m); rng itself is not advanced.
std::vector<SubChannelState> SampleRayleigh(int count, const RandomStream& rng);

// h_est = h_true + e, e ~ CN(0, sigma_e2). A perfect model copies h_true and
// consumes no randomness.
SubChannelState CorruptCsit(const SubChannelState& state, const CsitModel& model,
                            RandomStream& rng);

// P(X <= threshold) for X = |h_est - e|^2, via the first-order Marcum Q
// function. Throws std::domain_error for sigma_e2 <= 0 or threshold < 0.
double ExactGainCdf(double est_gain, double sigma_e2, double threshold);

// Optimizing Chernoff multiplier for the lower tail at `threshold`:
//   t = (s2 + sqrt(s2^2 + 4 a |h_est|^2)) / (2 s2 a) - 1 / s2.
// Positive below the mean of X. Throws std::domain_error for threshold <= 0
// or sigma_e2 <= 0.
double ChernoffT(double threshold, double est_gain, double sigma_e2);

// Chernoff bound on P(X <= a) with the multiplier above:
//   f(a) = exp(a t - |h_est|^2 t / (1 + s2 t)) / (1 + s2 t).
// This is E[exp(-t X)] exp(t a), which upper-bounds the exact lower tail
// (checked against ExactGainCdf in the tests). Returned in log form.
double ChernoffLogBound(double threshold, double est_gain, double sigma_e2);
double ChernoffBound(double threshold, double est_gain, double sigma_e2);

// Pessimistic gain threshold: the a in (0, |h_est|^2 + s2) with
// f(a) = outage_budget, by bisection (geometric, to double precision). The
// lower bracket end is returned, so f(a) <= outage_budget and hence
// ExactGainCdf(a) <= outage_budget. nullopt when even a = 1e-30 has
// f > outage_budget.
std::optional<double> ChernoffGain(double est_gain, double sigma_e2, double outage_budget);

// The exact threshold: a with ExactGainCdf(a) = outage_budget, by inverting
// the CDF. Slow; meant for reporting and verification.
std::optional<double> ExactGainThreshold(double est_gain, double sigma_e2,
                                         double outage_budget);

}  // namespace urllc

#endif  // URLLC_CHANNEL_H_
