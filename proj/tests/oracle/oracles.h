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

#ifndef URLLC_TESTS_ORACLE_ORACLES_H_
#define URLLC_TESTS_ORACLE_ORACLES_H_

// Reference computations for the tests. Deliberately naive and independent
// of the library's numerical paths: plain bisection, brute force, sampling.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace urllc::oracle {

inline double TailQ(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Q^-1 by bisection on erfc.
inline double TailQInv(double p) {
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (TailQ(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Rate as a function of SNR, long double throughout.
inline long double RateOfSnr(long double snr, long blocklength, double eps) {
  const long double v = 1.0L - 1.0L / ((1.0L + snr) * (1.0L + snr));
  return std::log2(1.0L + snr) -
         std::sqrt(v / blocklength) * TailQInv(eps) / std::log(2.0L);
}

// SNR at which the rate meets the target, by bisection in SNR.
inline long double RequiredSnr(long blocklength, double eps, double rate_target) {
  long double lo = 0.0L, hi = 1e9L;
  for (int i = 0; i < 400; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (RateOfSnr(mid, blocklength, eps) >= rate_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Largest number of items whose costs fit in the budget, over all subsets.
inline int BruteForceMaxUsers(const std::vector<double>& costs, double budget) {
  const size_t m = costs.size();
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    double spent = 0.0;
    int count = 0;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        spent += costs[i];
        ++count;
      }
    }
    if (spent <= budget) best = std::max(best, count);
  }
  return best;
}

struct MonteCarloEstimate {
  double probability;
  double stderr_;
};

// P(|h_est - e|^2 <= a), e ~ CN(0, s2), by sampling with std::mt19937_64.
inline MonteCarloEstimate SampledGainCdf(double est_gain, double s2, double a, long draws,
                                         uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(s2 / 2.0));
  const double mean_re = std::sqrt(est_gain);
  long hits = 0;
  for (long i = 0; i < draws; ++i) {
    const double re = mean_re - normal(gen);
    const double im = -normal(gen);
    if (re * re + im * im <= a) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(draws);
  return {p, std::sqrt(std::max(p * (1.0 - p), 1.0 / draws) / static_cast<double>(draws))};
}

}  // namespace urllc::oracle

#endif  // URLLC_TESTS_ORACLE_ORACLES_H_
