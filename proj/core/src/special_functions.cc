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

#include "urllc/special_functions.h"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace urllc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Terms further than this many nats below the peak are dropped.
constexpr double kLogCutoff = 50.0;

double LogOneMinusExp(double log_p) {
  if (log_p >= 0.0) return -kInf;
  return log_p > -std::numbers::ln2 ? std::log(-std::expm1(log_p))
                                    : std::log1p(-std::exp(log_p));
}

double LogAddExp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// lgamma(n + 1) - (n + 1/2) log n + n - log(2 pi) / 2.
double StirlingCorrection(double n) {
  if (n < 15.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double r = 1.0 / n;
  const double r2 = r * r;
  return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 / 1680)));
}

// log(e^-lambda lambda^k / k!). The n log(x / n) - (x - n) form avoids the
// cancellation between x log x and lgamma at large k.
double LogPoisson(long k, double lambda) {
  if (k == 0) return -lambda;
  if (lambda == 0.0) return -kInf;
  const double n = static_cast<double>(k);
  const double d = (lambda - n) / n;
  const double log1pmx = d > -0.5 && d < 1.0 ? std::log1p(d) - d : std::log(lambda / n) - d;
  return n * log1pmx - 0.5 * std::log(2.0 * std::numbers::pi * n) - StirlingCorrection(n);
}

// Lower quantile of N(0,1), rational approximation with ~1e-9 relative
// error. Only used as the starting point for Halley polishing.
double NormalQuantileSeed(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - kLow) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Integer argmax of a unimodal sequence on [lo, hi].
long UnimodalArgMax(const std::function<double(long)>& f, long lo, long hi) {
  while (hi - lo > 2) {
    const long m1 = lo + (hi - lo) / 3;
    const long m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2)) {
      lo = m1 + 1;
    } else {
      hi = m2;
    }
  }
  long best = lo;
  double best_value = f(lo);
  for (long k = lo + 1; k <= hi; ++k) {
    const double v = f(k);
    if (v > best_value) {
      best = k;
      best_value = v;
    }
  }
  return best;
}

// sum_k Pois(k; lambda) P(k + 1, x), for x <= lambda + 1 (the lower tail,
// where the result may be tiny). P(n, x) is carried by the downward
// recurrence P(n, x) = P(n + 1, x) + e^-x x^n / n!, which only adds.
double LowerTail(double lambda, double x) {
  auto log_term = [&](long k) { return LogPoisson(k, lambda) + LogGammaP(k + 1, x); };
  const long peak = UnimodalArgMax(log_term, 0, static_cast<long>(std::ceil(lambda)) + 1);
  const double log_peak = log_term(peak);

  long top = peak;
  for (long step = 1;; step *= 2) {
    top = peak + step;
    if (log_term(top) < log_peak - kLogCutoff) break;
  }

  double log_p = LogGammaP(top + 1, x);
  double log_pois = LogPoisson(top, lambda);
  double sum = 0.0;
  for (long k = top; k >= 0; --k) {
    const double log_t = log_pois + log_p;
    sum += std::exp(log_t - log_peak);
    if (k < peak && log_t < log_peak - kLogCutoff) break;
    const double kd = static_cast<double>(k);
    log_p = LogAddExp(log_p, LogPoisson(k, x));
    log_pois += std::log(kd) - std::log(lambda);
  }
  return std::exp(log_peak + std::log(sum));
}

// sum_k Pois(k; lambda) Q(k + 1, x), for x > lambda + 1. Q(n, x) is carried
// upward: Q(n + 1, x) = Q(n, x) + e^-x x^n / n!.
double UpperTail(double lambda, double x) {
  auto log_term = [&](long k) { return LogPoisson(k, lambda) + LogGammaQ(k + 1, x); };
  const long peak = UnimodalArgMax(log_term, static_cast<long>(std::floor(lambda)),
                                   static_cast<long>(std::ceil(x)) + 10);
  const double log_peak = log_term(peak);

  long bottom = peak;
  for (long step = 1; bottom > 0; step *= 2) {
    bottom = std::max(0L, peak - step);
    if (log_term(bottom) < log_peak - kLogCutoff) break;
  }

  double log_q = LogGammaQ(bottom + 1, x);
  double log_pois = LogPoisson(bottom, lambda);
  double sum = 0.0;
  for (long k = bottom;; ++k) {
    const double log_t = log_pois + log_q;
    sum += std::exp(log_t - log_peak);
    if (k > peak && log_t < log_peak - kLogCutoff) break;
    const double kd1 = static_cast<double>(k + 1);
    log_q = LogAddExp(log_q, LogPoisson(k + 1, x));
    log_pois += std::log(lambda) - std::log(kd1);
  }
  return std::exp(log_peak + std::log(sum));
}

void CheckChi2Args(double lambda, double x) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda) || std::isnan(x)) {
    throw std::domain_error("non-central chi-square: invalid arguments");
  }
}

}  // namespace

double GaussianQ(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double GaussianQInv(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("GaussianQInv: p must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  double x = -NormalQuantileSeed(p);
  const double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  for (int i = 0; i < 4; ++i) {
    const double density = inv_sqrt_2pi * std::exp(-0.5 * x * x);
    const double u = (GaussianQ(x) - p) / density;
    const double step = u / (1.0 - 0.5 * x * u);
    x += step;
    if (std::abs(step) <= 1e-16 * std::abs(x)) break;
  }
  return x;
}

double LogGammaP(long n, double x) {
  if (n < 1 || !(x >= 0.0)) throw std::domain_error("LogGammaP: need n >= 1, x >= 0");
  if (x == 0.0) return -kInf;
  const double nd = static_cast<double>(n);
  if (x >= nd) return LogOneMinusExp(LogGammaQ(n, x));
  // e^-x x^n / n! * sum_j x^j / ((n+1)...(n+j))
  double sum = 1.0;
  double term = 1.0;
  for (double j = 1.0;; j += 1.0) {
    term *= x / (nd + j);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return LogPoisson(n, x) + std::log(sum);
}

double LogGammaQ(long n, double x) {
  if (n < 1 || !(x >= 0.0)) throw std::domain_error("LogGammaQ: need n >= 1, x >= 0");
  if (x == 0.0) return 0.0;
  const double nd = static_cast<double>(n);
  if (x < nd) return LogOneMinusExp(LogGammaP(n, x));
  // e^-x sum_{j<n} x^j / j!, summed from j = n - 1 downward.
  double sum = 1.0;
  double term = 1.0;
  for (long i = 1; i < n; ++i) {
    term *= static_cast<double>(n - i) / x;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return LogPoisson(n - 1, x) + std::log(sum);
}

double NoncentralChi2Cdf(double lambda, double x) {
  CheckChi2Args(lambda, x);
  if (x <= 0.0) return 0.0;
  if (x == kInf) return 1.0;
  if (lambda == 0.0) return -std::expm1(-x);
  if (x <= lambda + 1.0) return LowerTail(lambda, x);
  return 1.0 - UpperTail(lambda, x);
}

double NoncentralChi2Sf(double lambda, double x) {
  CheckChi2Args(lambda, x);
  if (x <= 0.0) return 1.0;
  if (x == kInf) return 0.0;
  if (lambda == 0.0) return std::exp(-x);
  if (x > lambda + 1.0) return UpperTail(lambda, x);
  return 1.0 - LowerTail(lambda, x);
}

double MarcumQ1(double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::domain_error("MarcumQ1: arguments must be non-negative");
  }
  return NoncentralChi2Sf(0.5 * alpha * alpha, 0.5 * beta * beta);
}

}  // namespace urllc
