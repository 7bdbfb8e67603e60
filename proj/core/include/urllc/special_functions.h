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

#ifndef URLLC_SPECIAL_FUNCTIONS_H_
#define URLLC_SPECIAL_FUNCTIONS_H_

namespace urllc {

// Gaussian tail function Q(x) = P(N(0,1) > x).
double GaussianQ(double x);

// Inverse of GaussianQ on (0, 1). Throws std::domain_error outside the open
// interval. Accurate to ~1e-15 relative in Q(GaussianQInv(p)).
double GaussianQInv(double p);

// log P(n, x) and log Q(n, x) for the regularized incomplete gamma functions
// with integer shape n >= 1 and x >= 0. Both stay accurate deep in the tails
// (no 1 - p cancellation on the small side).
double LogGammaP(long n, double x);
double LogGammaQ(long n, double x);

// CDF at x of the Poisson(lambda) mixture of Gamma(k + 1, 1) laws, which is a
// non-central chi-square with 2 degrees of freedom rescaled by 1/2. With
// X = |m + e|^2 and e ~ CN(0, s2): P(X <= a) = NoncentralChi2Cdf(|m|^2/s2, a/s2).
double NoncentralChi2Cdf(double lambda, double x);

// Upper tail of the same distribution, 1 - NoncentralChi2Cdf without the
// cancellation.
double NoncentralChi2Sf(double lambda, double x);

// First-order Marcum Q function Q_1(alpha, beta).
double MarcumQ1(double alpha, double beta);

}  // namespace urllc

#endif  // URLLC_SPECIAL_FUNCTIONS_H_
