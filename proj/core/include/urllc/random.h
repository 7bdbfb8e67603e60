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

#ifndef URLLC_RANDOM_H_
#define URLLC_RANDOM_H_

#include <complex>
#include <cstdint>

namespace urllc {

// Counter-based random stream. The i-th output depends only on (key, i), and
// Fork(id) derives an independent child stream from (key, id), so a draw can
// be addressed as (seed, trial, sub-channel) regardless of scheduling.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed);

  RandomStream Fork(uint64_t id) const;

  uint64_t NextU64();
  // Uniform on the open interval (0, 1).
  double NextUniform();
  // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> NextComplexGaussian(double variance);

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  RandomStream(uint64_t key, int) : key_(key) {}

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace urllc

#endif  // URLLC_RANDOM_H_
