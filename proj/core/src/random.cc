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

#include "urllc/random.h"

#include <cmath>
#include <numbers>

namespace urllc {
namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

uint64_t Mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(uint64_t seed) : key_(Mix(seed ^ 0x6A09E667F3BCC908ULL)) {}

RandomStream RandomStream::Fork(uint64_t id) const {
  return RandomStream(Mix(key_ ^ Mix(id + kGolden)), 0);
}

uint64_t RandomStream::NextU64() {
  ++counter_;
  return Mix(key_ + counter_ * kGolden);
}

double RandomStream::NextUniform() {
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> RandomStream::NextComplexGaussian(double variance) {
  // Box-Muller: |z|^2 = -variance * ln(u1) is exactly exponential.
  const double u1 = NextUniform();
  const double u2 = NextUniform();
  const double radius = std::sqrt(-variance * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace urllc
