// Copyright 2026 The pabandit Authors.
//
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

#include "pab/core/rng.hpp"

#include <cmath>
#include <numbers>

#include "pab/core/error.hpp"

namespace pab {

std::uint64_t SplitMix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, Stream tag,
                         std::uint64_t index) noexcept {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ static_cast<std::uint64_t>(tag));
  return SplitMix64(h ^ SplitMix64(index));
}

std::uint64_t RunSeed(std::uint64_t base_seed, std::uint64_t run_index) noexcept {
  return SplitMix64(base_seed + run_index);
}

std::uint64_t RngStream::UniformInt(std::uint64_t n) {
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "UniformInt over an empty range");
  // Values below `threshold` would bias the modulo; 2^64 mod n of them.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

double RngStream::Normal() {
  const double u1 = 1.0 - Uniform01();  // (0, 1]
  const double u2 = Uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::Gamma(double shape) {
  if (!(shape > 0.0)) Fail(ErrorCode::kInvalidArgument, "gamma shape must be positive");
  if (shape < 1.0) {
    const double u = 1.0 - Uniform01();
    return Gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = Normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - Uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::Beta(double alpha, double beta) {
  const double x = Gamma(alpha);
  const double y = Gamma(beta);
  return x / (x + y);
}

}  // namespace pab
