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

#pragma once

#include <cstdint>
#include <random>

namespace pab {

// Substream tags. Each (seed, tag, index) triple names an independent stream;
// the numeric values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
  kInstance = 1,
  kReward = 2,
  kObservation = 3,
  kTieBreak = 4,
  kPrediction = 5,
  kPosterior = 6,
  kRoles = 7,
  kSubstitute = 8,
  kSession = 9,
};

std::uint64_t SplitMix64(std::uint64_t x) noexcept;

// Seed of substream (tag, index) under `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, Stream tag,
                         std::uint64_t index = 0) noexcept;

// Seed of run `run_index` in a batch with base seed `base_seed`:
// SplitMix64(base_seed + run_index).
std::uint64_t RunSeed(std::uint64_t base_seed, std::uint64_t run_index) noexcept;

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; every distribution below is
// implemented here rather than taken from <random>, whose distributions are
// implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  RngStream Substream(Stream tag, std::uint64_t index = 0) const {
    return RngStream(DeriveSeed(seed_, tag, index));
  }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform on {0, ..., n-1}; n must be positive. Rejection sampling, so the
  // result is exactly uniform.
  std::uint64_t UniformInt(std::uint64_t n);
  bool Bernoulli(double p) { return Uniform01() < p; }
  // Standard normal via Box-Muller; consumes two uniforms per call.
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }
  // Marsaglia-Tsang; shape > 0.
  double Gamma(double shape);
  double Beta(double alpha, double beta);

  friend bool operator==(const RngStream& a, const RngStream& b) {
    return a.seed_ == b.seed_ && a.engine_ == b.engine_;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace pab
