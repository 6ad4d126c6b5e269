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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pab/core/action_space.hpp"
#include "pab/core/rng.hpp"

namespace pab {

enum class Variant { kMaskedBernoulli, kFlipped, kGaussian };

// Reading of the flipped channel. kFailReadsOne: the agent sees r* with
// probability p and 1 otherwise. kCorruptToOne: the agent sees 1 with
// probability p and r* otherwise.
enum class FlipReading { kFailReadsOne, kCorruptToOne };

std::string_view VariantName(Variant variant);
Variant ParseVariant(std::string_view name);
std::string_view FlipReadingName(FlipReading reading);
FlipReading ParseFlipReading(std::string_view name);

struct RewardModel {
  Variant variant = Variant::kMaskedBernoulli;
  ActionSpace space;
  std::vector<double> means;            // by CellIndex
  std::vector<double> true_stds;        // by CellIndex, kGaussian only
  std::vector<double> observabilities;  // per agent, Bernoulli variants
  std::vector<double> noise_stds;       // per agent, kGaussian only
  FlipReading flip_reading = FlipReading::kFailReadsOne;
  std::optional<std::uint64_t> generator_seed;

  // Throws kInvalidArgument on any shape or range violation.
  void Validate() const;
  std::size_t num_agents() const { return space.num_agents(); }
  // nullopt when the maximum mean is attained by more than one cell.
  std::optional<CellIndex> UniqueOptimum() const;
  // Throws kDegenerate when there is no unique optimum.
  CellIndex OptimalCell() const;
  double Gap(CellIndex cell) const;
  double MaxGap() const;
  // Expected team reward per unit of mean: the average observability for the
  // Bernoulli variants, 1 for kGaussian.
  double RewardScale() const;

  friend bool operator==(const RewardModel&, const RewardModel&) = default;
};

// Analytic mean of what `agent` observes when the team plays `cell`.
double ExpectedObservedMean(const RewardModel& model, CellIndex cell, std::size_t agent);

struct Observation {
  std::size_t agent = 0;
  double observed_reward = 0.0;
  double true_reward = 0.0;  // trace-only
};

struct StepSample {
  double true_reward = 0.0;
  std::vector<Observation> observations;
};

// The environment's random streams: one for r* and one per agent for its
// observation channel, so agents' observation draws are independent of each
// other and of r*.
class RewardSampler {
 public:
  RewardSampler(std::uint64_t seed, std::size_t num_agents);

  // Writes per-agent observed rewards into `observed` and returns r*.
  double Sample(const RewardModel& model, CellIndex cell, std::span<double> observed);

 private:
  RngStream reward_rng_;
  std::vector<RngStream> observation_rngs_;
};

StepSample SampleStep(const RewardModel& model, const TeamAction& action,
                      RewardSampler& sampler);

}  // namespace pab
