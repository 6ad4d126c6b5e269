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

#include "pab/env/reward_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pab/core/error.hpp"

namespace pab {

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kMaskedBernoulli: return "masked_bernoulli";
    case Variant::kFlipped: return "flipped";
    case Variant::kGaussian: return "gaussian";
  }
  return "masked_bernoulli";
}

Variant ParseVariant(std::string_view name) {
  if (name == "masked_bernoulli") return Variant::kMaskedBernoulli;
  if (name == "flipped") return Variant::kFlipped;
  if (name == "gaussian") return Variant::kGaussian;
  Fail(ErrorCode::kInvalidArgument, "unknown reward variant '" + std::string(name) + "'");
}

std::string_view FlipReadingName(FlipReading reading) {
  return reading == FlipReading::kFailReadsOne ? "fail_reads_one" : "corrupt_to_one";
}

FlipReading ParseFlipReading(std::string_view name) {
  if (name == "fail_reads_one") return FlipReading::kFailReadsOne;
  if (name == "corrupt_to_one") return FlipReading::kCorruptToOne;
  Fail(ErrorCode::kInvalidArgument, "unknown flip reading '" + std::string(name) + "'");
}

void RewardModel::Validate() const {
  const std::size_t cells = static_cast<std::size_t>(space.num_cells());
  const std::size_t agents = space.num_agents();
  if (agents == 0) Fail(ErrorCode::kInvalidArgument, "instance has no agents");
  if (means.size() != cells) {
    Fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(cells) + " means, got " +
                                          std::to_string(means.size()));
  }
  for (double m : means) {
    if (!std::isfinite(m)) Fail(ErrorCode::kInvalidArgument, "means must be finite");
  }
  if (variant == Variant::kGaussian) {
    if (true_stds.size() != cells) {
      Fail(ErrorCode::kInvalidArgument, "gaussian instance needs one reward deviation per cell");
    }
    if (noise_stds.size() != agents) {
      Fail(ErrorCode::kInvalidArgument, "gaussian instance needs one noise deviation per agent");
    }
    for (double s : true_stds) {
      if (!(s > 0.0) || !std::isfinite(s)) {
        Fail(ErrorCode::kInvalidArgument, "reward deviations must be positive");
      }
    }
    for (double s : noise_stds) {
      if (!(s >= 0.0) || !std::isfinite(s)) {
        Fail(ErrorCode::kInvalidArgument, "noise deviations must be non-negative");
      }
    }
    return;
  }
  for (double m : means) {
    if (m < 0.0 || m > 1.0) Fail(ErrorCode::kInvalidArgument, "Bernoulli means must lie in [0, 1]");
  }
  if (observabilities.size() != agents) {
    Fail(ErrorCode::kInvalidArgument, "expected one observability per agent");
  }
  for (double p : observabilities) {
    if (!(p >= 0.0 && p <= 1.0)) Fail(ErrorCode::kInvalidArgument, "observabilities must lie in [0, 1]");
  }
}

std::optional<CellIndex> RewardModel::UniqueOptimum() const {
  if (means.empty()) return std::nullopt;
  const auto best = std::max_element(means.begin(), means.end());
  if (std::count(means.begin(), means.end(), *best) != 1) return std::nullopt;
  return static_cast<CellIndex>(best - means.begin());
}

CellIndex RewardModel::OptimalCell() const {
  const auto cell = UniqueOptimum();
  if (!cell) Fail(ErrorCode::kDegenerate, "degenerate instance: optimal team action is tied");
  return *cell;
}

double RewardModel::Gap(CellIndex cell) const {
  return *std::max_element(means.begin(), means.end()) - means.at(cell);
}

double RewardModel::MaxGap() const {
  const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
  return *hi - *lo;
}

double RewardModel::RewardScale() const {
  if (variant == Variant::kGaussian) return 1.0;
  double sum = 0.0;
  for (double p : observabilities) sum += p;
  return sum / static_cast<double>(observabilities.size());
}

double ExpectedObservedMean(const RewardModel& model, CellIndex cell, std::size_t agent) {
  const double mu = model.means.at(cell);
  switch (model.variant) {
    case Variant::kMaskedBernoulli:
      return model.observabilities.at(agent) * mu;
    case Variant::kFlipped: {
      const double p = model.observabilities.at(agent);
      return model.flip_reading == FlipReading::kFailReadsOne ? p * mu + (1.0 - p)
                                                              : p + (1.0 - p) * mu;
    }
    case Variant::kGaussian:
      return mu;
  }
  return mu;
}

RewardSampler::RewardSampler(std::uint64_t seed, std::size_t num_agents)
    : reward_rng_(DeriveSeed(seed, Stream::kReward)) {
  observation_rngs_.reserve(num_agents);
  for (std::size_t i = 0; i < num_agents; ++i) {
    observation_rngs_.emplace_back(DeriveSeed(seed, Stream::kObservation, i));
  }
}

double RewardSampler::Sample(const RewardModel& model, CellIndex cell,
                             std::span<double> observed) {
  const double mu = model.means[cell];
  const std::size_t agents = observation_rngs_.size();
  if (model.variant == Variant::kGaussian) {
    const double r = reward_rng_.Normal(mu, model.true_stds[cell]);
    for (std::size_t i = 0; i < agents; ++i) {
      observed[i] = r + observation_rngs_[i].Normal(0.0, model.noise_stds[i]);
    }
    return r;
  }
  const double r = reward_rng_.Bernoulli(mu) ? 1.0 : 0.0;
  for (std::size_t i = 0; i < agents; ++i) {
    const bool hit = observation_rngs_[i].Bernoulli(model.observabilities[i]);
    if (model.variant == Variant::kMaskedBernoulli) {
      observed[i] = hit ? r : 0.0;
    } else if (model.flip_reading == FlipReading::kFailReadsOne) {
      observed[i] = hit ? r : 1.0;
    } else {
      observed[i] = hit ? 1.0 : r;
    }
  }
  return r;
}

StepSample SampleStep(const RewardModel& model, const TeamAction& action,
                      RewardSampler& sampler) {
  const CellIndex cell = model.space.Flatten(action);
  std::vector<double> observed(model.num_agents());
  StepSample out;
  out.true_reward = sampler.Sample(model, cell, observed);
  for (std::size_t i = 0; i < observed.size(); ++i) {
    out.observations.push_back(Observation{i, observed[i], out.true_reward});
  }
  return out;
}

}  // namespace pab
