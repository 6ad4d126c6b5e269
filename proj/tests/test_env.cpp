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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "pab/core/error.hpp"
#include "pab/env/instance_io.hpp"
#include "pab/env/presets.hpp"
#include "pab/env/reward_model.hpp"

using namespace pab;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pab::Error");
  return ErrorCode::kInvalidArgument;
}

RewardModel Masked(std::vector<double> means, std::vector<double> p) {
  RewardModel model;
  model.space = ActionSpace{2, 2};
  model.means = std::move(means);
  model.observabilities = std::move(p);
  model.Validate();
  return model;
}

// Strict local optimum: no single agent can change its own coordinate without
// lowering the mean.
bool IsStrictLocalOptimum(const RewardModel& model, CellIndex cell) {
  for (std::size_t agent = 0; agent < model.num_agents(); ++agent) {
    for (ActionIndex a = 0; a < model.space.size(agent); ++a) {
      const CellIndex other = model.space.WithCoordinate(cell, agent, a);
      if (other != cell && model.means[other] >= model.means[cell]) return false;
    }
  }
  return true;
}

// Empirical mean of agent `agent`'s observation over n steps, with its
// standard error.
std::pair<double, double> ObservedMean(const RewardModel& model, CellIndex cell,
                                       std::size_t agent, int n, std::uint64_t seed) {
  RewardSampler sampler(seed, model.num_agents());
  std::vector<double> observed(model.num_agents());
  double sum = 0.0, squares = 0.0;
  for (int i = 0; i < n; ++i) {
    sampler.Sample(model, cell, observed);
    sum += observed[agent];
    squares += observed[agent] * observed[agent];
  }
  const double mean = sum / n;
  const double var = squares / n - mean * mean;
  return {mean, std::sqrt(var / n)};
}

}  // namespace

TEST_CASE("masked bernoulli observation channels") {
  const RewardModel model = Masked({0.8, 0.4, 0.2, 0.6}, {1.0, 0.0});
  RewardSampler sampler(5, 2);
  for (int i = 0; i < 10000; ++i) {
    const StepSample s = SampleStep(model, TeamAction{0, 1}, sampler);
    REQUIRE(s.observations.size() == 2);
    REQUIRE(s.observations[0].observed_reward == s.true_reward);
    REQUIRE(s.observations[1].observed_reward == 0.0);
  }
}

TEST_CASE("masked observation is either zero or the true reward") {
  const RewardModel model = Masked({0.8, 0.4, 0.2, 0.6}, {0.3, 0.7});
  RewardSampler sampler(6, 2);
  for (int i = 0; i < 10000; ++i) {
    const StepSample s = SampleStep(model, TeamAction{1, 1}, sampler);
    for (const auto& o : s.observations) {
      REQUIRE((o.observed_reward == 0.0 || o.observed_reward == s.true_reward));
    }
  }
}

TEST_CASE("all p=1 gives every agent the same observation") {
  RewardModel model;
  model.space = ActionSpace{2, 2, 2};
  model.means = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.9};
  model.observabilities = {1.0, 1.0, 1.0};
  RewardSampler sampler(8, 3);
  std::vector<double> observed(3);
  for (CellIndex cell = 0; cell < 8; ++cell) {
    for (int i = 0; i < 1000; ++i) {
      const double r = sampler.Sample(model, cell, observed);
      REQUIRE(observed[0] == r);
      REQUIRE(observed[1] == r);
      REQUIRE(observed[2] == r);
    }
  }
}

TEST_CASE("mu=0.8, p=0.5 observes 0.4 on average over 1e6 steps") {
  const RewardModel model = Masked({0.8, 0.4, 0.2, 0.6}, {1.0, 0.5});
  const auto [mean, se] = ObservedMean(model, 0, 1, 1000000, 11);
  CHECK(std::abs(mean - 0.4) < 3 * se);
}

TEST_CASE("expected observed mean examples") {
  RewardModel masked = Masked({0.8, 0.4, 0.2, 0.6}, {1.0, 0.5});
  CHECK(ExpectedObservedMean(masked, 0, 1) == doctest::Approx(0.4));

  RewardModel flipped = masked;
  flipped.variant = Variant::kFlipped;
  flipped.observabilities = {1.0, 0.25};
  CHECK(ExpectedObservedMean(flipped, 0, 0) == doctest::Approx(0.8));
  CHECK(ExpectedObservedMean(flipped, 0, 1) == doctest::Approx(0.25 * 0.8 + 0.75));
  flipped.flip_reading = FlipReading::kCorruptToOne;
  CHECK(ExpectedObservedMean(flipped, 0, 1) == doctest::Approx(0.25 + 0.75 * 0.8));

  RewardModel gaussian;
  gaussian.variant = Variant::kGaussian;
  gaussian.space = ActionSpace{2, 2};
  gaussian.means = {0.3, 0.1, 0.2, 0.4};
  gaussian.true_stds = {0.5, 0.5, 0.5, 0.5};
  gaussian.noise_stds = {0.1, 0.5};
  gaussian.Validate();
  CHECK(ExpectedObservedMean(gaussian, 0, 1) == doctest::Approx(0.3));
}

TEST_CASE("empirical observed means converge to the analytic mean") {
  std::vector<RewardModel> models;
  models.push_back(Masked({0.8, 0.4, 0.2, 0.6}, {0.9, 0.35}));
  RewardModel flipped = Masked({0.8, 0.4, 0.2, 0.6}, {0.9, 0.35});
  flipped.variant = Variant::kFlipped;
  models.push_back(flipped);
  flipped.flip_reading = FlipReading::kCorruptToOne;
  models.push_back(flipped);
  RewardModel gaussian;
  gaussian.variant = Variant::kGaussian;
  gaussian.space = ActionSpace{2, 2};
  gaussian.means = {0.3, 0.1, 0.2, 0.4};
  gaussian.true_stds = {0.2, 0.3, 0.4, 0.5};
  gaussian.noise_stds = {0.1, 0.5};
  models.push_back(gaussian);

  std::uint64_t seed = 100;
  for (const auto& model : models) {
    CAPTURE(VariantName(model.variant));
    for (CellIndex cell : {0, 3}) {
      for (std::size_t agent = 0; agent < 2; ++agent) {
        const auto [mean, se] = ObservedMean(model, cell, agent, 1000000, ++seed);
        CHECK(std::abs(mean - ExpectedObservedMean(model, cell, agent)) < 3 * se);
      }
    }
  }
}

TEST_CASE("gaussian observation noise has the configured spread") {
  RewardModel model;
  model.variant = Variant::kGaussian;
  model.space = ActionSpace{2, 2};
  model.means = {0.3, 0.1, 0.2, 0.4};
  model.true_stds = {0.2, 0.2, 0.2, 0.2};
  model.noise_stds = {0.0, 0.5};
  RewardSampler sampler(1, 2);
  std::vector<double> observed(2);
  double squares = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double r = sampler.Sample(model, 2, observed);
    REQUIRE(observed[0] == r);
    squares += (observed[1] - r) * (observed[1] - r);
  }
  CHECK(std::abs(squares / n - 0.25) < 3 * 0.25 * std::sqrt(2.0 / n));
}

TEST_CASE("reward model validation") {
  CHECK(CodeOf([] { Masked({0.8, 0.4, 0.2}, {1.0, 0.5}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Masked({1.8, 0.4, 0.2, 0.6}, {1.0, 0.5}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Masked({0.8, 0.4, 0.2, 0.6}, {1.0}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Masked({0.8, 0.4, 0.2, 0.6}, {1.0, -0.1}); }) == ErrorCode::kInvalidArgument);
  const RewardModel tied = Masked({0.8, 0.8, 0.2, 0.6}, {1.0, 0.5});
  CHECK_FALSE(tied.UniqueOptimum().has_value());
  CHECK(CodeOf([&] { (void)tied.OptimalCell(); }) == ErrorCode::kDegenerate);
  CHECK(ParseVariant(VariantName(Variant::kFlipped)) == Variant::kFlipped);
  CHECK(CodeOf([] { ParseVariant("poisson"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("fixed 2x2 preset") {
  const RewardModel model = PresetFixed2x2().model;
  CHECK(model.means == std::vector<double>{0.8, 0.4, 0.2, 0.6});
  CHECK(model.observabilities == std::vector<double>{1.0, 0.5});
  CHECK(PresetFixed2x2().default_c == 0.025);
  CHECK(model.OptimalCell() == model.space.Flatten({0, 0}));
  CHECK(IsStrictLocalOptimum(model, model.space.Flatten({1, 1})));
  CHECK(IsStrictLocalOptimum(model, model.space.Flatten({0, 0})));
  CHECK_FALSE(IsStrictLocalOptimum(model, model.space.Flatten({0, 1})));
  CHECK(model.MaxGap() == doctest::Approx(0.6));
  CHECK(model.Gap(3) == doctest::Approx(0.2));
  CHECK(model.RewardScale() == doctest::Approx(0.75));
}

TEST_CASE("K local optima preset") {
  CHECK(PresetKLocalOptima(2).model == PresetFixed2x2().model);
  CHECK(CodeOf([] { PresetKLocalOptima(1); }) == ErrorCode::kInvalidArgument);

  const RewardModel k3 = PresetKLocalOptima(3).model;
  CHECK(k3.means[k3.space.Flatten({0, 0})] == doctest::Approx(0.8));
  CHECK(k3.means[k3.space.Flatten({1, 1})] == doctest::Approx(0.8 - 0.4 / 3));
  CHECK(k3.means[k3.space.Flatten({2, 2})] == doctest::Approx(0.8 - 0.8 / 3));

  for (std::size_t k = 2; k <= 12; ++k) {
    const RewardModel model = PresetKLocalOptima(k).model;
    CAPTURE(k);
    CHECK(model.OptimalCell() == 0);
    for (CellIndex cell = 0; cell < model.space.num_cells(); ++cell) {
      const bool diagonal = model.space.Coordinate(cell, 0) == model.space.Coordinate(cell, 1);
      CHECK(IsStrictLocalOptimum(model, cell) == diagonal);
      CHECK(model.means[cell] > 0.0);
      CHECK(model.means[cell] < 1.0);
    }
  }
}

TEST_CASE("two-optima team preset") {
  CHECK(PresetTwoOptimaTeam(2).model.means == PresetFixed2x2().model.means);
  for (std::size_t n = 2; n <= 6; ++n) {
    const RewardModel model = PresetTwoOptimaTeam(n).model;
    CAPTURE(n);
    int optima = 0;
    for (CellIndex cell = 0; cell < model.space.num_cells(); ++cell) optima += IsStrictLocalOptimum(model, cell);
    CHECK(optima == 2);
    CHECK(IsStrictLocalOptimum(model, 0));
    CHECK(IsStrictLocalOptimum(model, model.space.num_cells() - 1));
    CHECK(model.OptimalCell() == 0);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(model.observabilities[i] == doctest::Approx(static_cast<double>(i + 1) / n));
    }
  }
  CHECK(DefaultObservabilities(2) == std::vector<double>{1.0, 0.5});
  CHECK(DefaultNoiseStds(2) == std::vector<double>{0.1, 0.5});
}

TEST_CASE("random preset is deterministic per seed") {
  const ActionSpace shape{3, 4};
  RngStream a(77), b(77), c(78);
  const RewardModel first = PresetRandom(shape, a).model;
  CHECK(first == PresetRandom(shape, b).model);
  CHECK_FALSE(first.means == PresetRandom(shape, c).model.means);
  CHECK(first.UniqueOptimum().has_value());
}

TEST_CASE("random preset means average one half") {
  RngStream rng(5);
  double sum = 0.0;
  int n = 0;
  while (n < 100000) {
    const RewardModel model = PresetRandom(ActionSpace{10, 10}, rng).model;
    for (double m : model.means) {
      REQUIRE(m >= 0.0);
      REQUIRE(m <= 1.0);
      sum += m;
      ++n;
    }
  }
  const double se = std::sqrt(1.0 / 12.0 / n);
  CHECK(std::abs(sum / n - 0.5) < 3 * se);
}

TEST_CASE("random gaussian preset deviations") {
  RngStream rng(9);
  RandomPresetOptions options;
  options.variant = Variant::kGaussian;
  const RewardModel model = PresetRandom(ActionSpace{5, 5}, rng, options).model;
  REQUIRE(model.true_stds.size() == 25);
  for (double s : model.true_stds) {
    CHECK(s >= 0.1);
    CHECK(s <= 0.5);
  }
  CHECK(model.noise_stds == std::vector<double>{0.1, 0.5});
  CHECK(model.RewardScale() == 1.0);
}

TEST_CASE("random preset redraws tied optima") {
  // A 1x2 instance drawn from a stream is tied only if both means collide;
  // this exercises the rule at scale rather than forcing a collision.
  RngStream rng(3);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(PresetRandom(ActionSpace{1, 2}, rng).model.UniqueOptimum().has_value());
  }
}

TEST_CASE("instance files round-trip losslessly") {
  const auto dir = std::filesystem::temp_directory_path() / "pab_env_test";
  std::filesystem::create_directories(dir);
  RngStream rng(1234);
  RandomPresetOptions gaussian;
  gaussian.variant = Variant::kGaussian;
  RewardModel flipped = PresetFixed2x2().model;
  flipped.variant = Variant::kFlipped;
  flipped.flip_reading = FlipReading::kCorruptToOne;
  const std::vector<RewardModel> models = {
      PresetFixed2x2().model, PresetRandom(ActionSpace{3, 5}, rng).model,
      PresetRandom(ActionSpace{2, 2, 2}, rng, gaussian).model, flipped,
      PresetTwoOptimaTeam(4).model};
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto path = dir / ("m" + std::to_string(i) + ".json");
    SaveModel(models[i], path);
    CHECK(LoadModel(path) == models[i]);
    CHECK(ModelFromJson(ModelToJson(models[i])) == models[i]);
  }
  CHECK(models[1].generator_seed.has_value());

  CHECK(CodeOf([&] { LoadModel(dir / "missing.json"); }) == ErrorCode::kIo);
  {
    std::ofstream(dir / "bad.json") << "{ not json";
  }
  CHECK(CodeOf([&] { LoadModel(dir / "bad.json"); }) == ErrorCode::kParse);
  auto json = ModelToJson(models[0]);
  json["v"] = 99;
  CHECK(CodeOf([&] { ModelFromJson(json); }) == ErrorCode::kParse);
  std::filesystem::remove_all(dir);
}
