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

#include "pab/env/presets.hpp"

#include <string>

#include "pab/core/error.hpp"

namespace pab {

std::vector<double> DefaultObservabilities(std::size_t num_agents) {
  if (num_agents == 2) return {1.0, 0.5};
  std::vector<double> p(num_agents);
  for (std::size_t i = 0; i < num_agents; ++i) {
    p[i] = static_cast<double>(i + 1) / static_cast<double>(num_agents);
  }
  return p;
}

std::vector<double> DefaultNoiseStds(std::size_t num_agents) {
  if (num_agents == 1) return {0.1};
  std::vector<double> s(num_agents);
  for (std::size_t i = 0; i < num_agents; ++i) {
    s[i] = 0.1 + 0.4 * static_cast<double>(i) / static_cast<double>(num_agents - 1);
  }
  return s;
}

InstancePreset PresetFixed2x2() {
  InstancePreset preset;
  preset.name = "fixed_2x2";
  preset.model.space = ActionSpace{2, 2};
  preset.model.means = {0.8, 0.4, 0.2, 0.6};
  preset.model.observabilities = {1.0, 0.5};
  preset.model.Validate();
  preset.model.OptimalCell();
  return preset;
}

InstancePreset PresetKLocalOptima(std::size_t k) {
  if (k < 2) Fail(ErrorCode::kInvalidArgument, "K local optima needs K >= 2");
  InstancePreset preset;
  preset.name = "k_local_optima_" + std::to_string(k);
  preset.model.space = ActionSpace{k, k};
  preset.model.means.resize(k * k);
  // One integer ratio per cell keeps each mean correctly rounded, so K = 2
  // matches the fixed preset bit for bit.
  const double denom = 10.0 * static_cast<double>(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t num = (i == j ? 8 : 4) * k - 4 * i;
      preset.model.means[i * k + j] = static_cast<double>(num) / denom;
    }
  }
  preset.model.observabilities = {1.0, 0.5};
  preset.model.Validate();
  preset.model.OptimalCell();
  return preset;
}

InstancePreset PresetTwoOptimaTeam(std::size_t num_agents) {
  if (num_agents < 2) Fail(ErrorCode::kInvalidArgument, "team preset needs N >= 2");
  InstancePreset preset;
  preset.name = "two_optima_team_" + std::to_string(num_agents);
  preset.model.space = ActionSpace(std::vector<std::size_t>(num_agents, 2));
  const CellIndex cells = preset.model.space.num_cells();
  const double spread = static_cast<double>(num_agents - 1);
  preset.model.means.resize(cells);
  for (CellIndex cell = 0; cell < cells; ++cell) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < num_agents; ++i) ones += preset.model.space.Coordinate(cell, i);
    double mu;
    if (ones == 0) {
      mu = 0.8;
    } else if (ones == num_agents) {
      mu = 0.6;
    } else if (preset.model.space.Coordinate(cell, 0) == 0) {
      mu = 0.4 - 0.1 * static_cast<double>(ones - 1) / spread;
    } else {
      mu = 0.2 - 0.1 * static_cast<double>(num_agents - ones - 1) / spread;
    }
    preset.model.means[cell] = mu;
  }
  preset.model.observabilities.resize(num_agents);
  for (std::size_t i = 0; i < num_agents; ++i) {
    preset.model.observabilities[i] = static_cast<double>(i + 1) / static_cast<double>(num_agents);
  }
  preset.model.Validate();
  preset.model.OptimalCell();
  return preset;
}

InstancePreset PresetRandom(const ActionSpace& shape, RngStream& rng,
                            const RandomPresetOptions& options) {
  InstancePreset preset;
  preset.name = "random";
  RewardModel& model = preset.model;
  model.variant = options.variant;
  model.space = shape;
  model.flip_reading = options.flip_reading;
  model.generator_seed = rng.seed();
  const std::size_t agents = shape.num_agents();
  const std::size_t cells = static_cast<std::size_t>(shape.num_cells());
  if (options.variant == Variant::kGaussian) {
    model.noise_stds = options.noise_stds.empty() ? DefaultNoiseStds(agents) : options.noise_stds;
  } else {
    model.observabilities =
        options.observabilities.empty() ? DefaultObservabilities(agents) : options.observabilities;
  }
  model.means.resize(cells);
  do {
    for (double& m : model.means) m = rng.Uniform01();
  } while (!model.UniqueOptimum());
  if (options.variant == Variant::kGaussian) {
    model.true_stds.resize(cells);
    for (double& s : model.true_stds) s = rng.Uniform(0.1, 0.5);
  }
  model.Validate();
  return preset;
}

}  // namespace pab
