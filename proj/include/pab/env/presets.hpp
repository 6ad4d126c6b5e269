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
#include <string>
#include <vector>

#include "pab/core/action_space.hpp"
#include "pab/core/rng.hpp"
#include "pab/env/reward_model.hpp"

namespace pab {

struct InstancePreset {
  std::string name;
  RewardModel model;
  double default_c = 0.025;
};

// 2x2 instance with a local optimum at (1,1): means [[0.8, 0.4], [0.2, 0.6]],
// p = [1, 0.5].
InstancePreset PresetFixed2x2();

// KxK instance with K strict local optima on the diagonal:
//   mu(i,i) = 0.8 - 0.4 i / K,   mu(i,j) = 0.4 - 0.4 i / K  (j != i).
// Equal to PresetFixed2x2 at K = 2. Throws kInvalidArgument for K < 2.
InstancePreset PresetKLocalOptima(std::size_t k);

// N agents with two actions each and exactly two strict local optima, the
// all-zeros cell (0.8) and the all-ones cell (0.6). A mixed cell with m ones
// is worth 0.4 - 0.1 (m - 1) / (N - 1) when agent 0 plays 0 and
// 0.2 - 0.1 (N - m - 1) / (N - 1) when agent 0 plays 1, so any mixed cell
// has an improving unilateral move. Observabilities p_i = (i + 1) / N.
// Equal to PresetFixed2x2's means at N = 2.
InstancePreset PresetTwoOptimaTeam(std::size_t num_agents);

struct RandomPresetOptions {
  Variant variant = Variant::kMaskedBernoulli;
  // Empty: [1, 0.5] for two agents, (i + 1) / N otherwise.
  std::vector<double> observabilities;
  // Empty: 0.1 + 0.4 i / (N - 1), i.e. [0.1, 0.5] for two agents.
  std::vector<double> noise_stds;
  FlipReading flip_reading = FlipReading::kFailReadsOne;
};

// Means i.i.d. Uniform[0,1] in cell order (then, for kGaussian, per-cell
// reward deviations Uniform[0.1, 0.5]). An instance whose optimum is tied is
// discarded and redrawn from the continuing stream.
InstancePreset PresetRandom(const ActionSpace& shape, RngStream& rng,
                            const RandomPresetOptions& options = {});

std::vector<double> DefaultObservabilities(std::size_t num_agents);
std::vector<double> DefaultNoiseStds(std::size_t num_agents);

}  // namespace pab
