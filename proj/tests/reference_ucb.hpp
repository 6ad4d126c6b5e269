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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pab/core/argmax.hpp"
#include "pab/core/arm_stats.hpp"
#include "pab/core/rng.hpp"
#include "pab/runner/episode.hpp"

namespace pab::testing {

// With p = [1, 1] and a single follower action the team is one agent pulling
// the leader's arms. Instance for `seed`: 2 to 7 arms, Uniform[0,1] means.
inline ExperimentConfig SingleAgentTeam(std::uint64_t seed, std::uint64_t horizon) {
  RngStream instance_rng(seed + 1000);
  const std::size_t arms = 2 + instance_rng.UniformInt(6);
  RewardModel model;
  model.space = ActionSpace{arms, 1};
  for (std::size_t a = 0; a < arms; ++a) model.means.push_back(instance_rng.Uniform01());
  model.observabilities = {1.0, 1.0};

  AgentConfig leader;
  leader.strategy = Strategy::kPaLeader;
  AgentConfig follower;
  follower.strategy = Strategy::kPaFollower;
  ExperimentConfig config;
  config.instance.kind = InstanceKind::kExplicit;
  config.instance.model = model;
  config.seats = {SeatSpec{leader, {}}, SeatSpec{follower, {}}};
  config.horizon = horizon;
  config.runs = 1;
  return config;
}

// Textbook UCB over the leader's arms, drawing rewards from the episode's
// reward stream and breaking ties on the leader's tie-break substream. Means
// use the core streaming update so near-ties round identically. Returns an
// empty string when `trace` matches, otherwise where it diverged.
inline std::string CompareWithReferenceUcb(const RunTrace& trace, const RewardModel& model,
                                           std::uint64_t seed, double c) {
  const std::size_t arms = model.space.size(0);
  RngStream rewards(DeriveSeed(seed, Stream::kReward));
  RngStream ties(DeriveSeed(seed, Stream::kTieBreak, 0));
  std::vector<ArmStats> stats(arms);
  std::vector<double> index(arms);
  const double scale = c * 2.0 * std::log(static_cast<double>(trace.length()));
  for (std::size_t t = 0; t < trace.length(); ++t) {
    for (std::size_t a = 0; a < arms; ++a) index[a] = UcbFromScale(stats[a], scale);
    const std::size_t arm = ArgmaxTiebreak(index, ties);
    const double r = rewards.Uniform01() < model.means[arm] ? 1.0 : 0.0;
    if (trace.team_action(t)[0] != arm || trace.true_rewards[t] != r) {
      return "step " + std::to_string(t + 1);
    }
    stats[arm] = UpdateMean(stats[arm], r);
  }
  return {};
}

}  // namespace pab::testing
