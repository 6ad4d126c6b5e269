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
#include <vector>

#include "pab/agents/agent.hpp"
#include "pab/env/reward_model.hpp"
#include "pab/runner/config.hpp"

namespace pab {

// Per-step record of one episode, stored column-wise.
struct RunTrace {
  std::uint64_t seed = 0;
  ActionSpace space;
  std::uint64_t warm_start_steps = 0;
  std::vector<CellIndex> cells;
  std::vector<double> true_rewards;
  std::vector<double> observed;             // [step][agent]
  std::vector<std::int64_t> predictions;    // [step][agent][seat], -1 = none

  std::size_t num_agents() const { return space.num_agents(); }
  std::size_t length() const { return cells.size(); }
  // Steps are 0-based here.
  TeamAction team_action(std::size_t step) const { return space.Unflatten(cells.at(step)); }
  double observed_reward(std::size_t step, std::size_t agent) const {
    return observed.at(step * num_agents() + agent);
  }
  std::optional<ActionIndex> prediction(std::size_t step, std::size_t agent,
                                        std::size_t seat) const;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct StepOutcome {
  std::uint64_t step = 0;  // 1-based
  CellIndex cell = 0;
  double true_reward = 0.0;
  std::vector<double> observed;
};

// One episode, advanced in two phases per step: Commit fixes every
// agent-driven seat's action from pre-step state, then Resolve takes the
// external seats' actions, samples the reward and delivers to each agent
// its own observation plus the team action.
class Episode {
 public:
  Episode(const ExperimentConfig& config, std::uint64_t seed);
  Episode(const ExperimentConfig& config, RewardModel model, std::uint64_t seed);

  const RewardModel& model() const noexcept { return model_; }
  std::uint64_t horizon() const noexcept { return horizon_; }
  std::uint64_t completed_steps() const noexcept { return trace_.length(); }
  bool finished() const noexcept { return completed_steps() >= horizon_; }
  // Seat has no controller for the upcoming step and must be supplied.
  bool IsExternal(std::size_t seat) const;
  // Rank order (order[r] = seat of rank r + 1).
  std::span<const std::size_t> role_order() const noexcept { return role_order_; }

  // Idempotent within a step. Entries of external seats are nullopt.
  std::span<const std::optional<ActionIndex>> Commit();
  // `external[seat]` must be set exactly for the external seats.
  StepOutcome Resolve(std::span<const std::optional<ActionIndex>> external);

  const RunTrace& trace() const noexcept { return trace_; }
  const Agent* agent(std::size_t seat) const;

 private:
  void Build(const ExperimentConfig& config);
  Agent* Controller(std::size_t seat, std::uint64_t t);

  RewardModel model_;
  std::uint64_t seed_;
  std::uint64_t horizon_;
  std::optional<WarmStart> warm_start_;
  std::vector<std::optional<Agent>> agents_;
  std::optional<Agent> substitute_;
  std::vector<std::size_t> role_order_;
  RewardSampler sampler_;
  std::vector<std::optional<ActionIndex>> committed_;
  bool has_commit_ = false;
  std::vector<double> observed_scratch_;
  RunTrace trace_;
};

// Plays a whole episode; external seats replay their SeatSpec::script.
Episode PlayEpisode(const ExperimentConfig& config, std::uint64_t seed);
RunTrace RunEpisode(const ExperimentConfig& config, std::uint64_t seed);

// Seats a PA_RANK_K agent or a PA_FOLLOWER at `seat` models, given the rank
// order.
std::vector<std::size_t> ModeledSeats(const AgentConfig& agent, std::size_t seat,
                                      std::span<const std::size_t> order,
                                      std::size_t num_agents);

}  // namespace pab
