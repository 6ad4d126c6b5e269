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
#include "pab/core/arm_stats.hpp"
#include "pab/core/rng.hpp"
#include "pab/core/window_histogram.hpp"

namespace pab {

enum class Strategy {
  kPaLeader,
  kPaFollower,
  kPaRankK,
  kNaiveUcb,
  kVeryNaiveUcb,
  kNaiveThompson,
  kKgLeader,
};

// Wire names: "PA_LEADER", "PA_FOLLOWER", "PA_RANK_K", "NAIVE_UCB",
// "VERY_NAIVE_UCB", "NAIVE_THOMPSON", "KG_LEADER".
std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

// How delta is chosen: 1/T^2 fixed at construction (kHorizon), 1/t^2 at step
// t (kAnytime), or an explicit value (kFixed).
enum class DeltaMode { kHorizon, kAnytime, kFixed };

std::string_view DeltaModeName(DeltaMode mode);
DeltaMode ParseDeltaMode(std::string_view name);

struct AgentConfig {
  Strategy strategy = Strategy::kNaiveUcb;
  double c = 0.025;
  DeltaMode delta_mode = DeltaMode::kHorizon;
  double delta = 0.0;         // kFixed only
  std::size_t window = 1;     // W, partner-modelling strategies
  std::size_t repeat = 1;     // L, leaders
  std::size_t rank = 1;       // hierarchy position for PA_RANK_K, 1 = top
  std::uint64_t horizon = 1;  // T

  void Validate() const;
  // ln(1/delta) in effect at step t >= 1.
  double LogInvDelta(std::uint64_t t) const;
  bool UsesPosterior() const {
    return strategy == Strategy::kNaiveThompson || strategy == Strategy::kKgLeader;
  }

  friend bool operator==(const AgentConfig&, const AgentConfig&) = default;
};

struct BetaPosterior {
  double alpha = 1.0;
  double beta = 1.0;

  double Mean() const { return alpha / (alpha + beta); }
  friend bool operator==(const BetaPosterior&, const BetaPosterior&) = default;
};

// Everything an agent knows. Only its own rewards and the team actions ever
// reach it; there is no path from the environment's means into this struct.
struct AgentState {
  std::size_t seat = 0;
  // Indexed by CellIndex, or by own action for VERY_NAIVE_UCB.
  std::vector<ArmStats> stats;
  // Higher-ranked seats this agent predicts, highest rank first, with one
  // histogram and one per-step prediction each.
  std::vector<std::size_t> modeled_seats;
  std::vector<WindowHistogram> histograms;
  std::vector<ActionIndex> predictions;
  std::vector<BetaPosterior> posteriors;
  std::optional<ActionIndex> last_own_action;
  std::optional<ActionIndex> pending_action;
  std::uint64_t steps = 0;
  RngStream tie_rng;
  RngStream prediction_rng;
  RngStream posterior_rng;
  // Scratch buffers, reused across steps.
  std::vector<double> values;
  std::vector<CellIndex> candidates;

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

// Strategy kernels. Each takes the agent's own state and returns its own
// coordinate for step t (1-based).
ActionIndex PaLeaderAct(AgentState& state, const AgentConfig& config,
                        const ActionSpace& space, std::uint64_t t);
ActionIndex PaFollowerAct(AgentState& state, const AgentConfig& config,
                          const ActionSpace& space, std::uint64_t t);
ActionIndex PaRankKAct(AgentState& state, const AgentConfig& config,
                       const ActionSpace& space, std::uint64_t t);
ActionIndex NaiveUcbAct(AgentState& state, const AgentConfig& config,
                        const ActionSpace& space, std::uint64_t t);
ActionIndex VeryNaiveUcbAct(AgentState& state, const AgentConfig& config,
                            const ActionSpace& space, std::uint64_t t);
ActionIndex NaiveThompsonAct(AgentState& state, const ActionSpace& space);
ActionIndex KgLeaderAct(AgentState& state, const ActionSpace& space,
                        std::uint64_t t, std::uint64_t horizon);

// One-step-lookahead value of every cell with `remaining` pulls left after
// the current one:
//   p + remaining * (p * max(m+, best_other) + (1 - p) * max(m-, best_other))
// where p is the posterior mean, m+/m- the posterior mean after a success or
// a failure, and best_other the best current mean among the other cells.
std::vector<double> KnowledgeGradientValues(std::span<const BetaPosterior> posteriors,
                                            std::uint64_t remaining);

void AgentObserve(AgentState& state, const AgentConfig& config,
                  const ActionSpace& space, CellIndex team_action,
                  double own_reward);

class Agent {
 public:
  // `modeled_seats` lists the higher-ranked seats, highest first: exactly one
  // for PA_FOLLOWER, rank-1 of them for PA_RANK_K, none otherwise. Random
  // substreams derive from (seed, seat).
  Agent(AgentConfig config, ActionSpace space, std::size_t seat,
        std::vector<std::size_t> modeled_seats, std::uint64_t seed);

  // Own action for step t. Throws kBudgetExhausted for KG_LEADER past T.
  ActionIndex Act(std::uint64_t t);
  // Own observed reward plus the revealed team action. If Act was called for
  // this step, the team action must carry the committed coordinate.
  void Observe(CellIndex team_action, double own_reward);
  void Observe(const TeamAction& team_action, double own_reward) {
    Observe(space_.Flatten(team_action), own_reward);
  }

  // Sampled predictions of the last Act, parallel to state().modeled_seats.
  std::span<const ActionIndex> predictions() const { return state_.predictions; }

  const AgentConfig& config() const noexcept { return config_; }
  const ActionSpace& space() const noexcept { return space_; }
  std::size_t seat() const noexcept { return state_.seat; }
  const AgentState& state() const noexcept { return state_; }
  AgentState& mutable_state() noexcept { return state_; }

  friend bool operator==(const Agent&, const Agent&) = default;

 private:
  AgentConfig config_;
  ActionSpace space_;
  AgentState state_;
};

}  // namespace pab
