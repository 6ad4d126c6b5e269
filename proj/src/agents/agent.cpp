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

#include "pab/agents/agent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pab/core/argmax.hpp"
#include "pab/core/error.hpp"

namespace pab {
namespace {

constexpr struct {
  Strategy strategy;
  std::string_view name;
} kStrategyNames[] = {
    {Strategy::kPaLeader, "PA_LEADER"},
    {Strategy::kPaFollower, "PA_FOLLOWER"},
    {Strategy::kPaRankK, "PA_RANK_K"},
    {Strategy::kNaiveUcb, "NAIVE_UCB"},
    {Strategy::kVeryNaiveUcb, "VERY_NAIVE_UCB"},
    {Strategy::kNaiveThompson, "NAIVE_THOMPSON"},
    {Strategy::kKgLeader, "KG_LEADER"},
};

// Fills state.values with the UCB of every cell and returns the own
// coordinate of the tie-broken argmax.
ActionIndex ArgmaxOverMatrix(AgentState& state, const AgentConfig& config,
                             const ActionSpace& space, std::uint64_t t) {
  const double scale = config.c * config.LogInvDelta(t);
  state.values.resize(state.stats.size());
  for (std::size_t cell = 0; cell < state.stats.size(); ++cell) {
    state.values[cell] = UcbFromScale(state.stats[cell], scale);
  }
  const std::size_t best = ArgmaxTiebreak(state.values, state.tie_rng);
  return space.Coordinate(best, state.seat);
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  for (const auto& entry : kStrategyNames) {
    if (entry.strategy == strategy) return entry.name;
  }
  return "UNKNOWN";
}

Strategy ParseStrategy(std::string_view name) {
  for (const auto& entry : kStrategyNames) {
    if (entry.name == name) return entry.strategy;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

std::string_view DeltaModeName(DeltaMode mode) {
  switch (mode) {
    case DeltaMode::kHorizon: return "horizon";
    case DeltaMode::kAnytime: return "anytime";
    case DeltaMode::kFixed: return "fixed";
  }
  return "horizon";
}

DeltaMode ParseDeltaMode(std::string_view name) {
  if (name == "horizon") return DeltaMode::kHorizon;
  if (name == "anytime") return DeltaMode::kAnytime;
  if (name == "fixed") return DeltaMode::kFixed;
  Fail(ErrorCode::kInvalidArgument, "unknown delta mode '" + std::string(name) + "'");
}

void AgentConfig::Validate() const {
  if (!(c > 0.0)) Fail(ErrorCode::kInvalidArgument, "exploration constant c must be positive");
  if (delta_mode == DeltaMode::kFixed && !(delta > 0.0 && delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "confidence parameter delta must lie in (0, 1)");
  }
  if (window < 1) Fail(ErrorCode::kInvalidArgument, "window W must be at least 1");
  if (repeat < 1) Fail(ErrorCode::kInvalidArgument, "repetition L must be at least 1");
  if (rank < 1) Fail(ErrorCode::kInvalidArgument, "rank must be at least 1");
  if (horizon < 1) Fail(ErrorCode::kInvalidArgument, "horizon T must be at least 1");
}

double AgentConfig::LogInvDelta(std::uint64_t t) const {
  switch (delta_mode) {
    case DeltaMode::kHorizon: return 2.0 * std::log(static_cast<double>(horizon));
    case DeltaMode::kAnytime: return 2.0 * std::log(static_cast<double>(std::max<std::uint64_t>(t, 1)));
    case DeltaMode::kFixed: return -std::log(delta);
  }
  return 0.0;
}

ActionIndex PaLeaderAct(AgentState& state, const AgentConfig& config,
                        const ActionSpace& space, std::uint64_t t) {
  // A fresh choice at the first step of every block of L steps; (t - 1) % L
  // keeps L = 1 choosing at every step.
  if (!state.last_own_action || (t - 1) % config.repeat == 0) {
    state.last_own_action = ArgmaxOverMatrix(state, config, space, t);
  }
  return *state.last_own_action;
}

ActionIndex PaFollowerAct(AgentState& state, const AgentConfig& config,
                          const ActionSpace& space, std::uint64_t t) {
  const std::size_t leader = state.modeled_seats.front();
  const ActionIndex predicted = state.histograms.front().Sample(state.prediction_rng);
  state.predictions.assign(1, predicted);

  const double scale = config.c * config.LogInvDelta(t);
  const CellIndex row = space.WithCoordinate(0, leader, predicted);
  const std::size_t own_actions = space.size(state.seat);
  state.values.resize(own_actions);
  for (ActionIndex a = 0; a < own_actions; ++a) {
    state.values[a] = UcbFromScale(state.stats[space.WithCoordinate(row, state.seat, a)], scale);
  }
  return ArgmaxTiebreak(state.values, state.tie_rng);
}

ActionIndex PaRankKAct(AgentState& state, const AgentConfig& config,
                       const ActionSpace& space, std::uint64_t t) {
  if (state.modeled_seats.empty()) return PaLeaderAct(state, config, space, t);

  state.predictions.resize(state.modeled_seats.size());
  for (std::size_t k = 0; k < state.modeled_seats.size(); ++k) {
    state.predictions[k] = state.histograms[k].Sample(state.prediction_rng);
  }
  // Cells agreeing with every prediction, in flat (lexicographic) order.
  const double scale = config.c * config.LogInvDelta(t);
  state.values.clear();
  state.candidates.clear();
  for (CellIndex cell = 0; cell < space.num_cells(); ++cell) {
    bool consistent = true;
    for (std::size_t k = 0; k < state.modeled_seats.size() && consistent; ++k) {
      consistent = space.Coordinate(cell, state.modeled_seats[k]) == state.predictions[k];
    }
    if (!consistent) continue;
    state.candidates.push_back(cell);
    state.values.push_back(UcbFromScale(state.stats[cell], scale));
  }
  const std::size_t best = ArgmaxTiebreak(state.values, state.tie_rng);
  return space.Coordinate(state.candidates[best], state.seat);
}

ActionIndex NaiveUcbAct(AgentState& state, const AgentConfig& config,
                        const ActionSpace& space, std::uint64_t t) {
  return ArgmaxOverMatrix(state, config, space, t);
}

ActionIndex VeryNaiveUcbAct(AgentState& state, const AgentConfig& config,
                            const ActionSpace&, std::uint64_t t) {
  const double scale = config.c * config.LogInvDelta(t);
  state.values.resize(state.stats.size());
  for (std::size_t a = 0; a < state.stats.size(); ++a) {
    state.values[a] = UcbFromScale(state.stats[a], scale);
  }
  return ArgmaxTiebreak(state.values, state.tie_rng);
}

ActionIndex NaiveThompsonAct(AgentState& state, const ActionSpace& space) {
  state.values.resize(state.posteriors.size());
  for (std::size_t cell = 0; cell < state.posteriors.size(); ++cell) {
    const BetaPosterior& post = state.posteriors[cell];
    state.values[cell] = state.posterior_rng.Beta(post.alpha, post.beta);
  }
  const std::size_t best = ArgmaxTiebreak(state.values, state.tie_rng);
  return space.Coordinate(best, state.seat);
}

std::vector<double> KnowledgeGradientValues(std::span<const BetaPosterior> posteriors,
                                            std::uint64_t remaining) {
  const double inf = std::numeric_limits<double>::infinity();
  double top = -inf;
  double second = -inf;
  std::size_t top_cell = 0;
  for (std::size_t cell = 0; cell < posteriors.size(); ++cell) {
    const double m = posteriors[cell].Mean();
    if (m > top) {
      second = top;
      top = m;
      top_cell = cell;
    } else if (m > second) {
      second = m;
    }
  }
  const double horizon_left = static_cast<double>(remaining);
  std::vector<double> values(posteriors.size());
  for (std::size_t cell = 0; cell < posteriors.size(); ++cell) {
    const double a = posteriors[cell].alpha;
    const double b = posteriors[cell].beta;
    const double p = a / (a + b);
    const double on_success = (a + 1.0) / (a + b + 1.0);
    const double on_failure = a / (a + b + 1.0);
    const double best_other = cell == top_cell ? second : top;
    values[cell] = p + horizon_left * (p * std::max(on_success, best_other) +
                                       (1.0 - p) * std::max(on_failure, best_other));
  }
  return values;
}

ActionIndex KgLeaderAct(AgentState& state, const ActionSpace& space,
                        std::uint64_t t, std::uint64_t horizon) {
  if (t > horizon) Fail(ErrorCode::kBudgetExhausted, "budget exhausted");
  state.values = KnowledgeGradientValues(state.posteriors, horizon - t);
  const std::size_t best = ArgmaxTiebreak(state.values, state.tie_rng);
  return space.Coordinate(best, state.seat);
}

void AgentObserve(AgentState& state, const AgentConfig& config,
                  const ActionSpace& space, CellIndex team_action,
                  double own_reward) {
  if (team_action >= space.num_cells()) {
    Fail(ErrorCode::kOutOfRange, "observed team action out of bounds");
  }
  if (std::isnan(own_reward)) Fail(ErrorCode::kInvalidArgument, "reward is NaN");
  const ActionIndex own = space.Coordinate(team_action, state.seat);
  if (state.pending_action && *state.pending_action != own) {
    Fail(ErrorCode::kInvalidArgument,
         "team action disagrees with the action this agent committed to");
  }
  if (config.UsesPosterior() && (own_reward < 0.0 || own_reward > 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(StrategyName(config.strategy)) + " needs rewards in [0, 1]");
  }

  const std::size_t key =
      config.strategy == Strategy::kVeryNaiveUcb ? own : static_cast<std::size_t>(team_action);
  state.stats[key] = UpdateMean(state.stats[key], own_reward);
  if (config.UsesPosterior()) {
    state.posteriors[team_action].alpha += own_reward;
    state.posteriors[team_action].beta += 1.0 - own_reward;
  }
  for (std::size_t k = 0; k < state.modeled_seats.size(); ++k) {
    state.histograms[k].Push(space.Coordinate(team_action, state.modeled_seats[k]));
  }
  state.last_own_action = own;
  state.pending_action.reset();
  ++state.steps;
}

Agent::Agent(AgentConfig config, ActionSpace space, std::size_t seat,
             std::vector<std::size_t> modeled_seats, std::uint64_t seed)
    : config_(config), space_(std::move(space)) {
  config_.Validate();
  if (seat >= space_.num_agents()) {
    Fail(ErrorCode::kOutOfRange, "seat " + std::to_string(seat) + " outside the team");
  }
  for (std::size_t s : modeled_seats) {
    if (s >= space_.num_agents() || s == seat) {
      Fail(ErrorCode::kInvalidArgument, "modelled seats must be other members of the team");
    }
  }
  switch (config_.strategy) {
    case Strategy::kPaFollower:
      if (space_.num_agents() != 2 || modeled_seats.size() != 1) {
        Fail(ErrorCode::kInvalidArgument, "PA_FOLLOWER models exactly one partner in a two-agent team");
      }
      break;
    case Strategy::kPaRankK:
      if (space_.num_agents() < 2) Fail(ErrorCode::kInvalidArgument, "PA_RANK_K needs N >= 2");
      if (config_.rank > space_.num_agents()) {
        Fail(ErrorCode::kInvalidArgument, "rank " + std::to_string(config_.rank) +
                                              " is malformed for " +
                                              std::to_string(space_.num_agents()) + " agents");
      }
      if (modeled_seats.size() != config_.rank - 1) {
        Fail(ErrorCode::kInvalidArgument, "rank k must model exactly k - 1 higher-ranked seats");
      }
      break;
    default:
      if (!modeled_seats.empty()) {
        Fail(ErrorCode::kInvalidArgument,
             std::string(StrategyName(config_.strategy)) + " does not model partners");
      }
  }

  state_.seat = seat;
  state_.stats.assign(config_.strategy == Strategy::kVeryNaiveUcb
                          ? space_.size(seat)
                          : static_cast<std::size_t>(space_.num_cells()),
                      ArmStats{});
  for (std::size_t s : modeled_seats) {
    state_.histograms.emplace_back(space_.size(s), config_.window);
  }
  state_.modeled_seats = std::move(modeled_seats);
  if (config_.UsesPosterior()) {
    state_.posteriors.assign(static_cast<std::size_t>(space_.num_cells()), BetaPosterior{});
  }
  state_.tie_rng = RngStream(DeriveSeed(seed, Stream::kTieBreak, seat));
  state_.prediction_rng = RngStream(DeriveSeed(seed, Stream::kPrediction, seat));
  state_.posterior_rng = RngStream(DeriveSeed(seed, Stream::kPosterior, seat));
}

ActionIndex Agent::Act(std::uint64_t t) {
  if (t < 1) Fail(ErrorCode::kInvalidArgument, "steps are numbered from 1");
  state_.predictions.clear();
  ActionIndex action = 0;
  switch (config_.strategy) {
    case Strategy::kPaLeader: action = PaLeaderAct(state_, config_, space_, t); break;
    case Strategy::kPaFollower: action = PaFollowerAct(state_, config_, space_, t); break;
    case Strategy::kPaRankK: action = PaRankKAct(state_, config_, space_, t); break;
    case Strategy::kNaiveUcb: action = NaiveUcbAct(state_, config_, space_, t); break;
    case Strategy::kVeryNaiveUcb: action = VeryNaiveUcbAct(state_, config_, space_, t); break;
    case Strategy::kNaiveThompson: action = NaiveThompsonAct(state_, space_); break;
    case Strategy::kKgLeader: action = KgLeaderAct(state_, space_, t, config_.horizon); break;
  }
  state_.pending_action = action;
  return action;
}

void Agent::Observe(CellIndex team_action, double own_reward) {
  AgentObserve(state_, config_, space_, team_action, own_reward);
}

}  // namespace pab
