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

#include "pab/runner/episode.hpp"

#include <algorithm>
#include <string>

#include "pab/agents/roles.hpp"
#include "pab/core/error.hpp"

namespace pab {

std::optional<ActionIndex> RunTrace::prediction(std::size_t step, std::size_t agent,
                                                std::size_t seat) const {
  const std::size_t n = num_agents();
  const std::int64_t value = predictions.at((step * n + agent) * n + seat);
  if (value < 0) return std::nullopt;
  return static_cast<ActionIndex>(value);
}

std::vector<std::size_t> ModeledSeats(const AgentConfig& agent, std::size_t seat,
                                      std::span<const std::size_t> order,
                                      std::size_t num_agents) {
  if (agent.strategy == Strategy::kPaFollower) {
    if (num_agents != 2) Fail(ErrorCode::kIncompatible, "PA_FOLLOWER needs exactly two agents");
    return {1 - seat};
  }
  if (agent.strategy != Strategy::kPaRankK) return {};
  const auto pos = std::find(order.begin(), order.end(), seat);
  if (pos == order.end()) Fail(ErrorCode::kInvalidArgument, "seat missing from the rank order");
  return std::vector<std::size_t>(order.begin(), pos);
}

Episode::Episode(const ExperimentConfig& config, std::uint64_t seed)
    : Episode(config, config.instance.Build(seed), seed) {}

Episode::Episode(const ExperimentConfig& config, RewardModel model, std::uint64_t seed)
    : model_(std::move(model)),
      seed_(seed),
      horizon_(config.horizon),
      warm_start_(config.warm_start),
      sampler_(seed, model_.num_agents()) {
  Build(config);
}

void Episode::Build(const ExperimentConfig& config) {
  config.Validate();
  model_.Validate();
  const std::size_t n = model_.num_agents();
  if (config.seats.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "seat count does not match the instance");
  }

  if (n == 1) {
    role_order_ = {0};
  } else if (model_.variant == Variant::kGaussian) {
    role_order_ = AssignRolesByNoise(model_.noise_stds);
  } else {
    std::vector<std::optional<double>> known(n);
    if (config.observability_known) {
      for (std::size_t i = 0; i < n; ++i) known[i] = model_.observabilities[i];
    }
    RngStream roles_rng(DeriveSeed(seed_, Stream::kRoles));
    role_order_ = AssignRoles(known, roles_rng);
  }
  const std::vector<std::size_t> ranks = RanksFromOrder(role_order_);

  auto make_agent = [&](AgentConfig cfg, std::size_t seat, std::uint64_t seed) {
    cfg.horizon = horizon_;
    if (cfg.strategy == Strategy::kPaRankK) cfg.rank = ranks[seat];
    return Agent(cfg, model_.space, seat, ModeledSeats(cfg, seat, role_order_, n), seed);
  };
  agents_.clear();
  for (std::size_t seat = 0; seat < n; ++seat) {
    if (config.seats[seat].agent) {
      agents_.emplace_back(make_agent(*config.seats[seat].agent, seat, seed_));
    } else {
      agents_.emplace_back(std::nullopt);
    }
  }
  if (warm_start_ && warm_start_->steps > 0) {
    substitute_ = make_agent(warm_start_->substitute, warm_start_->seat,
                             DeriveSeed(seed_, Stream::kSubstitute));
  }

  committed_.assign(n, std::nullopt);
  observed_scratch_.assign(n, 0.0);
  trace_.seed = seed_;
  trace_.space = model_.space;
  trace_.warm_start_steps = warm_start_ ? warm_start_->steps : 0;
  trace_.cells.reserve(horizon_);
  trace_.true_rewards.reserve(horizon_);
  trace_.observed.reserve(horizon_ * n);
  trace_.predictions.reserve(horizon_ * n * n);
}

Agent* Episode::Controller(std::size_t seat, std::uint64_t t) {
  if (substitute_ && seat == warm_start_->seat && t <= warm_start_->steps) return &*substitute_;
  return agents_[seat] ? &*agents_[seat] : nullptr;
}

bool Episode::IsExternal(std::size_t seat) const {
  return const_cast<Episode*>(this)->Controller(seat, completed_steps() + 1) == nullptr;
}

const Agent* Episode::agent(std::size_t seat) const {
  return agents_.at(seat) ? &*agents_[seat] : nullptr;
}

std::span<const std::optional<ActionIndex>> Episode::Commit() {
  if (finished()) Fail(ErrorCode::kBudgetExhausted, "budget exhausted");
  if (!has_commit_) {
    const std::uint64_t t = completed_steps() + 1;
    for (std::size_t seat = 0; seat < agents_.size(); ++seat) {
      Agent* controller = Controller(seat, t);
      committed_[seat] = controller ? std::optional<ActionIndex>(controller->Act(t)) : std::nullopt;
    }
    has_commit_ = true;
  }
  return committed_;
}

StepOutcome Episode::Resolve(std::span<const std::optional<ActionIndex>> external) {
  Commit();
  const std::size_t n = agents_.size();
  if (external.size() != n) Fail(ErrorCode::kInvalidArgument, "one entry per seat expected");
  const std::uint64_t t = completed_steps() + 1;
  const ActionSpace& space = model_.space;

  CellIndex cell = 0;
  for (std::size_t seat = 0; seat < n; ++seat) {
    ActionIndex action;
    if (committed_[seat]) {
      if (external[seat]) {
        Fail(ErrorCode::kInvalidArgument, "seat " + std::to_string(seat) + " is agent-driven");
      }
      action = *committed_[seat];
    } else {
      if (!external[seat]) {
        Fail(ErrorCode::kInvalidArgument, "missing action for external seat " + std::to_string(seat));
      }
      action = *external[seat];
      if (action >= space.size(seat)) {
        Fail(ErrorCode::kOutOfRange, "action " + std::to_string(action) + " out of range for seat " +
                                         std::to_string(seat));
      }
    }
    cell += action * space.stride(seat);
  }

  const double true_reward = sampler_.Sample(model_, cell, observed_scratch_);

  trace_.cells.push_back(cell);
  trace_.true_rewards.push_back(true_reward);
  trace_.observed.insert(trace_.observed.end(), observed_scratch_.begin(), observed_scratch_.end());
  const std::size_t base = trace_.predictions.size();
  trace_.predictions.resize(base + n * n, -1);
  for (std::size_t seat = 0; seat < n; ++seat) {
    Agent* controller = Controller(seat, t);
    if (!controller) continue;
    const auto& modeled = controller->state().modeled_seats;
    const auto predictions = controller->predictions();
    for (std::size_t k = 0; k < predictions.size(); ++k) {
      trace_.predictions[base + seat * n + modeled[k]] = static_cast<std::int64_t>(predictions[k]);
    }
  }

  // Every agent sees only its own channel and the team action. The seat's
  // own agent also learns from warm-start steps played by the substitute.
  for (std::size_t seat = 0; seat < n; ++seat) {
    if (agents_[seat]) agents_[seat]->Observe(cell, observed_scratch_[seat]);
    if (substitute_ && seat == warm_start_->seat && t <= warm_start_->steps) {
      substitute_->Observe(cell, observed_scratch_[seat]);
    }
  }
  has_commit_ = false;
  return StepOutcome{t, cell, true_reward, observed_scratch_};
}

Episode PlayEpisode(const ExperimentConfig& config, std::uint64_t seed) {
  config.ValidateScripts();
  Episode episode(config, seed);
  const std::size_t n = config.seats.size();
  const std::uint64_t warm = config.warm_start ? config.warm_start->steps : 0;
  std::vector<std::optional<ActionIndex>> external(n);
  while (!episode.finished()) {
    const std::uint64_t t = episode.completed_steps() + 1;
    for (std::size_t seat = 0; seat < n; ++seat) {
      external[seat].reset();
      if (!episode.IsExternal(seat)) continue;
      const std::uint64_t offset = config.warm_start && config.warm_start->seat == seat ? warm : 0;
      external[seat] = config.seats[seat].script.at(t - 1 - offset);
    }
    episode.Resolve(external);
  }
  return episode;
}

RunTrace RunEpisode(const ExperimentConfig& config, std::uint64_t seed) {
  return PlayEpisode(config, seed).trace();
}

}  // namespace pab
