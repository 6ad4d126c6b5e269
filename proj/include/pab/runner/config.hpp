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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pab/agents/agent.hpp"
#include "pab/env/presets.hpp"
#include "pab/env/reward_model.hpp"

namespace pab {

inline constexpr int kConfigFormatVersion = 1;

enum class InstanceKind { kFixed2x2, kKLocalOptima, kTwoOptimaTeam, kRandom, kExplicit };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kFixed2x2;
  std::size_t k = 2;                         // kKLocalOptima
  std::size_t num_agents = 2;                // kTwoOptimaTeam
  std::vector<std::size_t> shape = {2, 2};   // kRandom
  RandomPresetOptions random;                // kRandom
  std::optional<RewardModel> model;          // kExplicit
  // Overrides applied to the fixed presets.
  std::optional<std::vector<double>> observabilities;
  std::optional<Variant> variant;            // masked_bernoulli <-> flipped

  std::size_t NumAgents() const;
  // The instance of one run. Random kinds draw from the kInstance substream
  // of `run_seed`; the others ignore it.
  RewardModel Build(std::uint64_t run_seed) const;
};

// A seat is driven by an agent, or externally (a human, or a fixed script in
// batch runs).
struct SeatSpec {
  std::optional<AgentConfig> agent;
  std::vector<ActionIndex> script;
};

// The first `steps` steps of `seat` are played by `substitute`; the seat's own
// agent observes those steps and then takes over with what it learned.
struct WarmStart {
  std::uint64_t steps = 0;
  std::size_t seat = 0;
  AgentConfig substitute;
};

struct ExperimentConfig {
  std::string label;
  InstanceSpec instance;
  std::vector<SeatSpec> seats;
  std::uint64_t horizon = 10000;
  std::uint64_t runs = 100;
  std::uint64_t seed = 0;
  // false: PA_RANK_K roles are a random permutation per run.
  bool observability_known = true;
  std::optional<WarmStart> warm_start;

  // Throws kInvalidArgument / kIncompatible before any step is played.
  void Validate() const;
  // Batch runs only: every external seat needs a script covering its moves.
  void ValidateScripts() const;
};

nlohmann::json AgentConfigToJson(const AgentConfig& config);
AgentConfig AgentConfigFromJson(const nlohmann::json& json);
nlohmann::json ConfigToJson(const ExperimentConfig& config);
ExperimentConfig ConfigFromJson(const nlohmann::json& json);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

}  // namespace pab
