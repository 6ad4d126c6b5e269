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
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pab/runner/episode.hpp"

namespace pab {

inline constexpr int kSessionFormatVersion = 1;

enum class SessionKind { kCasino, kBurger };

std::string_view SessionKindName(SessionKind kind);
SessionKind ParseSessionKind(std::string_view name);

// The human always sits at seat 0 as leader with p = 1; the agent sits at
// seat 1. Means are drawn Uniform[0,1] from the session seed.
struct SessionConfig {
  SessionKind kind = SessionKind::kCasino;
  std::vector<std::size_t> shape = {2, 2};
  std::uint64_t horizon = 1000;           // human moves
  std::uint64_t warm_start_steps = 0;     // played by `substitute` before the human
  AgentConfig agent;
  AgentConfig substitute;
  double agent_observability = 0.4;
  std::uint64_t seed = 0;

  void Validate() const;
  // The equivalent batch configuration: seat 0 external, one run.
  ExperimentConfig ToExperiment() const;
};

SessionConfig CasinoDefaults();
SessionConfig BurgerDefaults();

nlohmann::json SessionConfigToJson(const SessionConfig& config);
// Missing fields take the defaults of the requested kind. The seed is
// optional; `default_seed` fills it in.
SessionConfig SessionConfigFromJson(const nlohmann::json& json, std::uint64_t default_seed);

struct Tally {
  std::uint64_t lucky = 0;
  std::uint64_t unlucky = 0;
  friend bool operator==(const Tally&, const Tally&) = default;
};

// What the human may see. Only human observations feed the tallies.
struct SessionState {
  std::string id;
  std::uint64_t step = 0;  // human moves so far
  std::uint64_t horizon = 0;
  std::uint64_t budget_remaining = 0;
  std::uint64_t warm_start_steps = 0;
  std::vector<std::size_t> shape;
  std::vector<Tally> tallies;  // per team action, row-major
  std::optional<TeamAction> last_team_action;
  std::optional<double> last_outcome;
  bool terminal = false;
  bool closed = false;
  friend bool operator==(const SessionState&, const SessionState&) = default;
};

struct ActResult {
  ActionIndex agent_action = 0;
  TeamAction team_action;
  double observed_reward = 0.0;
  std::uint64_t seq = 0;
  SessionState state;
};

struct SessionSummary {
  std::uint64_t coins = 0;
  double pseudo_regret = 0.0;  // over the human's moves
  std::uint64_t steps = 0;
  std::vector<Tally> tallies;
};

// One live game. All members lock, so a Session may be shared between
// request threads.
class Session {
 public:
  Session(std::string id, const SessionConfig& config);

  const std::string& id() const noexcept { return id_; }
  const SessionConfig& config() const noexcept { return config_; }

  // `seq` must be the next step number (step + 1). Throws kGone when the
  // budget is spent or the session is closed, kConflict on a stale seq and
  // kOutOfRange on a bad action.
  // `on_commit` runs under the session lock once the step is applied.
  ActResult Act(ActionIndex action, std::uint64_t seq,
                const std::function<void(const ActResult&)>& on_commit = {});
  SessionState State() const;
  RunTrace Trace() const;
  SessionSummary Summary() const;
  // Idempotent.
  SessionSummary Close();

 private:
  SessionState StateLocked() const;
  SessionSummary SummaryLocked() const;

  mutable std::mutex mutex_;
  std::string id_;
  SessionConfig config_;
  Episode episode_;
  std::vector<Tally> tallies_;
  bool closed_ = false;
};

nlohmann::json TeamActionToJson(const TeamAction& action);
nlohmann::json StateToJson(const SessionState& state);
nlohmann::json SummaryToJson(const SessionSummary& summary, const ActionSpace& space);
// Human-facing trace: team actions, the human's observations and a warm-start
// flag per step. Agent observations and predictions are left out.
nlohmann::json PublicTraceToJson(const RunTrace& trace);

}  // namespace pab
