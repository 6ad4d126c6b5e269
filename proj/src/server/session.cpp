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

#include "pab/server/session.hpp"

#include <set>

#include "pab/core/error.hpp"
#include "pab/runner/regret.hpp"

namespace pab {
namespace {

using nlohmann::json;

AgentConfig Follower(std::size_t window) {
  AgentConfig agent;
  agent.strategy = Strategy::kPaFollower;
  agent.c = 0.01;
  agent.window = window;
  return agent;
}

}  // namespace

json TeamActionToJson(const TeamAction& action) {
  const auto coords = action.coords();
  return json(std::vector<ActionIndex>(coords.begin(), coords.end()));
}

namespace {

json TalliesToJson(const std::vector<Tally>& tallies, const ActionSpace& space) {
  json out = json::array();
  for (CellIndex cell = 0; cell < tallies.size(); ++cell) {
    out.push_back({{"team_action", TeamActionToJson(space.Unflatten(cell))},
                   {"lucky", tallies[cell].lucky},
                   {"unlucky", tallies[cell].unlucky}});
  }
  return out;
}

}  // namespace

std::string_view SessionKindName(SessionKind kind) {
  return kind == SessionKind::kCasino ? "casino" : "burger";
}

SessionKind ParseSessionKind(std::string_view name) {
  if (name == "casino") return SessionKind::kCasino;
  if (name == "burger") return SessionKind::kBurger;
  Fail(ErrorCode::kInvalidArgument, "unknown session kind '" + std::string(name) + "'");
}

SessionConfig CasinoDefaults() {
  SessionConfig config;
  config.kind = SessionKind::kCasino;
  config.horizon = 1000;
  config.agent = Follower(5);
  config.substitute.strategy = Strategy::kNaiveUcb;
  config.substitute.c = 0.01;
  config.agent_observability = 0.4;
  return config;
}

SessionConfig BurgerDefaults() {
  SessionConfig config = CasinoDefaults();
  config.kind = SessionKind::kBurger;
  config.horizon = 20;
  config.warm_start_steps = 20;
  config.agent = Follower(2);
  config.agent_observability = 0.5;
  return config;
}

void SessionConfig::Validate() const {
  if (shape.size() != 2) Fail(ErrorCode::kInvalidArgument, "sessions have exactly two seats");
  if (horizon < 1) Fail(ErrorCode::kInvalidArgument, "horizon must be at least 1");
  switch (agent.strategy) {
    case Strategy::kPaFollower:
    case Strategy::kNaiveUcb:
    case Strategy::kVeryNaiveUcb:
    case Strategy::kNaiveThompson:
      break;
    default:
      Fail(ErrorCode::kIncompatible, "the agent seat follows the human; " +
                                         std::string(StrategyName(agent.strategy)) +
                                         " cannot take it");
  }
  if (!(agent_observability > 0.0 && agent_observability <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "agent observability must lie in (0, 1]");
  }
  ToExperiment().Validate();
}

ExperimentConfig SessionConfig::ToExperiment() const {
  ExperimentConfig out;
  out.label = std::string(SessionKindName(kind));
  out.instance.kind = InstanceKind::kRandom;
  out.instance.shape = shape;
  out.instance.random.observabilities = {1.0, agent_observability};
  out.seats = {SeatSpec{std::nullopt, {}}, SeatSpec{agent, {}}};
  out.horizon = warm_start_steps + horizon;
  out.runs = 1;
  out.seed = seed;
  if (warm_start_steps > 0) out.warm_start = WarmStart{warm_start_steps, 0, substitute};
  return out;
}

json SessionConfigToJson(const SessionConfig& config) {
  return {{"kind", std::string(SessionKindName(config.kind))},
          {"shape", config.shape},
          {"horizon", config.horizon},
          {"warm_start_steps", config.warm_start_steps},
          {"agent", AgentConfigToJson(config.agent)},
          {"substitute", AgentConfigToJson(config.substitute)},
          {"agent_observability", config.agent_observability},
          {"seed", config.seed}};
}

SessionConfig SessionConfigFromJson(const json& in, std::uint64_t default_seed) {
  if (!in.is_object()) Fail(ErrorCode::kInvalidArgument, "session config must be an object");
  static const std::set<std::string> kKeys = {"v",     "kind",       "shape",
                                              "horizon", "warm_start_steps", "agent",
                                              "substitute", "agent_observability", "seed"};
  for (const auto& item : in.items()) {
    if (!kKeys.count(item.key())) {
      Fail(ErrorCode::kInvalidArgument, "unknown session field '" + item.key() + "'");
    }
  }
  try {
    const SessionKind kind = ParseSessionKind(in.value("kind", std::string("casino")));
    SessionConfig config = kind == SessionKind::kCasino ? CasinoDefaults() : BurgerDefaults();
    if (in.contains("shape")) config.shape = in.at("shape").get<std::vector<std::size_t>>();
    config.horizon = in.value("horizon", config.horizon);
    config.warm_start_steps = in.value("warm_start_steps", config.warm_start_steps);
    if (in.contains("agent")) config.agent = AgentConfigFromJson(in.at("agent"));
    if (in.contains("substitute")) config.substitute = AgentConfigFromJson(in.at("substitute"));
    config.agent_observability = in.value("agent_observability", config.agent_observability);
    config.seed = in.value("seed", default_seed);
    return config;
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("bad session config: ") + e.what());
  }
}

Session::Session(std::string id, const SessionConfig& config)
    : id_(std::move(id)),
      config_((config.Validate(), config)),
      episode_(config.ToExperiment(), config.seed),
      tallies_(episode_.model().space.num_cells()) {
  const std::vector<std::optional<ActionIndex>> none(2);
  while (episode_.completed_steps() < config_.warm_start_steps) episode_.Resolve(none);
  // The agent's move for the human's first step is fixed before any request.
  episode_.Commit();
}

ActResult Session::Act(ActionIndex action, std::uint64_t seq,
                       const std::function<void(const ActResult&)>& on_commit) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (closed_) Fail(ErrorCode::kGone, "session closed");
  if (episode_.finished()) Fail(ErrorCode::kGone, "budget exhausted");
  const std::uint64_t step = episode_.completed_steps() - config_.warm_start_steps;
  if (seq != step + 1) {
    Fail(ErrorCode::kConflict,
         "stale seq " + std::to_string(seq) + ", expected " + std::to_string(step + 1));
  }
  const ActionSpace& space = episode_.model().space;
  if (action >= space.size(0)) {
    Fail(ErrorCode::kOutOfRange, "action " + std::to_string(action) + " out of range");
  }

  const ActionIndex agent_action = *episode_.Commit()[1];
  const std::optional<ActionIndex> human[2] = {action, std::nullopt};
  const StepOutcome outcome = episode_.Resolve(human);
  const double seen = outcome.observed[0];
  Tally& tally = tallies_[outcome.cell];
  (seen > 0.5 ? tally.lucky : tally.unlucky) += 1;
  if (!episode_.finished()) episode_.Commit();

  ActResult result;
  result.agent_action = agent_action;
  result.team_action = space.Unflatten(outcome.cell);
  result.observed_reward = seen;
  result.seq = seq;
  result.state = StateLocked();
  if (on_commit) on_commit(result);
  return result;
}

SessionState Session::StateLocked() const {
  SessionState state;
  state.id = id_;
  state.warm_start_steps = config_.warm_start_steps;
  state.horizon = config_.horizon;
  state.shape = config_.shape;
  state.step = episode_.completed_steps() - config_.warm_start_steps;
  state.budget_remaining = state.horizon - state.step;
  state.tallies = tallies_;
  if (state.step > 0) {
    const RunTrace& trace = episode_.trace();
    const std::size_t last = trace.length() - 1;
    state.last_team_action = trace.team_action(last);
    state.last_outcome = trace.observed_reward(last, 0);
  }
  state.terminal = episode_.finished();
  state.closed = closed_;
  return state;
}

SessionSummary Session::SummaryLocked() const {
  SessionSummary summary;
  const RunTrace& trace = episode_.trace();
  const RegretCurve curve = PseudoRegret(trace, episode_.model());
  const std::size_t warm = config_.warm_start_steps;
  for (std::size_t t = warm; t < trace.length(); ++t) {
    if (trace.true_rewards[t] == 1.0) ++summary.coins;
  }
  summary.steps = trace.length() - warm;
  if (trace.length() > warm) {
    summary.pseudo_regret = curve.back() - (warm > 0 ? curve[warm - 1] : 0.0);
  }
  summary.tallies = tallies_;
  return summary;
}

SessionState Session::State() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return StateLocked();
}

RunTrace Session::Trace() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return episode_.trace();
}

SessionSummary Session::Summary() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return SummaryLocked();
}

SessionSummary Session::Close() {
  std::lock_guard<std::mutex> lock(mutex_);
  closed_ = true;
  return SummaryLocked();
}

json StateToJson(const SessionState& state) {
  json out = {{"id", state.id},
              {"step", state.step},
              {"horizon", state.horizon},
              {"budget_remaining", state.budget_remaining},
              {"warm_start_steps", state.warm_start_steps},
              {"shape", state.shape},
              {"tallies", TalliesToJson(state.tallies, ActionSpace(state.shape))},
              {"terminal", state.terminal},
              {"closed", state.closed}};
  out["last_team_action"] =
      state.last_team_action ? TeamActionToJson(*state.last_team_action) : json(nullptr);
  out["last_outcome"] = state.last_outcome ? json(*state.last_outcome) : json(nullptr);
  return out;
}

json SummaryToJson(const SessionSummary& summary, const ActionSpace& space) {
  return {{"coins", summary.coins},
          {"pseudo_regret", summary.pseudo_regret},
          {"steps", summary.steps},
          {"tallies", TalliesToJson(summary.tallies, space)}};
}

json PublicTraceToJson(const RunTrace& trace) {
  json steps = json::array();
  for (std::size_t t = 0; t < trace.length(); ++t) {
    steps.push_back({{"step", t + 1},
                     {"team_action", TeamActionToJson(trace.team_action(t))},
                     {"reward", trace.observed_reward(t, 0)},
                     {"warm_start", t < trace.warm_start_steps}});
  }
  return {{"shape", trace.space.sizes()},
          {"warm_start_steps", trace.warm_start_steps},
          {"steps", std::move(steps)}};
}

}  // namespace pab
