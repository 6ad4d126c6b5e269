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

#include "pab/runner/config.hpp"

#include <fstream>
#include <string>

#include "pab/core/error.hpp"
#include "pab/env/instance_io.hpp"

namespace pab {

using nlohmann::json;

namespace {

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kFixed2x2: return "fixed_2x2";
    case InstanceKind::kKLocalOptima: return "k_local_optima";
    case InstanceKind::kTwoOptimaTeam: return "two_optima_team";
    case InstanceKind::kRandom: return "random";
    case InstanceKind::kExplicit: return "explicit";
  }
  return "fixed_2x2";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  for (InstanceKind kind : {InstanceKind::kFixed2x2, InstanceKind::kKLocalOptima,
                            InstanceKind::kTwoOptimaTeam, InstanceKind::kRandom,
                            InstanceKind::kExplicit}) {
    if (InstanceKindName(kind) == name) return kind;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown instance preset '" + std::string(name) + "'");
}

json InstanceSpecToJson(const InstanceSpec& spec) {
  json out;
  out["preset"] = std::string(InstanceKindName(spec.kind));
  switch (spec.kind) {
    case InstanceKind::kKLocalOptima: out["K"] = spec.k; break;
    case InstanceKind::kTwoOptimaTeam: out["N"] = spec.num_agents; break;
    case InstanceKind::kRandom:
      out["shape"] = spec.shape;
      out["variant"] = std::string(VariantName(spec.random.variant));
      out["flip_reading"] = std::string(FlipReadingName(spec.random.flip_reading));
      if (!spec.random.observabilities.empty()) out["observabilities"] = spec.random.observabilities;
      if (!spec.random.noise_stds.empty()) out["noise_stds"] = spec.random.noise_stds;
      break;
    case InstanceKind::kExplicit: out["model"] = ModelToJson(*spec.model); break;
    case InstanceKind::kFixed2x2: break;
  }
  if (spec.kind != InstanceKind::kRandom) {
    if (spec.observabilities) out["observabilities"] = *spec.observabilities;
    if (spec.variant) out["variant"] = std::string(VariantName(*spec.variant));
  }
  return out;
}

InstanceSpec InstanceSpecFromJson(const json& in) {
  InstanceSpec spec;
  if (in.contains("file")) {
    spec.kind = InstanceKind::kExplicit;
    spec.model = LoadModel(in.at("file").get<std::string>());
    return spec;
  }
  if (in.contains("means")) {  // inline instance document
    spec.kind = InstanceKind::kExplicit;
    spec.model = ModelFromJson(in);
    return spec;
  }
  spec.kind = ParseInstanceKind(in.value("preset", std::string("fixed_2x2")));
  switch (spec.kind) {
    case InstanceKind::kKLocalOptima: spec.k = in.at("K").get<std::size_t>(); break;
    case InstanceKind::kTwoOptimaTeam: spec.num_agents = in.at("N").get<std::size_t>(); break;
    case InstanceKind::kRandom:
      spec.shape = in.value("shape", std::vector<std::size_t>{2, 2});
      spec.random.variant = ParseVariant(in.value("variant", std::string("masked_bernoulli")));
      spec.random.flip_reading =
          ParseFlipReading(in.value("flip_reading", std::string("fail_reads_one")));
      spec.random.observabilities = in.value("observabilities", std::vector<double>{});
      spec.random.noise_stds = in.value("noise_stds", std::vector<double>{});
      break;
    case InstanceKind::kExplicit: spec.model = ModelFromJson(in.at("model")); break;
    case InstanceKind::kFixed2x2: break;
  }
  if (spec.kind != InstanceKind::kRandom) {
    if (in.contains("observabilities")) {
      spec.observabilities = in.at("observabilities").get<std::vector<double>>();
    }
    if (in.contains("variant")) spec.variant = ParseVariant(in.at("variant").get<std::string>());
  }
  return spec;
}

bool BernoulliOnly(Strategy s) { return s == Strategy::kNaiveThompson || s == Strategy::kKgLeader; }

void CheckCompatible(const AgentConfig& agent, Variant variant) {
  if (agent.strategy == Strategy::kNaiveThompson && variant != Variant::kMaskedBernoulli) {
    Fail(ErrorCode::kIncompatible, "NAIVE_THOMPSON is only defined for the masked Bernoulli variant");
  }
  if (BernoulliOnly(agent.strategy) && variant == Variant::kGaussian) {
    Fail(ErrorCode::kIncompatible,
         std::string(StrategyName(agent.strategy)) + " needs Bernoulli rewards");
  }
}

}  // namespace

std::size_t InstanceSpec::NumAgents() const {
  switch (kind) {
    case InstanceKind::kFixed2x2:
    case InstanceKind::kKLocalOptima: return 2;
    case InstanceKind::kTwoOptimaTeam: return num_agents;
    case InstanceKind::kRandom: return shape.size();
    case InstanceKind::kExplicit: return model ? model->num_agents() : 0;
  }
  return 0;
}

RewardModel InstanceSpec::Build(std::uint64_t run_seed) const {
  RewardModel built;
  switch (kind) {
    case InstanceKind::kFixed2x2: built = PresetFixed2x2().model; break;
    case InstanceKind::kKLocalOptima: built = PresetKLocalOptima(k).model; break;
    case InstanceKind::kTwoOptimaTeam: built = PresetTwoOptimaTeam(num_agents).model; break;
    case InstanceKind::kRandom: {
      RngStream rng(DeriveSeed(run_seed, Stream::kInstance));
      return PresetRandom(ActionSpace(shape), rng, random).model;
    }
    case InstanceKind::kExplicit:
      if (!this->model) Fail(ErrorCode::kInvalidArgument, "explicit instance without a model");
      return *this->model;
  }
  if (observabilities) built.observabilities = *observabilities;
  if (variant) {
    if (*variant == Variant::kGaussian) {
      Fail(ErrorCode::kInvalidArgument, "fixed presets are Bernoulli; use a random gaussian instance");
    }
    built.variant = *variant;
  }
  built.Validate();
  return built;
}

void ExperimentConfig::Validate() const {
  if (horizon < 1) Fail(ErrorCode::kInvalidArgument, "horizon T must be at least 1");
  if (runs < 1) Fail(ErrorCode::kInvalidArgument, "run count R must be at least 1");
  const std::size_t n = instance.NumAgents();
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "instance has no agents");
  if (seats.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "config lists " + std::to_string(seats.size()) +
                                          " seats for a " + std::to_string(n) + "-agent instance");
  }
  const Variant variant = instance.kind == InstanceKind::kRandom ? instance.random.variant
                          : instance.kind == InstanceKind::kExplicit && instance.model
                              ? instance.model->variant
                              : instance.variant.value_or(Variant::kMaskedBernoulli);
  for (std::size_t s = 0; s < seats.size(); ++s) {
    if (seats[s].agent) {
      AgentConfig agent = *seats[s].agent;
      agent.horizon = horizon;
      agent.Validate();
      CheckCompatible(agent, variant);
      if (agent.strategy == Strategy::kPaFollower && n != 2) {
        Fail(ErrorCode::kIncompatible, "PA_FOLLOWER is a two-agent strategy; use PA_RANK_K");
      }
    }
  }
  if (warm_start) {
    if (warm_start->seat >= n) Fail(ErrorCode::kInvalidArgument, "warm-start seat out of range");
    if (warm_start->steps > horizon) {
      Fail(ErrorCode::kInvalidArgument, "warm start longer than the horizon");
    }
    AgentConfig sub = warm_start->substitute;
    sub.horizon = horizon;
    sub.Validate();
    CheckCompatible(sub, variant);
  }
}

void ExperimentConfig::ValidateScripts() const {
  for (std::size_t s = 0; s < seats.size(); ++s) {
    if (seats[s].agent) continue;
    const std::uint64_t warm = warm_start && warm_start->seat == s ? warm_start->steps : 0;
    if (seats[s].script.size() + warm < horizon) {
      Fail(ErrorCode::kInvalidArgument, "external seat " + std::to_string(s) +
                                            " needs a script of length " +
                                            std::to_string(horizon - warm));
    }
  }
}

json AgentConfigToJson(const AgentConfig& config) {
  json out;
  out["strategy"] = std::string(StrategyName(config.strategy));
  out["c"] = config.c;
  out["delta_mode"] = std::string(DeltaModeName(config.delta_mode));
  if (config.delta_mode == DeltaMode::kFixed) out["delta"] = config.delta;
  out["W"] = config.window;
  out["L"] = config.repeat;
  return out;
}

AgentConfig AgentConfigFromJson(const json& in) {
  AgentConfig config;
  config.strategy = ParseStrategy(in.at("strategy").get<std::string>());
  config.c = in.value("c", config.c);
  if (in.contains("delta")) {
    config.delta_mode = DeltaMode::kFixed;
    config.delta = in.at("delta").get<double>();
  }
  if (in.contains("delta_mode")) {
    config.delta_mode = ParseDeltaMode(in.at("delta_mode").get<std::string>());
  }
  config.window = in.value("W", config.window);
  config.repeat = in.value("L", config.repeat);
  return config;
}

json ConfigToJson(const ExperimentConfig& config) {
  json out;
  out["v"] = kConfigFormatVersion;
  out["label"] = config.label;
  out["instance"] = InstanceSpecToJson(config.instance);
  json seats = json::array();
  for (const SeatSpec& seat : config.seats) {
    if (seat.agent) {
      seats.push_back(AgentConfigToJson(*seat.agent));
    } else {
      seats.push_back(json{{"strategy", "EXTERNAL"}, {"script", seat.script}});
    }
  }
  out["agents"] = seats;
  out["horizon"] = config.horizon;
  out["runs"] = config.runs;
  out["seed"] = config.seed;
  out["observability_known"] = config.observability_known;
  if (config.warm_start) {
    out["warm_start"] = json{{"steps", config.warm_start->steps},
                             {"seat", config.warm_start->seat},
                             {"substitute", AgentConfigToJson(config.warm_start->substitute)}};
  }
  return out;
}

ExperimentConfig ConfigFromJson(const json& in) {
  try {
    if (!in.is_object()) Fail(ErrorCode::kParse, "config must be a JSON object");
    const int version = in.value("v", kConfigFormatVersion);
    if (version != kConfigFormatVersion) {
      Fail(ErrorCode::kParse, "unsupported config format version " + std::to_string(version));
    }
    ExperimentConfig config;
    config.label = in.value("label", std::string());
    config.instance = InstanceSpecFromJson(in.value("instance", json::object()));
    for (const json& seat : in.at("agents")) {
      SeatSpec spec;
      if (seat.value("strategy", std::string()) == "EXTERNAL") {
        spec.script = seat.value("script", std::vector<ActionIndex>{});
      } else {
        spec.agent = AgentConfigFromJson(seat);
      }
      config.seats.push_back(std::move(spec));
    }
    config.horizon = in.value("horizon", config.horizon);
    config.runs = in.value("runs", config.runs);
    config.seed = in.value("seed", config.seed);
    config.observability_known = in.value("observability_known", true);
    if (in.contains("warm_start") && !in.at("warm_start").is_null()) {
      const json& ws = in.at("warm_start");
      WarmStart warm;
      warm.steps = ws.at("steps").get<std::uint64_t>();
      warm.seat = ws.value("seat", std::size_t{0});
      warm.substitute = ws.contains("substitute") ? AgentConfigFromJson(ws.at("substitute"))
                                                  : AgentConfig{};
      config.warm_start = warm;
    }
    return config;
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed experiment config: ") + e.what());
  }
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open config '" + path.string() + "'");
  json parsed;
  try {
    parsed = json::parse(in);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  try {
    return ConfigFromJson(parsed);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace pab
