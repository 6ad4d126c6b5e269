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

#include "pab/runner/figures.hpp"

#include <array>
#include <string>
#include <utility>

#include "pab/core/error.hpp"

namespace pab {
namespace {

constexpr std::array<std::pair<FigureName, std::string_view>, 12> kFigureNames{{
    {FigureName::kLSweep, "L_sweep"},
    {FigureName::kWSweep, "W_sweep"},
    {FigureName::kAlgoComparisonFixed, "algo_comparison_fixed"},
    {FigureName::kAlgoComparisonRandom, "algo_comparison_random"},
    {FigureName::kP1Sweep, "p1_sweep"},
    {FigureName::kP2Sweep, "p2_sweep"},
    {FigureName::kActionCountSweep, "action_count_sweep"},
    {FigureName::kNAgentsSweep, "n_agents_sweep"},
    {FigureName::kFlipped, "flipped"},
    {FigureName::kGaussian, "gaussian"},
    {FigureName::kKgWSweep, "kg_W_sweep"},
    {FigureName::kVeryNaiveComparison, "very_naive_comparison"},
}};

constexpr double kDefaultC = 0.025;
constexpr std::size_t kPracticalWindow = 25;
constexpr std::array<std::size_t, 2> kLeaderFirst{0, 1};

std::string Format(double value) {
  std::string out = std::to_string(value);
  out.erase(out.find_last_not_of('0') + 1);
  if (out.back() == '.') out.pop_back();
  return out;
}

AgentConfig Make(Strategy strategy, double c = kDefaultC) {
  AgentConfig config;
  config.strategy = strategy;
  config.c = c;
  return config;
}

InstanceSpec RandomInstance(std::vector<std::size_t> shape, Variant variant) {
  InstanceSpec spec;
  spec.kind = InstanceKind::kRandom;
  spec.shape = std::move(shape);
  spec.random.variant = variant;
  return spec;
}

// PA-UCB against the two naive baselines on one instance.
std::vector<ExperimentConfig> Comparison(const InstanceSpec& instance, bool with_thompson,
                                         bool with_very_naive) {
  std::vector<ExperimentConfig> out;
  ExperimentConfig pa;
  pa.label = "PA-UCB";
  pa.instance = instance;
  pa.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, kPracticalWindow);
  out.push_back(pa);

  ExperimentConfig naive = pa;
  naive.label = "Naive UCB";
  naive.seats = SameStrategyTeam(2, Strategy::kNaiveUcb, kDefaultC);
  out.push_back(naive);
  if (with_thompson) {
    ExperimentConfig thompson = pa;
    thompson.label = "Naive Thompson";
    thompson.seats = SameStrategyTeam(2, Strategy::kNaiveThompson, kDefaultC);
    out.push_back(thompson);
  }
  if (with_very_naive) {
    ExperimentConfig very = pa;
    very.label = "Very Naive UCB";
    very.seats = SameStrategyTeam(2, Strategy::kVeryNaiveUcb, kDefaultC);
    out.push_back(very);
  }
  return out;
}

std::vector<ExperimentConfig> Series(FigureName name) {
  std::vector<ExperimentConfig> out;
  ExperimentConfig base;
  base.instance.kind = InstanceKind::kFixed2x2;

  switch (name) {
    case FigureName::kLSweep:
      for (std::size_t repeat : {1, 2, 4}) {
        ExperimentConfig config = base;
        config.label = "L=" + std::to_string(repeat);
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, repeat, 1);
        out.push_back(config);
      }
      break;
    case FigureName::kWSweep:
      for (std::size_t window : {1, 5, 25}) {
        ExperimentConfig config = base;
        config.label = "W=" + std::to_string(window);
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, window);
        out.push_back(config);
      }
      break;
    case FigureName::kAlgoComparisonFixed:
      return Comparison(base.instance, true, false);
    case FigureName::kAlgoComparisonRandom:
      return Comparison(RandomInstance({2, 2}, Variant::kMaskedBernoulli), true, false);
    case FigureName::kP1Sweep:
    case FigureName::kP2Sweep:
      for (double p : name == FigureName::kP1Sweep ? std::array{0.6, 0.8, 1.0}
                                                    : std::array{0.2, 0.5, 0.8}) {
        ExperimentConfig config = base;
        const bool leader = name == FigureName::kP1Sweep;
        config.label = (leader ? "p1=" : "p2=") + Format(p);
        config.instance.observabilities = leader ? std::vector{p, 0.5} : std::vector{1.0, p};
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, kPracticalWindow);
        out.push_back(config);
      }
      break;
    case FigureName::kActionCountSweep:
      for (std::size_t k : {2, 3, 4}) {
        ExperimentConfig config = base;
        config.label = "K=" + std::to_string(k);
        config.instance.kind = InstanceKind::kKLocalOptima;
        config.instance.k = k;
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, kPracticalWindow);
        out.push_back(config);
      }
      {
        ExperimentConfig config = base;
        config.label = "K=30 random";
        config.instance = RandomInstance({30, 30}, Variant::kMaskedBernoulli);
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, kPracticalWindow);
        out.push_back(config);
      }
      break;
    case FigureName::kNAgentsSweep:
      for (std::size_t n : {2, 3, 4}) {
        ExperimentConfig config = base;
        config.label = "N=" + std::to_string(n);
        config.instance.kind = InstanceKind::kTwoOptimaTeam;
        config.instance.num_agents = n;
        AgentConfig agent = Make(Strategy::kPaRankK);
        agent.window = kPracticalWindow;
        config.seats.assign(n, SeatSpec{agent, {}});
        out.push_back(config);
      }
      break;
    case FigureName::kFlipped:
      return Comparison(RandomInstance({2, 2}, Variant::kFlipped), false, false);
    case FigureName::kGaussian:
      return Comparison(RandomInstance({2, 2}, Variant::kGaussian), false, false);
    case FigureName::kKgWSweep:
      for (std::size_t window : {1, 5, 25}) {
        ExperimentConfig config = base;
        config.label = "KG leader, W=" + std::to_string(window);
        config.seats = PartnerAwarePair(kLeaderFirst, kDefaultC, 1, window);
        config.seats[0].agent = Make(Strategy::kKgLeader);
        out.push_back(config);
      }
      break;
    case FigureName::kVeryNaiveComparison:
      out = Comparison(RandomInstance({2, 2}, Variant::kMaskedBernoulli), false, true);
      for (ExperimentConfig& config : out) config.horizon = 100000;
      break;
  }
  return out;
}

}  // namespace

std::string_view FigureNameString(FigureName name) {
  for (const auto& [value, text] : kFigureNames) {
    if (value == name) return text;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown figure");
}

FigureName ParseFigureName(std::string_view name) {
  for (const auto& [value, text] : kFigureNames) {
    if (text == name) return value;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown figure '" + std::string(name) + "'");
}

std::vector<FigureName> AllFigures() {
  std::vector<FigureName> out;
  for (const auto& entry : kFigureNames) out.push_back(entry.first);
  return out;
}

std::vector<SeatSpec> PartnerAwarePair(std::span<const std::size_t> order, double c,
                                       std::size_t repeat, std::size_t window) {
  if (order.size() != 2) Fail(ErrorCode::kInvalidArgument, "a pair needs two seats");
  AgentConfig leader = Make(Strategy::kPaLeader, c);
  leader.repeat = repeat;
  AgentConfig follower = Make(Strategy::kPaFollower, c);
  follower.window = window;
  std::vector<SeatSpec> seats(2);
  seats.at(order[0]).agent = leader;
  seats.at(order[1]).agent = follower;
  return seats;
}

std::vector<SeatSpec> SameStrategyTeam(std::size_t num_agents, Strategy strategy, double c) {
  return std::vector<SeatSpec>(num_agents, SeatSpec{Make(strategy, c), {}});
}

std::vector<ExperimentConfig> FigureConfigs(FigureName name, const FigureOptions& options) {
  std::vector<ExperimentConfig> configs = Series(name);
  for (ExperimentConfig& config : configs) {
    config.seed = options.seed;
    if (options.runs) config.runs = *options.runs;
    if (options.horizon) config.horizon = *options.horizon;
  }
  return configs;
}

ExperimentResult ReproduceFigure(FigureName name, const FigureOptions& options) {
  ExperimentResult result;
  for (const ExperimentConfig& config : FigureConfigs(name, options)) {
    result.series.push_back(RunBatch(config, options.threads));
  }
  return result;
}

}  // namespace pab
