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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/rational.hpp>

#include "pab/agents/agent.hpp"
#include "pab/agents/roles.hpp"
#include "pab/core/error.hpp"
#include "pab/runner/episode.hpp"

using namespace pab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// A count this large makes the confidence radius negligible, so a cell's
// UCB is its stored mean.
constexpr std::uint64_t kSaturated = std::uint64_t{1} << 60;

double ChiSquaredCritical(double dof, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

double UniformChiSquared(const std::vector<std::uint64_t>& observed) {
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double expected = n / static_cast<double>(observed.size());
  double stat = 0.0;
  for (auto o : observed) stat += (o - expected) * (o - expected) / expected;
  return stat;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pab::Error");
  return ErrorCode::kInvalidArgument;
}

AgentConfig Config(Strategy strategy, std::size_t window = 1, std::size_t repeat = 1,
                   std::uint64_t horizon = 100) {
  AgentConfig config;
  config.strategy = strategy;
  config.window = window;
  config.repeat = repeat;
  config.horizon = horizon;
  return config;
}

void SetValues(Agent& agent, const std::vector<double>& values) {
  auto& stats = agent.mutable_state().stats;
  REQUIRE(stats.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    stats[i] = values[i] == kInf ? ArmStats{} : ArmStats{kSaturated, values[i]};
  }
}

ExperimentConfig TwoAgentConfig(AgentConfig first, AgentConfig second, std::uint64_t horizon) {
  ExperimentConfig config;
  config.instance.kind = InstanceKind::kFixed2x2;
  config.seats = {SeatSpec{first, {}}, SeatSpec{second, {}}};
  config.horizon = horizon;
  config.runs = 1;
  return config;
}

// Exact value of pulling `arm` now and then exploiting the best posterior
// mean for `remaining` pulls, by enumerating the two outcomes.
using Q = boost::rational<long long>;
Q ExactLookahead(const std::vector<std::pair<long long, long long>>& posts, std::size_t arm,
                 long long remaining) {
  auto mean = [](long long a, long long b) { return Q(a, a + b); };
  Q total = 0;
  const auto [a, b] = posts[arm];
  for (int success = 0; success <= 1; ++success) {
    const Q prob = success ? mean(a, b) : Q(1) - mean(a, b);
    auto updated = posts;
    updated[arm] = {a + success, b + 1 - success};
    Q best = 0;
    for (const auto& [ua, ub] : updated) best = std::max(best, mean(ua, ub));
    total += prob * (Q(success) + Q(remaining) * best);
  }
  return total;
}

}  // namespace

TEST_CASE("strategy and delta names round-trip") {
  for (Strategy s : {Strategy::kPaLeader, Strategy::kPaFollower, Strategy::kPaRankK,
                     Strategy::kNaiveUcb, Strategy::kVeryNaiveUcb, Strategy::kNaiveThompson,
                     Strategy::kKgLeader}) {
    CHECK(ParseStrategy(StrategyName(s)) == s);
  }
  CHECK(ParseDeltaMode("anytime") == DeltaMode::kAnytime);
  CHECK(CodeOf([] { ParseStrategy("GREEDY"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("agent config validation") {
  CHECK(CodeOf([] { Config(Strategy::kPaFollower, 0).Validate(); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Config(Strategy::kPaLeader, 1, 0).Validate(); }) == ErrorCode::kInvalidArgument);
  AgentConfig bad_delta = Config(Strategy::kNaiveUcb);
  bad_delta.delta_mode = DeltaMode::kFixed;
  bad_delta.delta = 1.5;
  CHECK(CodeOf([&] { bad_delta.Validate(); }) == ErrorCode::kInvalidArgument);
  AgentConfig horizon = Config(Strategy::kNaiveUcb, 1, 1, 100);
  CHECK(horizon.LogInvDelta(7) == doctest::Approx(2.0 * std::log(100.0)));
  horizon.delta_mode = DeltaMode::kAnytime;
  CHECK(horizon.LogInvDelta(7) == doctest::Approx(2.0 * std::log(7.0)));
}

TEST_CASE("rank must be well formed") {
  const ActionSpace space{2, 2, 2};
  AgentConfig config = Config(Strategy::kPaRankK);
  config.rank = 4;
  CHECK(CodeOf([&] { Agent(config, space, 0, {1, 2, 0}, 1); }) == ErrorCode::kInvalidArgument);
  config.rank = 2;
  CHECK(CodeOf([&] { Agent(config, space, 1, {}, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { Agent(config, space, 1, {1}, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_SUITE("pa_leader") {
  TEST_CASE("first step is a uniform draw over the matrix") {
    std::vector<std::uint64_t> rows(2);
    for (std::uint64_t seed = 0; seed < 20000; ++seed) {
      Agent leader(Config(Strategy::kPaLeader), ActionSpace{2, 2}, 0, {}, seed);
      ++rows[leader.Act(1)];
    }
    CHECK(UniformChiSquared(rows) < ChiSquaredCritical(1, 1e-3));
  }

  TEST_CASE("L=2 repeats the previous action at t=2") {
    Agent leader(Config(Strategy::kPaLeader, 1, 2), ActionSpace{2, 2}, 0, {}, 3);
    SetValues(leader, {0.1, 0.1, 0.9, 0.9});
    const ActionIndex first = leader.Act(1);
    CHECK(first == 1);
    leader.Observe(TeamAction{first, 0}, 1.0);
    SetValues(leader, {0.9, 0.9, 0.1, 0.1});
    CHECK(leader.Act(2) == first);
  }

  TEST_CASE("unique maximum at (0,0) gives row 0") {
    Agent leader(Config(Strategy::kPaLeader), ActionSpace{2, 2}, 0, {}, 3);
    SetValues(leader, {0.9, 0.4, 0.2, 0.6});
    CHECK(leader.Act(3) == 0);
  }
}

TEST_SUITE("pa_follower") {
  TEST_CASE("W=1 point-mass prediction") {
    Agent follower(Config(Strategy::kPaFollower), ActionSpace{2, 2}, 1, {0}, 5);
    follower.mutable_state().histograms[0].Push(0);
    SetValues(follower, {0.3, 0.7, 0.9, 0.1});
    CHECK(follower.Act(2) == 1);
    CHECK(follower.predictions().size() == 1);
    CHECK(follower.predictions()[0] == 0);
  }

  TEST_CASE("no history gives uniform prediction and action") {
    std::vector<std::uint64_t> predictions(2), actions(2);
    for (std::uint64_t seed = 0; seed < 20000; ++seed) {
      Agent follower(Config(Strategy::kPaFollower), ActionSpace{2, 2}, 1, {0}, seed);
      ++actions[follower.Act(1)];
      ++predictions[follower.predictions()[0]];
    }
    CHECK(UniformChiSquared(predictions) < ChiSquaredCritical(1, 1e-3));
    CHECK(UniformChiSquared(actions) < ChiSquaredCritical(1, 1e-3));
  }

  TEST_CASE("W=4 histogram [0,0,1,0] plays 0 with probability 0.75") {
    Agent follower(Config(Strategy::kPaFollower, 4), ActionSpace{2, 2}, 1, {0}, 17);
    for (ActionIndex a : {0, 0, 1, 0}) follower.mutable_state().histograms[0].Push(a);
    SetValues(follower, {0.9, 0.1, 0.1, 0.9});
    const int n = 1000000;
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
      const ActionIndex a = follower.Act(5);
      REQUIRE(a == follower.predictions()[0]);
      zeros += a == 0;
    }
    const double se = std::sqrt(0.75 * 0.25 / n);
    CHECK(std::abs(static_cast<double>(zeros) / n - 0.75) < 3 * se);
  }

  TEST_CASE("observe makes a W=1 histogram a point mass on the latest action") {
    Agent follower(Config(Strategy::kPaFollower), ActionSpace{3, 2}, 1, {0}, 1);
    const ActionIndex own = follower.Act(1);
    follower.Observe(TeamAction{2, own}, 1.0);
    CHECK(follower.state().histograms[0].Distribution() == std::vector<double>{0, 0, 1});
  }
}

TEST_SUITE("pa_rank_k") {
  TEST_CASE("N=3 rank 3 with W=1 predicts both previous actions") {
    AgentConfig config = Config(Strategy::kPaRankK);
    config.rank = 3;
    const ActionSpace space{2, 2, 3};
    Agent agent(config, space, 2, {0, 1}, 9);
    const ActionIndex own = agent.Act(1);
    agent.Observe(TeamAction{1, 0, own}, 0.0);
    std::vector<double> values(space.num_cells(), 0.1);
    values[space.Flatten({1, 0, 2})] = 0.8;
    values[space.Flatten({0, 0, 0})] = 0.95;
    SetValues(agent, values);
    CHECK(agent.Act(2) == 2);
    CHECK(std::vector<ActionIndex>(agent.predictions().begin(), agent.predictions().end()) ==
          std::vector<ActionIndex>{1, 0});
  }

  TEST_CASE("N=3 rank 2 with an infinite suffix cell") {
    AgentConfig config = Config(Strategy::kPaRankK);
    config.rank = 2;
    const ActionSpace space{2, 2, 2};
    Agent agent(config, space, 1, {0}, 9);
    agent.mutable_state().histograms[0].Push(1);
    std::vector<double> values(space.num_cells(), 0.99);
    // Suffix (agents 1, 2) under predicted rank-1 action 1: [[inf, 0.5], [0.4, 0.3]].
    values[space.Flatten({1, 0, 0})] = kInf;
    values[space.Flatten({1, 0, 1})] = 0.5;
    values[space.Flatten({1, 1, 0})] = 0.4;
    values[space.Flatten({1, 1, 1})] = 0.3;
    SetValues(agent, values);
    CHECK(agent.Act(2) == 0);
  }

  TEST_CASE("N=2 rank-k traces equal leader/follower traces") {
    for (std::size_t window : {1, 5, 25}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto pair = TwoAgentConfig(Config(Strategy::kPaLeader, 1, 2, 2000),
                                         Config(Strategy::kPaFollower, window, 1, 2000), 2000);
        AgentConfig rank = Config(Strategy::kPaRankK, window, 2, 2000);
        const auto team = TwoAgentConfig(rank, rank, 2000);
        const RunTrace a = RunEpisode(pair, seed);
        const RunTrace b = RunEpisode(team, seed);
        CHECK(a.cells == b.cells);
        CHECK(a.observed == b.observed);
        CHECK(a.predictions == b.predictions);
      }
    }
  }
}

TEST_SUITE("naive") {
  TEST_CASE("naive ucb picks its coordinate of the global max") {
    Agent column(Config(Strategy::kNaiveUcb), ActionSpace{2, 2}, 1, {}, 2);
    SetValues(column, {0.9, 0.4, 0.2, 0.6});
    CHECK(column.Act(3) == 0);
    Agent row(Config(Strategy::kNaiveUcb), ActionSpace{2, 2}, 0, {}, 2);
    SetValues(row, {0.1, 0.4, 0.2, 0.6});
    CHECK(row.Act(3) == 1);
  }

  TEST_CASE("naive ucb with no data is uniform over cells") {
    std::vector<std::uint64_t> columns(3);
    for (std::uint64_t seed = 0; seed < 30000; ++seed) {
      Agent agent(Config(Strategy::kNaiveUcb), ActionSpace{2, 3}, 1, {}, seed);
      ++columns[agent.Act(1)];
    }
    CHECK(UniformChiSquared(columns) < ChiSquaredCritical(2, 1e-3));
  }

  TEST_CASE("very naive ucb examples") {
    Agent agent(Config(Strategy::kVeryNaiveUcb), ActionSpace{2, 3}, 0, {}, 2);
    CHECK(agent.state().stats.size() == 2);
    agent.mutable_state().stats[1] = ArmStats{5, 0.9};
    CHECK(agent.Act(1) == 0);
    SetValues(agent, {0.55, 0.54});
    CHECK(agent.Act(2) == 0);
  }

  TEST_CASE("very naive ucb pools rewards over partner actions") {
    Agent agent(Config(Strategy::kVeryNaiveUcb), ActionSpace{2, 3}, 0, {}, 2);
    const std::vector<double> rewards = {1, 0, 0, 1, 1, 1, 0, 1, 0, 0,
                                         1, 1, 0, 1, 1, 0, 0, 0, 1, 1};
    boost::rational<long> sum = 0;
    for (std::size_t i = 0; i < rewards.size(); ++i) {
      agent.Observe(TeamAction{1, static_cast<ActionIndex>(i % 3)}, rewards[i]);
      sum += static_cast<long>(rewards[i]);
    }
    const auto stats = agent.state().stats[1];
    CHECK(stats.count == 20);
    CHECK(stats.mean == doctest::Approx(boost::rational_cast<double>(sum / 20L)).epsilon(1e-15));
    CHECK(agent.state().stats[0].count == 0);
  }
}

TEST_SUITE("thompson") {
  TEST_CASE("uniform priors select cells uniformly") {
    Agent agent(Config(Strategy::kNaiveThompson), ActionSpace{2, 2}, 0, {}, 4);
    std::vector<std::uint64_t> rows(2);
    for (int i = 0; i < 20000; ++i) ++rows[agent.Act(1)];
    CHECK(UniformChiSquared(rows) < ChiSquaredCritical(1, 1e-3));
  }

  TEST_CASE("a (1000,1) posterior wins with probability at least 0.99") {
    Agent agent(Config(Strategy::kNaiveThompson), ActionSpace{2, 2}, 1, {}, 4);
    agent.mutable_state().posteriors[0] = BetaPosterior{1000, 1};
    int hits = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) hits += agent.Act(1) == 0;
    CHECK(static_cast<double>(hits) / n >= 0.99);
  }

  TEST_CASE("Beta(1,1) draws pass a Kolmogorov-Smirnov test against Uniform[0,1]") {
    RngStream rng(31);
    const int n = 100000;
    std::vector<double> draws(n);
    for (double& d : draws) d = rng.Beta(1.0, 1.0);
    std::sort(draws.begin(), draws.end());
    double stat = 0.0;
    for (int i = 0; i < n; ++i) {
      stat = std::max({stat, (i + 1.0) / n - draws[i], draws[i] - static_cast<double>(i) / n});
    }
    // Asymptotic critical value sqrt(ln(2 / alpha) / 2) / sqrt(n), alpha = 1e-3.
    const double critical = std::sqrt(std::log(2.0 / 1e-3) / 2.0) / std::sqrt(n);
    CHECK(stat < critical);
  }

  TEST_CASE("posterior after rewards [1,1,0] is (3,2)") {
    Agent agent(Config(Strategy::kNaiveThompson), ActionSpace{2, 2}, 0, {}, 4);
    for (double r : {1.0, 1.0, 0.0}) agent.Observe(TeamAction{1, 1}, r);
    CHECK(agent.state().posteriors[3] == BetaPosterior{3, 2});
    CHECK(agent.state().posteriors[0] == BetaPosterior{1, 1});
  }

  TEST_CASE("rewards outside [0,1] are rejected") {
    Agent agent(Config(Strategy::kNaiveThompson), ActionSpace{2, 2}, 0, {}, 4);
    CHECK(CodeOf([&] { agent.Observe(TeamAction{0, 0}, 1.5); }) == ErrorCode::kInvalidArgument);
    Agent kg(Config(Strategy::kKgLeader), ActionSpace{2, 2}, 0, {}, 4);
    CHECK(CodeOf([&] { kg.Observe(TeamAction{0, 0}, -0.1); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_SUITE("kg_leader") {
  TEST_CASE("values match an exact enumeration for (9,1), (1,1), ten pulls left") {
    const std::vector<BetaPosterior> posts = {{9, 1}, {1, 1}};
    const auto values = KnowledgeGradientValues(posts, 10);
    const std::vector<std::pair<long long, long long>> exact_posts = {{9, 1}, {1, 1}};
    for (std::size_t arm = 0; arm < 2; ++arm) {
      const Q exact = ExactLookahead(exact_posts, arm, 10);
      CHECK(std::abs(values[arm] - boost::rational_cast<double>(exact)) < 1e-12);
    }
  }

  TEST_CASE("values match exact enumeration on random integer posteriors") {
    RngStream rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t arms = 2 + rng.UniformInt(5);
      std::vector<BetaPosterior> posts;
      std::vector<std::pair<long long, long long>> exact_posts;
      for (std::size_t i = 0; i < arms; ++i) {
        const auto a = static_cast<long long>(1 + rng.UniformInt(30));
        const auto b = static_cast<long long>(1 + rng.UniformInt(30));
        posts.push_back({static_cast<double>(a), static_cast<double>(b)});
        exact_posts.emplace_back(a, b);
      }
      const auto remaining = static_cast<long long>(rng.UniformInt(50));
      const auto values = KnowledgeGradientValues(posts, static_cast<std::uint64_t>(remaining));
      for (std::size_t arm = 0; arm < arms; ++arm) {
        const double exact = boost::rational_cast<double>(ExactLookahead(exact_posts, arm, remaining));
        REQUIRE(std::abs(values[arm] - exact) < 1e-12 * std::max(1.0, exact));
      }
    }
  }

  TEST_CASE("last step is greedy on the posterior mean") {
    Agent kg(Config(Strategy::kKgLeader, 1, 1, 10), ActionSpace{2, 2}, 0, {}, 1);
    kg.mutable_state().posteriors = {{2, 5}, {1, 9}, {4, 2}, {1, 1}};
    const auto values = KnowledgeGradientValues(kg.state().posteriors, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] == doctest::Approx(kg.state().posteriors[i].Mean()));
    }
    CHECK(kg.Act(10) == 1);
  }

  TEST_CASE("flat priors tie and break uniformly") {
    std::vector<std::uint64_t> rows(2);
    for (std::uint64_t seed = 0; seed < 20000; ++seed) {
      Agent kg(Config(Strategy::kKgLeader, 1, 1, 1000), ActionSpace{2, 2}, 0, {}, seed);
      ++rows[kg.Act(1)];
    }
    CHECK(UniformChiSquared(rows) < ChiSquaredCritical(1, 1e-3));
  }

  TEST_CASE("acting past the horizon is budget exhaustion") {
    Agent kg(Config(Strategy::kKgLeader, 1, 1, 10), ActionSpace{2, 2}, 0, {}, 1);
    CHECK(CodeOf([&] { kg.Act(11); }) == ErrorCode::kBudgetExhausted);
  }
}

TEST_CASE("observe increments exactly one count") {
  Agent agent(Config(Strategy::kNaiveUcb), ActionSpace{3, 3}, 0, {}, 1);
  for (int i = 0; i < 3; ++i) agent.Observe(TeamAction{2, 1}, 0.5);
  const ActionIndex own = agent.Act(4);
  const auto before = agent.state().stats;
  agent.Observe(TeamAction{own, 2}, 1.0);
  const auto after = agent.state().stats;
  const CellIndex cell = ActionSpace{3, 3}.Flatten({own, 2});
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i].count == before[i].count + (i == cell ? 1 : 0));
  }
  CHECK(CodeOf([&] { agent.Observe(9, 1.0); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("observe rejects a team action that contradicts the committed one") {
  Agent agent(Config(Strategy::kNaiveUcb), ActionSpace{2, 2}, 0, {}, 1);
  const ActionIndex own = agent.Act(1);
  CHECK(CodeOf([&] { agent.Observe(TeamAction{1 - own, 0}, 1.0); }) == ErrorCode::kInvalidArgument);
}

TEST_SUITE("roles") {
  TEST_CASE("known observabilities sort descending, ties to the lower seat") {
    RngStream rng(1);
    const std::vector<std::optional<double>> a = {1.0, 0.5};
    CHECK(AssignRoles(a, rng) == std::vector<std::size_t>{0, 1});
    const std::vector<std::optional<double>> b = {0.5, 0.5};
    CHECK(AssignRoles(b, rng) == std::vector<std::size_t>{0, 1});
    const std::vector<std::optional<double>> c = {0.2, 0.9, 0.5};
    CHECK(AssignRoles(c, rng) == std::vector<std::size_t>{1, 2, 0});
    CHECK(RanksFromOrder(std::vector<std::size_t>{1, 2, 0}) == std::vector<std::size_t>{3, 1, 2});
  }

  TEST_CASE("gaussian roles sort by ascending noise") {
    CHECK(AssignRolesByNoise(std::vector<double>{0.1, 0.5}) == std::vector<std::size_t>{0, 1});
    CHECK(AssignRolesByNoise(std::vector<double>{0.5, 0.1}) == std::vector<std::size_t>{1, 0});
  }

  TEST_CASE("mixed knowledge is rejected") {
    RngStream rng(1);
    const std::vector<std::optional<double>> mixed = {1.0, std::nullopt};
    CHECK(CodeOf([&] { AssignRoles(mixed, rng); }) == ErrorCode::kInvalidArgument);
  }

  TEST_CASE("unknown observabilities give a uniform permutation") {
    RngStream rng(7);
    const std::vector<std::optional<double>> unknown(3);
    std::map<std::vector<std::size_t>, std::uint64_t> seen;
    for (int i = 0; i < 60000; ++i) ++seen[AssignRoles(unknown, rng)];
    REQUIRE(seen.size() == 6);
    std::vector<std::uint64_t> counts;
    for (const auto& [order, count] : seen) counts.push_back(count);
    CHECK(UniformChiSquared(counts) < ChiSquaredCritical(5, 1e-3));
  }
}

TEST_SUITE("trace invariants") {
  TEST_CASE("leader action is constant on blocks of L steps") {
    for (std::size_t repeat : {1, 2, 3, 5}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto config = TwoAgentConfig(Config(Strategy::kPaLeader, 1, repeat, 3000),
                                           Config(Strategy::kPaFollower, 3, 1, 3000), 3000);
        const RunTrace trace = RunEpisode(config, seed);
        for (std::size_t step = 1; step < trace.length(); ++step) {
          if (step % repeat != 0) {
            REQUIRE(trace.team_action(step)[0] == trace.team_action(step - 1)[0]);
          }
        }
      }
    }
  }

  TEST_CASE("with L=2 and W=1 every even-step prediction is correct") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto config = TwoAgentConfig(Config(Strategy::kPaLeader, 1, 2, 5000),
                                         Config(Strategy::kPaFollower, 1, 1, 5000), 5000);
      const RunTrace trace = RunEpisode(config, seed);
      for (std::size_t step = 1; step < trace.length(); step += 2) {
        REQUIRE(trace.prediction(step, 1, 0) == trace.team_action(step)[0]);
      }
    }
  }

  TEST_CASE("counts sum to t and decisions replay from snapshots") {
    const std::vector<std::pair<Strategy, Strategy>> pairs = {
        {Strategy::kPaLeader, Strategy::kPaFollower},
        {Strategy::kNaiveUcb, Strategy::kNaiveUcb},
        {Strategy::kNaiveThompson, Strategy::kNaiveThompson},
        {Strategy::kKgLeader, Strategy::kPaFollower},
        {Strategy::kVeryNaiveUcb, Strategy::kVeryNaiveUcb},
    };
    for (const auto& [first, second] : pairs) {
      const auto config =
          TwoAgentConfig(Config(first, 4, 2, 500), Config(second, 4, 1, 500), 500);
      Episode episode(config, 42);
      for (std::uint64_t t = 1; t <= 500; ++t) {
        std::vector<Agent> snapshots;
        for (std::size_t seat = 0; seat < 2; ++seat) snapshots.push_back(*episode.agent(seat));
        const auto committed = episode.Commit();
        for (std::size_t seat = 0; seat < 2; ++seat) {
          REQUIRE(snapshots[seat].Act(t) == *committed[seat]);
        }
        const std::vector<std::optional<ActionIndex>> none(2);
        episode.Resolve(none);
        for (std::size_t seat = 0; seat < 2; ++seat) {
          const auto& stats = episode.agent(seat)->state().stats;
          std::uint64_t total = 0;
          for (const auto& s : stats) total += s.count;
          REQUIRE(total == t);
          if (episode.agent(seat)->config().UsesPosterior()) {
            for (const auto& post : episode.agent(seat)->state().posteriors) {
              REQUIRE(post.alpha >= 1.0);
              REQUIRE(post.beta >= 1.0);
            }
          }
        }
      }
    }
  }

  TEST_CASE("scaling every value by a positive constant keeps the argmax action") {
    RngStream values_rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<double> values(9);
      for (double& v : values) v = std::floor(values_rng.Uniform01() * 3.0) / 4.0 + 0.1;
      const double factor = values_rng.Uniform(0.2, 1.2);
      std::vector<double> scaled(values);
      for (double& v : scaled) v *= factor;
      Agent a(Config(Strategy::kNaiveUcb), ActionSpace{3, 3}, 0, {}, trial);
      Agent b(Config(Strategy::kNaiveUcb), ActionSpace{3, 3}, 0, {}, trial);
      SetValues(a, values);
      SetValues(b, scaled);
      REQUIRE(a.Act(5) == b.Act(5));
    }
  }
}
