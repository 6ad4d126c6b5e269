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

#include "pab/runner/batch.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "pab/env/presets.hpp"

namespace pab {

std::vector<RegretCurve> RunCurves(const ExperimentConfig& config, unsigned threads) {
  config.Validate();
  config.ValidateScripts();
  const std::size_t runs = static_cast<std::size_t>(config.runs);
  std::vector<RegretCurve> curves(runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        const Episode episode = PlayEpisode(config, RunSeed(config.seed, r));
        curves[r] = PseudoRegret(episode.trace(), episode.model());
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = runs;
      }
    }
  };

  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, runs));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return curves;
}

SeriesResult RunBatch(const ExperimentConfig& config, unsigned threads) {
  const std::vector<RegretCurve> curves = RunCurves(config, threads);
  SeriesResult out;
  out.label = config.label;
  out.config = ConfigToJson(config);
  out.summary = Aggregate(curves);
  if (out.summary.mean.size() >= 100) out.diagnostics = Sublinearity(out.summary.mean);
  return out;
}

ExperimentConfig TheoremModeConfig(std::uint64_t horizon, std::uint64_t runs,
                                   std::uint64_t seed) {
  ExperimentConfig config;
  config.label = "theorem_mode";
  config.instance.kind = InstanceKind::kFixed2x2;
  AgentConfig leader;
  leader.strategy = Strategy::kPaLeader;
  leader.c = 2.0;
  leader.delta_mode = DeltaMode::kHorizon;
  leader.repeat = 2;
  AgentConfig follower = leader;
  follower.strategy = Strategy::kPaFollower;
  follower.repeat = 1;
  follower.window = 1;
  config.seats = {SeatSpec{leader, {}}, SeatSpec{follower, {}}};
  config.horizon = horizon;
  config.runs = runs;
  config.seed = seed;
  return config;
}

TheoremCheck VerifyTheorem(std::uint64_t horizon, std::uint64_t runs, std::uint64_t seed,
                           BoundForm form, unsigned threads) {
  const SeriesResult series = RunBatch(TheoremModeConfig(horizon, runs, seed), threads);
  TheoremCheck check;
  check.empirical_mean = series.summary.mean.back();
  check.empirical_std_error = series.summary.std_error.back();
  check.bound = Theorem1Bound(PresetFixed2x2().model, horizon, form);
  check.holds = check.empirical_mean <= check.bound;
  return check;
}

}  // namespace pab
