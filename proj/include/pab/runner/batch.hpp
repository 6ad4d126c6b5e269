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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pab/runner/config.hpp"
#include "pab/runner/regret.hpp"

namespace pab {

struct SeriesResult {
  std::string label;
  nlohmann::json config;
  RegretSummary summary;
  SublinearityMetrics diagnostics;
  friend bool operator==(const SeriesResult&, const SeriesResult&) = default;
};

struct ExperimentResult {
  std::vector<SeriesResult> series;
  friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

// Per-run pseudo-regret curves; run r uses RunSeed(config.seed, r). Runs are
// spread over `threads` workers (0 = hardware concurrency) and returned in run
// order.
std::vector<RegretCurve> RunCurves(const ExperimentConfig& config, unsigned threads = 0);

SeriesResult RunBatch(const ExperimentConfig& config, unsigned threads = 0);

// Fixed 2x2 instance, c = 2, delta = 1/T^2, L = 2, W = 1.
ExperimentConfig TheoremModeConfig(std::uint64_t horizon, std::uint64_t runs,
                                   std::uint64_t seed);

struct TheoremCheck {
  double empirical_mean = 0.0;
  double empirical_std_error = 0.0;
  double bound = 0.0;
  bool holds = false;
};

TheoremCheck VerifyTheorem(std::uint64_t horizon, std::uint64_t runs, std::uint64_t seed,
                           BoundForm form = BoundForm::kPrinted, unsigned threads = 0);

}  // namespace pab
