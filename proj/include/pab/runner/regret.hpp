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
#include <span>
#include <vector>

#include "pab/env/reward_model.hpp"
#include "pab/runner/episode.hpp"

namespace pab {

// Cumulative pseudo-regret after steps 1..T of one run.
using RegretCurve = std::vector<double>;

// Step t adds kappa * (mu(a*) - mu(a_t)), kappa = RewardScale().
RegretCurve PseudoRegret(const RunTrace& trace, const RewardModel& model);

struct RegretSummary {
  std::vector<double> mean;
  std::vector<double> std_error;  // sample deviation / sqrt(runs)
  std::size_t runs = 0;

  friend bool operator==(const RegretSummary&, const RegretSummary&) = default;
};

// Per-step mean and standard error. Each step's values are summed in sorted
// order, so the result does not depend on the order of `curves`.
// Throws kInvalidArgument on mismatched lengths.
RegretSummary Aggregate(std::span<const RegretCurve> curves);

struct SublinearityMetrics {
  double doubling_ratio = 0.0;  // R(T) / R(T/2); 1 when both are zero
  double log_slope = 0.0;       // least squares of R(t) on ln t, t in [T/2, T]
  double tail_rate = 0.0;       // (R(T) - R(0.9 T)) / (0.1 T)
  friend bool operator==(const SublinearityMetrics&, const SublinearityMetrics&) = default;
};

// `curve[t - 1]` is R(t). Needs at least 100 points.
SublinearityMetrics Sublinearity(std::span<const double> curve);

enum class BoundForm {
  kPrinted,       // p_max in both sums
  kConservative,  // p_min in the within-row sum
};

// Logarithmic regret bound for the two-agent masked Bernoulli setting with
// delta = 1/T^2, L = 2, W = 1; leader = seat with the larger observability.
// Throws kIncompatible for other settings and kDegenerate when a gap in a
// denominator is zero.
double Theorem1Bound(const RewardModel& model, std::uint64_t horizon,
                     BoundForm form = BoundForm::kPrinted);

}  // namespace pab
