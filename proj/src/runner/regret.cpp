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

#include "pab/runner/regret.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pab/core/error.hpp"

namespace pab {

RegretCurve PseudoRegret(const RunTrace& trace, const RewardModel& model) {
  const double best = *std::max_element(model.means.begin(), model.means.end());
  const double kappa = model.RewardScale();
  RegretCurve curve(trace.length());
  double total = 0.0;
  for (std::size_t t = 0; t < trace.length(); ++t) {
    total += kappa * (best - model.means.at(trace.cells[t]));
    curve[t] = total;
  }
  return curve;
}

RegretSummary Aggregate(std::span<const RegretCurve> curves) {
  RegretSummary out;
  out.runs = curves.size();
  if (curves.empty()) return out;
  const std::size_t length = curves.front().size();
  for (const RegretCurve& curve : curves) {
    if (curve.size() != length) Fail(ErrorCode::kInvalidArgument, "curves have mismatched lengths");
  }
  const double runs = static_cast<double>(curves.size());
  out.mean.resize(length);
  out.std_error.resize(length);
  std::vector<double> column(curves.size());
  for (std::size_t t = 0; t < length; ++t) {
    for (std::size_t r = 0; r < curves.size(); ++r) column[r] = curves[r][t];
    std::sort(column.begin(), column.end());
    double sum = 0.0;
    for (double v : column) sum += v;
    const double mean = sum / runs;
    double squares = 0.0;
    for (double v : column) squares += (v - mean) * (v - mean);
    out.mean[t] = mean;
    out.std_error[t] = curves.size() > 1 ? std::sqrt(squares / (runs - 1.0) / runs) : 0.0;
  }
  return out;
}

SublinearityMetrics Sublinearity(std::span<const double> curve) {
  const std::size_t horizon = curve.size();
  if (horizon < 100) Fail(ErrorCode::kInvalidArgument, "sublinearity needs at least 100 steps");
  const auto at = [&](std::size_t t) { return curve[t - 1]; };
  SublinearityMetrics out;

  const double full = at(horizon);
  const double half = at(horizon / 2);
  if (half == 0.0) {
    out.doubling_ratio = full == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    out.doubling_ratio = full / half;
  }

  const std::size_t first = (horizon + 1) / 2;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(horizon - first + 1);
  for (std::size_t t = first; t <= horizon; ++t) {
    const double x = std::log(static_cast<double>(t));
    const double y = at(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = count * sxx - sx * sx;
  out.log_slope = denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;

  const auto t90 = static_cast<std::size_t>(0.9 * static_cast<double>(horizon));
  out.tail_rate = (full - at(t90)) / (0.1 * static_cast<double>(horizon));
  return out;
}

double Theorem1Bound(const RewardModel& model, std::uint64_t horizon, BoundForm form) {
  if (model.variant != Variant::kMaskedBernoulli || model.num_agents() != 2) {
    Fail(ErrorCode::kIncompatible, "the bound covers two-agent masked Bernoulli instances");
  }
  if (horizon < 1) Fail(ErrorCode::kInvalidArgument, "horizon T must be at least 1");
  model.Validate();
  const CellIndex optimum = model.OptimalCell();
  const std::size_t leader = model.observabilities[0] >= model.observabilities[1] ? 0 : 1;
  const std::size_t follower = 1 - leader;
  const double p_max = model.observabilities[leader];
  const double p_min = model.observabilities[follower];
  const double p_row = form == BoundForm::kPrinted ? p_max : p_min;
  if (p_max == 0.0 || p_row == 0.0) Fail(ErrorCode::kDegenerate, "degenerate instance");

  const ActionSpace& space = model.space;
  const double best = model.means[optimum];
  const ActionIndex best_row = space.Coordinate(optimum, leader);
  double row_terms = 0.0;     // over sub-optimal leader actions
  double column_terms = 0.0;  // over sub-optimal follower actions within each row
  for (ActionIndex i = 0; i < space.size(leader); ++i) {
    const CellIndex row = space.WithCoordinate(0, leader, i);
    ActionIndex j_star = 0;
    double row_best = -1.0;
    for (ActionIndex j = 0; j < space.size(follower); ++j) {
      const double mu = model.means[space.WithCoordinate(row, follower, j)];
      if (mu > row_best) {
        row_best = mu;
        j_star = j;
      }
    }
    if (i != best_row) {
      const double gap = best - row_best;
      if (gap <= 0.0) Fail(ErrorCode::kDegenerate, "degenerate instance");
      row_terms += 16.0 / (p_max * p_max * gap * gap);
    }
    for (ActionIndex j = 0; j < space.size(follower); ++j) {
      if (j == j_star) continue;
      const double gap = row_best - model.means[space.WithCoordinate(row, follower, j)];
      if (gap <= 0.0) Fail(ErrorCode::kDegenerate, "degenerate instance");
      column_terms += 16.0 / (p_row * p_row * gap * gap);
    }
  }
  const double cells = static_cast<double>(space.size(leader) * space.size(follower));
  return (p_max + p_min) * model.MaxGap() *
         ((row_terms + column_terms) * std::log(static_cast<double>(horizon)) + 1.5 * cells);
}

}  // namespace pab
