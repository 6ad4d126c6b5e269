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

#include <cmath>
#include <cstdint>
#include <limits>

namespace pab {

// Per-team-action pull count and running mean of the observed rewards.
struct ArmStats {
  std::uint64_t count = 0;
  double mean = 0.0;

  friend bool operator==(const ArmStats&, const ArmStats&) = default;
};

struct ConfidenceParams {
  double c = 1.0;
  double delta = 0.5;

  // Throws kInvalidArgument unless c > 0 and 0 < delta < 1.
  static ConfidenceParams Make(double c, double delta);

  // c * ln(1/delta), the numerator under the square root of the radius.
  double RadiusScale() const { return c * -std::log(delta); }
};

// mean + sqrt(scale / count), +inf for an unpulled arm.
inline double UcbFromScale(const ArmStats& stats, double radius_scale) noexcept {
  if (stats.count == 0) return std::numeric_limits<double>::infinity();
  return stats.mean +
         std::sqrt(radius_scale / static_cast<double>(stats.count));
}

inline double UcbIndex(const ArmStats& stats,
                       const ConfidenceParams& params) noexcept {
  return UcbFromScale(stats, params.RadiusScale());
}

inline ArmStats UpdateMean(ArmStats stats, double reward) noexcept {
  ++stats.count;
  stats.mean += (reward - stats.mean) / static_cast<double>(stats.count);
  return stats;
}

}  // namespace pab
