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

#include "pab/agents/roles.hpp"

#include <algorithm>
#include <numeric>

#include "pab/core/error.hpp"

namespace pab {

std::vector<std::size_t> AssignRoles(
    std::span<const std::optional<double>> observabilities, RngStream& rng) {
  const std::size_t n = observabilities.size();
  if (n < 2) Fail(ErrorCode::kInvalidArgument, "role assignment needs N >= 2");
  const auto known = std::count_if(observabilities.begin(), observabilities.end(),
                                   [](const auto& p) { return p.has_value(); });
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (known == 0) {
    // Fisher-Yates.
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[rng.UniformInt(i + 1)]);
    }
    return order;
  }
  if (static_cast<std::size_t>(known) != n) {
    Fail(ErrorCode::kInvalidArgument, "observability knowledge must be homogeneous");
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *observabilities[a] > *observabilities[b];
  });
  return order;
}

std::vector<std::size_t> AssignRolesByNoise(std::span<const double> noise_stds) {
  if (noise_stds.size() < 2) Fail(ErrorCode::kInvalidArgument, "role assignment needs N >= 2");
  std::vector<std::size_t> order(noise_stds.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return noise_stds[a] < noise_stds[b];
  });
  return order;
}

std::vector<std::size_t> RanksFromOrder(std::span<const std::size_t> order) {
  std::vector<std::size_t> ranks(order.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (order[r] >= order.size() || ranks[order[r]] != 0) {
      Fail(ErrorCode::kInvalidArgument, "rank ordering is not a permutation");
    }
    ranks[order[r]] = r + 1;
  }
  return ranks;
}

}  // namespace pab
