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
#include <optional>
#include <span>
#include <vector>

#include "pab/core/rng.hpp"

namespace pab {

// Rank ordering: order[r] is the seat holding rank r + 1 (rank 1 leads).
//
// With every observability known, seats are sorted by descending p, ties
// going to the lower seat index. With none known the ordering is a uniform
// random permutation drawn from `rng`. A mix throws kInvalidArgument.
std::vector<std::size_t> AssignRoles(
    std::span<const std::optional<double>> observabilities, RngStream& rng);

// Gaussian variant: ascending observation-noise deviation, lower seat first.
std::vector<std::size_t> AssignRolesByNoise(std::span<const double> noise_stds);

// Inverse of an ordering: 1-based rank per seat.
std::vector<std::size_t> RanksFromOrder(std::span<const std::size_t> order);

}  // namespace pab
