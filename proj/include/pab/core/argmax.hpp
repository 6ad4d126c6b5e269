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
#include <span>

#include "pab/core/rng.hpp"

namespace pab {

// Index of a maximal entry. When several entries tie for the maximum
// (including several +inf), one is drawn uniformly from the tied set; the
// stream is consumed only when there is a tie. NaN entries never win.
// Throws kInvalidArgument on an empty span ("empty candidate set").
std::size_t ArgmaxTiebreak(std::span<const double> values, RngStream& rng);

}  // namespace pab
