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

#include "pab/core/argmax.hpp"

#include <cmath>
#include <limits>

#include "pab/core/error.hpp"

namespace pab {

std::size_t ArgmaxTiebreak(std::span<const double> values, RngStream& rng) {
  if (values.empty()) Fail(ErrorCode::kInvalidArgument, "empty candidate set");
  double best = -std::numeric_limits<double>::infinity();
  std::size_t ties = 0;
  std::size_t first = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (std::isnan(v)) continue;
    if (ties == 0 || v > best) {
      best = v;
      ties = 1;
      first = i;
    } else if (v == best) {
      ++ties;
    }
  }
  if (ties == 0) Fail(ErrorCode::kInvalidArgument, "no comparable candidate (all NaN)");
  if (ties == 1) return first;
  std::uint64_t pick = rng.UniformInt(ties);
  for (std::size_t i = first; i < values.size(); ++i) {
    if (values[i] == best) {
      if (pick == 0) return i;
      --pick;
    }
  }
  return first;  // unreachable
}

}  // namespace pab
