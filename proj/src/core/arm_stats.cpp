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

#include "pab/core/arm_stats.hpp"

#include "pab/core/error.hpp"

namespace pab {

ConfidenceParams ConfidenceParams::Make(double c, double delta) {
  if (!(c > 0.0)) Fail(ErrorCode::kInvalidArgument, "exploration constant c must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "confidence parameter delta must lie in (0, 1)");
  }
  return ConfidenceParams{c, delta};
}

}  // namespace pab
