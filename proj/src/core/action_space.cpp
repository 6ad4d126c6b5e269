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

#include "pab/core/action_space.hpp"

#include <limits>

#include "pab/core/error.hpp"

namespace pab {

std::string TeamAction::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

ActionSpace::ActionSpace(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  if (sizes_.empty()) Fail(ErrorCode::kInvalidArgument, "action space needs at least one agent");
  strides_.assign(sizes_.size(), 1);
  CellIndex total = 1;
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    if (sizes_[i] == 0) {
      Fail(ErrorCode::kInvalidArgument,
           "agent " + std::to_string(i) + " has an empty action set");
    }
    strides_[i] = total;
    if (total > std::numeric_limits<CellIndex>::max() / sizes_[i]) {
      Fail(ErrorCode::kInvalidArgument, "team action count overflows 64 bits");
    }
    total *= sizes_[i];
  }
  num_cells_ = total;
}

bool ActionSpace::Contains(const TeamAction& action) const noexcept {
  if (action.size() != sizes_.size()) return false;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (action[i] >= sizes_[i]) return false;
  }
  return true;
}

CellIndex ActionSpace::Flatten(const TeamAction& action) const {
  if (!Contains(action)) {
    Fail(ErrorCode::kOutOfRange, "team action " + action.ToString() + " out of bounds");
  }
  CellIndex cell = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) cell += action[i] * strides_[i];
  return cell;
}

TeamAction ActionSpace::Unflatten(CellIndex cell) const {
  if (cell >= num_cells_) {
    Fail(ErrorCode::kOutOfRange, "cell index " + std::to_string(cell) + " out of bounds");
  }
  std::vector<ActionIndex> coords(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i) coords[i] = Coordinate(cell, i);
  return TeamAction(std::move(coords));
}

}  // namespace pab
