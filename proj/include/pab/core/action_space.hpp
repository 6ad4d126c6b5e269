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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pab {

using ActionIndex = std::size_t;
// Row-major flat index of a team action; the last agent's coordinate varies
// fastest, so flat order coincides with lexicographic order on TeamAction.
using CellIndex = std::uint64_t;

class TeamAction {
 public:
  TeamAction() = default;
  explicit TeamAction(std::vector<ActionIndex> coords)
      : coords_(std::move(coords)) {}
  TeamAction(std::initializer_list<ActionIndex> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  ActionIndex operator[](std::size_t agent) const { return coords_[agent]; }
  ActionIndex& operator[](std::size_t agent) { return coords_[agent]; }
  std::span<const ActionIndex> coords() const noexcept { return coords_; }

  friend auto operator<=>(const TeamAction&, const TeamAction&) = default;
  friend bool operator==(const TeamAction&, const TeamAction&) = default;

  std::string ToString() const;

 private:
  std::vector<ActionIndex> coords_;
};

class ActionSpace {
 public:
  ActionSpace() = default;
  // Throws kInvalidArgument on an empty list, a zero size, or a product that
  // overflows 64 bits.
  explicit ActionSpace(std::vector<std::size_t> sizes);
  ActionSpace(std::initializer_list<std::size_t> sizes)
      : ActionSpace(std::vector<std::size_t>(sizes)) {}

  std::size_t num_agents() const noexcept { return sizes_.size(); }
  std::size_t size(std::size_t agent) const { return sizes_.at(agent); }
  std::span<const std::size_t> sizes() const noexcept { return sizes_; }
  CellIndex num_cells() const noexcept { return num_cells_; }
  CellIndex stride(std::size_t agent) const { return strides_.at(agent); }

  bool Contains(const TeamAction& action) const noexcept;
  CellIndex Flatten(const TeamAction& action) const;
  TeamAction Unflatten(CellIndex cell) const;
  ActionIndex Coordinate(CellIndex cell, std::size_t agent) const noexcept {
    return static_cast<ActionIndex>((cell / strides_[agent]) % sizes_[agent]);
  }
  // Cell obtained by replacing `agent`'s coordinate of `cell` with `action`.
  CellIndex WithCoordinate(CellIndex cell, std::size_t agent,
                           ActionIndex action) const noexcept {
    return cell - Coordinate(cell, agent) * strides_[agent] +
           action * strides_[agent];
  }

  friend bool operator==(const ActionSpace& a, const ActionSpace& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<CellIndex> strides_;
  CellIndex num_cells_ = 0;
};

}  // namespace pab
