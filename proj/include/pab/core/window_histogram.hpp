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

#include "pab/core/action_space.hpp"
#include "pab/core/rng.hpp"

namespace pab {

// Histogram of a partner's last `window` actions. Before the first push the
// derived distribution is uniform over the partner's actions.
class WindowHistogram {
 public:
  WindowHistogram(std::size_t num_actions, std::size_t window);

  std::size_t num_actions() const noexcept { return counts_.size(); }
  std::size_t window() const noexcept { return ring_.size(); }
  // min(pushes, window)
  std::size_t length() const noexcept { return length_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  // Throws kOutOfRange if `action` >= num_actions().
  void Push(ActionIndex action);
  ActionIndex Sample(RngStream& rng) const;
  std::vector<double> Distribution() const;
  // Buffered actions, oldest first.
  std::vector<ActionIndex> Contents() const;

  friend bool operator==(const WindowHistogram&,
                         const WindowHistogram&) = default;

 private:
  std::vector<ActionIndex> ring_;
  std::vector<std::uint64_t> counts_;
  std::size_t head_ = 0;  // next write position
  std::size_t length_ = 0;
};

}  // namespace pab
