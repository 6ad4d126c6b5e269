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

#include "pab/core/window_histogram.hpp"

#include <string>

#include "pab/core/error.hpp"

namespace pab {

WindowHistogram::WindowHistogram(std::size_t num_actions, std::size_t window)
    : ring_(window), counts_(num_actions, 0) {
  if (num_actions == 0) Fail(ErrorCode::kInvalidArgument, "histogram needs at least one action");
  if (window == 0) Fail(ErrorCode::kInvalidArgument, "window W must be at least 1");
}

void WindowHistogram::Push(ActionIndex action) {
  if (action >= counts_.size()) {
    Fail(ErrorCode::kOutOfRange, "partner action " + std::to_string(action) +
                                     " outside an action set of size " +
                                     std::to_string(counts_.size()));
  }
  if (length_ == ring_.size()) {
    --counts_[ring_[head_]];  // evict oldest
  } else {
    ++length_;
  }
  ring_[head_] = action;
  ++counts_[action];
  head_ = (head_ + 1) % ring_.size();
}

ActionIndex WindowHistogram::Sample(RngStream& rng) const {
  if (length_ == 0) return static_cast<ActionIndex>(rng.UniformInt(counts_.size()));
  std::uint64_t k = rng.UniformInt(length_);
  for (std::size_t a = 0; a < counts_.size(); ++a) {
    if (k < counts_[a]) return a;
    k -= counts_[a];
  }
  return counts_.size() - 1;  // unreachable: counts sum to length_
}

std::vector<double> WindowHistogram::Distribution() const {
  std::vector<double> dist(counts_.size());
  if (length_ == 0) {
    for (double& d : dist) d = 1.0 / static_cast<double>(counts_.size());
    return dist;
  }
  for (std::size_t a = 0; a < counts_.size(); ++a) {
    dist[a] = static_cast<double>(counts_[a]) / static_cast<double>(length_);
  }
  return dist;
}

std::vector<ActionIndex> WindowHistogram::Contents() const {
  std::vector<ActionIndex> out;
  out.reserve(length_);
  const std::size_t start = (head_ + ring_.size() - length_) % ring_.size();
  for (std::size_t i = 0; i < length_; ++i) out.push_back(ring_[(start + i) % ring_.size()]);
  return out;
}

}  // namespace pab
