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

#include <filesystem>

#include "json.hpp"
#include "pab/env/reward_model.hpp"

namespace pab {

inline constexpr int kInstanceFormatVersion = 1;

// {"v":1, "variant", "shape", "means" (row-major), "observabilities",
//  "true_stds", "noise_stds", "flip_reading", "seed"}
nlohmann::json ModelToJson(const RewardModel& model);
RewardModel ModelFromJson(const nlohmann::json& json);

void SaveModel(const RewardModel& model, const std::filesystem::path& path);
RewardModel LoadModel(const std::filesystem::path& path);

}  // namespace pab
