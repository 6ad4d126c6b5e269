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
#include <string_view>

#include "pab/runner/batch.hpp"

namespace pab {

enum class ExportFormat { kCsv, kJson };

ExportFormat ParseExportFormat(std::string_view name);

inline constexpr int kResultFormatVersion = 1;

// CSV: header "step,mean_regret,stderr,label", one row per step per series.
// JSON: {"v":1, "series":[{"label","runs","config","mean","stderr",
// "diagnostics"}]}. Numbers are written in shortest round-trip form so a
// reload reproduces the aggregates bit for bit.
void ExportResult(const ExperimentResult& result, const std::filesystem::path& path,
                  ExportFormat format);
// CSV reloads carry labels and aggregates only; runs, config and diagnostics
// are recomputed or left empty.
ExperimentResult LoadResult(const std::filesystem::path& path, ExportFormat format);

}  // namespace pab
