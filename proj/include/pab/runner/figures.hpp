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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pab/runner/batch.hpp"
#include "pab/runner/config.hpp"

namespace pab {

enum class FigureName {
  kLSweep,
  kWSweep,
  kAlgoComparisonFixed,
  kAlgoComparisonRandom,
  kP1Sweep,
  kP2Sweep,
  kActionCountSweep,
  kNAgentsSweep,
  kFlipped,
  kGaussian,
  kKgWSweep,
  kVeryNaiveComparison,
};

std::string_view FigureNameString(FigureName name);
FigureName ParseFigureName(std::string_view name);
std::vector<FigureName> AllFigures();

struct FigureOptions {
  std::optional<std::uint64_t> runs;     // default 100
  std::optional<std::uint64_t> horizon;  // default per figure
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// The series of one figure, one config per curve.
std::vector<ExperimentConfig> FigureConfigs(FigureName name, const FigureOptions& options = {});
ExperimentResult ReproduceFigure(FigureName name, const FigureOptions& options = {});

// Partner-aware pair for a two-agent instance: the seat ranked first by
// observability leads.
std::vector<SeatSpec> PartnerAwarePair(std::span<const std::size_t> order, double c,
                                       std::size_t repeat, std::size_t window);
std::vector<SeatSpec> SameStrategyTeam(std::size_t num_agents, Strategy strategy, double c);

}  // namespace pab
