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

#include "pab/env/instance_io.hpp"

#include <fstream>
#include <string>

#include "pab/core/error.hpp"

namespace pab {

using nlohmann::json;

json ModelToJson(const RewardModel& model) {
  json out;
  out["v"] = kInstanceFormatVersion;
  out["variant"] = std::string(VariantName(model.variant));
  out["shape"] = std::vector<std::size_t>(model.space.sizes().begin(), model.space.sizes().end());
  out["means"] = model.means;
  out["observabilities"] = model.observabilities;
  out["true_stds"] = model.true_stds;
  out["noise_stds"] = model.noise_stds;
  out["flip_reading"] = std::string(FlipReadingName(model.flip_reading));
  out["seed"] = model.generator_seed ? json(*model.generator_seed) : json(nullptr);
  return out;
}

RewardModel ModelFromJson(const json& in) {
  try {
    if (!in.is_object()) Fail(ErrorCode::kParse, "instance must be a JSON object");
    const int version = in.value("v", kInstanceFormatVersion);
    if (version != kInstanceFormatVersion) {
      Fail(ErrorCode::kParse, "unsupported instance format version " + std::to_string(version));
    }
    RewardModel model;
    model.variant = ParseVariant(in.value("variant", std::string("masked_bernoulli")));
    model.space = ActionSpace(in.at("shape").get<std::vector<std::size_t>>());
    model.means = in.at("means").get<std::vector<double>>();
    model.observabilities = in.value("observabilities", std::vector<double>{});
    model.true_stds = in.value("true_stds", std::vector<double>{});
    model.noise_stds = in.value("noise_stds", std::vector<double>{});
    model.flip_reading = ParseFlipReading(in.value("flip_reading", std::string("fail_reads_one")));
    if (in.contains("seed") && !in.at("seed").is_null()) {
      model.generator_seed = in.at("seed").get<std::uint64_t>();
    }
    model.Validate();
    return model;
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed instance: ") + e.what());
  }
}

void SaveModel(const RewardModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out << ModelToJson(model).dump(2) << '\n';
  if (!out) Fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

RewardModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  json parsed;
  try {
    parsed = json::parse(in);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  try {
    return ModelFromJson(parsed);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace pab
