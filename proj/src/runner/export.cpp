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

#include "pab/runner/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "pab/core/error.hpp"

namespace pab {
namespace {

using nlohmann::json;

[[noreturn]] void FailIo(const std::filesystem::path& path, const std::string& what) {
  Fail(ErrorCode::kIo, path.string() + ": " + what);
}

[[noreturn]] void FailParse(const std::filesystem::path& path, const std::string& what) {
  Fail(ErrorCode::kParse, path.string() + ": " + what);
}

void AppendNumber(std::string& out, double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  out.append(buffer, result.ptr);
}

std::string QuoteCsv(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Splits one CSV record; quoted fields may hold commas and doubled quotes.
std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

template <typename T>
bool ParseNumber(const std::string& text, T& value) {
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  return result.ec == std::errc() && result.ptr == text.data() + text.size();
}

json NumberToJson(double value) {
  if (std::isfinite(value)) return value;
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

double NumberFromJson(const json& value) {
  if (value.is_number()) return value.get<double>();
  const std::string text = value.get<std::string>();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  Fail(ErrorCode::kParse, "bad number '" + text + "'");
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) FailIo(path, "cannot open for writing");
  out << content;
  out.flush();
  if (!out) FailIo(path, "write failed");
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) FailIo(path, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string ToCsv(const ExperimentResult& result) {
  std::string out = "step,mean_regret,stderr,label\n";
  for (const SeriesResult& series : result.series) {
    const std::string label = QuoteCsv(series.label);
    for (std::size_t t = 0; t < series.summary.mean.size(); ++t) {
      out += std::to_string(t + 1);
      out += ',';
      AppendNumber(out, series.summary.mean[t]);
      out += ',';
      AppendNumber(out, series.summary.std_error[t]);
      out += ',';
      out += label;
      out += '\n';
    }
  }
  return out;
}

ExperimentResult FromCsv(const std::string& text, const std::filesystem::path& path) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "step,mean_regret,stderr,label") {
    FailParse(path, "missing CSV header");
  }
  ExperimentResult result;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto fields = SplitCsv(line);
    std::uint64_t step = 0;
    double mean = 0.0, std_error = 0.0;
    if (fields.size() != 4 || !ParseNumber(fields[0], step) || !ParseNumber(fields[1], mean) ||
        !ParseNumber(fields[2], std_error)) {
      FailParse(path, "bad row at line " + std::to_string(line_number));
    }
    if (result.series.empty() || result.series.back().label != fields[3] || step == 1) {
      result.series.emplace_back();
      result.series.back().label = fields[3];
    }
    RegretSummary& summary = result.series.back().summary;
    if (step != summary.mean.size() + 1) {
      FailParse(path, "steps out of order at line " + std::to_string(line_number));
    }
    summary.mean.push_back(mean);
    summary.std_error.push_back(std_error);
  }
  for (SeriesResult& series : result.series) {
    if (series.summary.mean.size() >= 100) series.diagnostics = Sublinearity(series.summary.mean);
  }
  return result;
}

json ToJson(const ExperimentResult& result) {
  json series = json::array();
  for (const SeriesResult& s : result.series) {
    series.push_back({
        {"label", s.label},
        {"runs", s.summary.runs},
        {"config", s.config},
        {"mean", s.summary.mean},
        {"stderr", s.summary.std_error},
        {"diagnostics",
         {{"doubling_ratio", NumberToJson(s.diagnostics.doubling_ratio)},
          {"log_slope", NumberToJson(s.diagnostics.log_slope)},
          {"tail_rate", NumberToJson(s.diagnostics.tail_rate)}}},
    });
  }
  return {{"v", kResultFormatVersion}, {"series", std::move(series)}};
}

ExperimentResult FromJson(const json& doc) {
  if (doc.at("v").get<int>() != kResultFormatVersion) {
    Fail(ErrorCode::kIncompatible, "unsupported result format version");
  }
  ExperimentResult result;
  for (const json& s : doc.at("series")) {
    SeriesResult series;
    series.label = s.at("label").get<std::string>();
    series.summary.runs = s.at("runs").get<std::size_t>();
    series.config = s.at("config");
    series.summary.mean = s.at("mean").get<std::vector<double>>();
    series.summary.std_error = s.at("stderr").get<std::vector<double>>();
    if (series.summary.mean.size() != series.summary.std_error.size()) {
      Fail(ErrorCode::kParse, "mean and stderr lengths differ");
    }
    const json& d = s.at("diagnostics");
    series.diagnostics.doubling_ratio = NumberFromJson(d.at("doubling_ratio"));
    series.diagnostics.log_slope = NumberFromJson(d.at("log_slope"));
    series.diagnostics.tail_rate = NumberFromJson(d.at("tail_rate"));
    result.series.push_back(std::move(series));
  }
  return result;
}

}  // namespace

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "json") return ExportFormat::kJson;
  Fail(ErrorCode::kInvalidArgument, "unknown format '" + std::string(name) + "'");
}

void ExportResult(const ExperimentResult& result, const std::filesystem::path& path,
                  ExportFormat format) {
  WriteFile(path, format == ExportFormat::kCsv ? ToCsv(result) : ToJson(result).dump() + "\n");
}

ExperimentResult LoadResult(const std::filesystem::path& path, ExportFormat format) {
  const std::string text = ReadFile(path);
  if (format == ExportFormat::kCsv) return FromCsv(text, path);
  try {
    return FromJson(json::parse(text));
  } catch (const json::exception& e) {
    FailParse(path, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIncompatible) throw;
    FailParse(path, e.what());
  }
}

}  // namespace pab
