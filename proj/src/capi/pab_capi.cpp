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

#include "pab/pab.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <thread>

#include "pab/core/error.hpp"
#include "pab/env/instance_io.hpp"
#include "pab/runner/batch.hpp"
#include "pab/runner/export.hpp"
#include "pab/runner/figures.hpp"
#include "pab/server/http_server.hpp"

struct pab_experiment {
  pab::ExperimentConfig config;
};

struct pab_result {
  pab::ExperimentResult result;
};

struct pab_server {
  std::unique_ptr<pab::SessionManager> sessions;
  std::unique_ptr<pab::Router> router;
  std::unique_ptr<pab::HttpServer> http;
  std::thread thread;
};

namespace {

thread_local std::string last_error;

pab_status StatusFor(pab::ErrorCode code) {
  switch (code) {
    case pab::ErrorCode::kInvalidArgument: return PAB_INVALID_ARGUMENT;
    case pab::ErrorCode::kOutOfRange: return PAB_OUT_OF_RANGE;
    case pab::ErrorCode::kDegenerate: return PAB_DEGENERATE;
    case pab::ErrorCode::kBudgetExhausted: return PAB_BUDGET_EXHAUSTED;
    case pab::ErrorCode::kIncompatible: return PAB_INCOMPATIBLE;
    case pab::ErrorCode::kIo: return PAB_IO;
    case pab::ErrorCode::kParse: return PAB_PARSE;
    case pab::ErrorCode::kNotFound: return PAB_NOT_FOUND;
    case pab::ErrorCode::kConflict: return PAB_CONFLICT;
    case pab::ErrorCode::kGone: return PAB_GONE;
  }
  return PAB_INTERNAL;
}

pab_status Failed(pab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and the thread's error.
template <typename F>
pab_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return PAB_OK;
  } catch (const pab::Error& e) {
    return Failed(StatusFor(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return Failed(PAB_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Failed(PAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Failed(PAB_INTERNAL, e.what());
  }
}

void Require(bool condition, const char* what) {
  if (!condition) pab::Fail(pab::ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

const pab::SeriesResult& SeriesAt(const pab_result* result, size_t series) {
  Require(result != nullptr, "result is null");
  if (series >= result->result.series.size()) {
    pab::Fail(pab::ErrorCode::kOutOfRange, "series index out of range");
  }
  return result->result.series[series];
}

pab::BoundForm FormFor(int conservative) {
  return conservative ? pab::BoundForm::kConservative : pab::BoundForm::kPrinted;
}

}  // namespace

extern "C" {

const char* pab_last_error(void) { return last_error.c_str(); }

const char* pab_version(void) { return "1.0.0"; }

const char* pab_status_name(pab_status status) {
  switch (status) {
    case PAB_OK: return "ok";
    case PAB_INTERNAL: return "internal";
    default: break;
  }
  static const pab::ErrorCode kCodes[] = {
      pab::ErrorCode::kInvalidArgument, pab::ErrorCode::kOutOfRange, pab::ErrorCode::kDegenerate,
      pab::ErrorCode::kBudgetExhausted, pab::ErrorCode::kIncompatible, pab::ErrorCode::kIo,
      pab::ErrorCode::kParse,           pab::ErrorCode::kNotFound,   pab::ErrorCode::kConflict,
      pab::ErrorCode::kGone};
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index >= static_cast<int>(std::size(kCodes))) return "unknown";
  return pab::ErrorCodeName(kCodes[index]).data();
}

void pab_string_free(char* text) { std::free(text); }

pab_status pab_experiment_from_json(const char* json, pab_experiment** out) {
  return Guard([&] {
    Require(json && out, "null argument");
    auto experiment = std::make_unique<pab_experiment>();
    experiment->config = pab::ConfigFromJson(nlohmann::json::parse(json));
    experiment->config.Validate();
    *out = experiment.release();
  });
}

pab_status pab_experiment_load(const char* path, pab_experiment** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    auto experiment = std::make_unique<pab_experiment>();
    experiment->config = pab::LoadConfig(path);
    experiment->config.Validate();
    *out = experiment.release();
  });
}

pab_status pab_experiment_set_seed(pab_experiment* experiment, uint64_t seed) {
  return Guard([&] {
    Require(experiment, "experiment is null");
    experiment->config.seed = seed;
  });
}

pab_status pab_experiment_set_runs(pab_experiment* experiment, uint64_t runs) {
  return Guard([&] {
    Require(experiment, "experiment is null");
    Require(runs >= 1, "run count R must be at least 1");
    experiment->config.runs = runs;
  });
}

pab_status pab_experiment_set_horizon(pab_experiment* experiment, uint64_t horizon) {
  return Guard([&] {
    Require(experiment, "experiment is null");
    Require(horizon >= 1, "horizon T must be at least 1");
    experiment->config.horizon = horizon;
  });
}

pab_status pab_experiment_run(const pab_experiment* experiment, unsigned threads,
                              pab_result** out) {
  return Guard([&] {
    Require(experiment && out, "null argument");
    auto result = std::make_unique<pab_result>();
    result->result.series.push_back(pab::RunBatch(experiment->config, threads));
    *out = result.release();
  });
}

void pab_experiment_destroy(pab_experiment* experiment) { delete experiment; }

pab_status pab_figure_run(const char* name, uint64_t runs, uint64_t horizon, uint64_t seed,
                          unsigned threads, pab_result** out) {
  return Guard([&] {
    Require(name && out, "null argument");
    pab::FigureOptions options;
    if (runs) options.runs = runs;
    if (horizon) options.horizon = horizon;
    options.seed = seed;
    options.threads = threads;
    auto result = std::make_unique<pab_result>();
    result->result = pab::ReproduceFigure(pab::ParseFigureName(name), options);
    *out = result.release();
  });
}

pab_status pab_figure_names(char** out) {
  return Guard([&] {
    Require(out, "null argument");
    std::string names;
    for (pab::FigureName name : pab::AllFigures()) {
      names += pab::FigureNameString(name);
      names += '\n';
    }
    *out = CopyString(names);
  });
}

size_t pab_result_series_count(const pab_result* result) {
  return result ? result->result.series.size() : 0;
}

pab_status pab_result_series_label(const pab_result* result, size_t series, const char** out) {
  return Guard([&] {
    Require(out, "null argument");
    *out = SeriesAt(result, series).label.c_str();
  });
}

pab_status pab_result_series_length(const pab_result* result, size_t series, size_t* out) {
  return Guard([&] {
    Require(out, "null argument");
    *out = SeriesAt(result, series).summary.mean.size();
  });
}

pab_status pab_result_regret_at(const pab_result* result, size_t series, size_t t,
                                double* mean, double* std_error) {
  return Guard([&] {
    Require(mean && std_error, "null argument");
    const pab::RegretSummary& summary = SeriesAt(result, series).summary;
    if (t < 1 || t > summary.mean.size()) pab::Fail(pab::ErrorCode::kOutOfRange, "step out of range");
    *mean = summary.mean[t - 1];
    *std_error = summary.std_error[t - 1];
  });
}

pab_status pab_result_diagnostics(const pab_result* result, size_t series, pab_diagnostics* out) {
  return Guard([&] {
    Require(out, "null argument");
    const pab::SublinearityMetrics& d = SeriesAt(result, series).diagnostics;
    *out = pab_diagnostics{d.doubling_ratio, d.log_slope, d.tail_rate};
  });
}

pab_status pab_result_export(const pab_result* result, const char* path, const char* format) {
  return Guard([&] {
    Require(result && path && format, "null argument");
    pab::ExportResult(result->result, path, pab::ParseExportFormat(format));
  });
}

pab_status pab_result_load(const char* path, const char* format, pab_result** out) {
  return Guard([&] {
    Require(path && format && out, "null argument");
    auto result = std::make_unique<pab_result>();
    result->result = pab::LoadResult(path, pab::ParseExportFormat(format));
    *out = result.release();
  });
}

void pab_result_destroy(pab_result* result) { delete result; }

pab_status pab_bound(const char* instance_path, uint64_t horizon, int conservative, double* out) {
  return Guard([&] {
    Require(instance_path && out, "null argument");
    *out = pab::Theorem1Bound(pab::LoadModel(instance_path), horizon, FormFor(conservative));
  });
}

pab_status pab_verify_theorem(uint64_t horizon, uint64_t runs, uint64_t seed, int conservative,
                              unsigned threads, pab_theorem_check* out) {
  return Guard([&] {
    Require(out, "null argument");
    const pab::TheoremCheck check =
        pab::VerifyTheorem(horizon, runs, seed, FormFor(conservative), threads);
    *out = pab_theorem_check{check.empirical_mean, check.empirical_std_error, check.bound,
                             check.holds ? 1 : 0};
  });
}

pab_status pab_server_create(const char* log_path, uint64_t seed, pab_server** out) {
  return Guard([&] {
    Require(out, "null argument");
    pab::SessionManagerOptions options;
    if (log_path) options.log_path = log_path;
    options.seed = seed;
    auto server = std::make_unique<pab_server>();
    server->sessions = std::make_unique<pab::SessionManager>(options);
    server->router = std::make_unique<pab::Router>(*server->sessions);
    *out = server.release();
  });
}

pab_status pab_server_handle(pab_server* server, const char* method, const char* path,
                             const char* body, int* http_status, char** body_out) {
  return Guard([&] {
    Require(server && method && path && http_status && body_out, "null argument");
    const pab::HttpResponse response = server->router->Handle(method, path, body ? body : "");
    *body_out = CopyString(response.body);
    *http_status = response.status;
  });
}

pab_status pab_server_start(pab_server* server, const char* host, int port, int* bound_port) {
  return Guard([&] {
    Require(server && host, "null argument");
    if (server->http) pab::Fail(pab::ErrorCode::kConflict, "server already started");
    auto http = std::make_unique<pab::HttpServer>(*server->router);
    const int bound = http->Bind(host, port);
    server->http = std::move(http);
    server->thread = std::thread([http = server->http.get()] {
      try {
        http->Serve();
      } catch (const std::exception&) {
      }
    });
    server->http->WaitUntilReady();
    if (bound_port) *bound_port = bound;
  });
}

pab_status pab_server_stop(pab_server* server) {
  return Guard([&] {
    Require(server, "server is null");
    if (!server->http) return;
    server->http->Stop();
    if (server->thread.joinable()) server->thread.join();
    server->http.reset();
  });
}

void pab_server_destroy(pab_server* server) {
  if (!server) return;
  pab_server_stop(server);
  delete server;
}

}  // extern "C"
