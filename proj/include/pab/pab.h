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

#ifndef PAB_PAB_H_
#define PAB_PAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PAB_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PAB_API __attribute__((visibility("default")))
#else
#define PAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pab_status {
  PAB_OK = 0,
  PAB_INVALID_ARGUMENT,
  PAB_OUT_OF_RANGE,
  PAB_DEGENERATE,
  PAB_BUDGET_EXHAUSTED,
  PAB_INCOMPATIBLE,
  PAB_IO,
  PAB_PARSE,
  PAB_NOT_FOUND,
  PAB_CONFLICT,
  PAB_GONE,
  PAB_INTERNAL
} pab_status;

/* Message of the last failure on the calling thread; "" if none. */
PAB_API const char* pab_last_error(void);
PAB_API const char* pab_version(void);
PAB_API const char* pab_status_name(pab_status status);
/* Frees strings returned through char** out-parameters. */
PAB_API void pab_string_free(char* text);

/* Experiments */

typedef struct pab_experiment pab_experiment;
typedef struct pab_result pab_result;

PAB_API pab_status pab_experiment_from_json(const char* json, pab_experiment** out);
PAB_API pab_status pab_experiment_load(const char* path, pab_experiment** out);
PAB_API pab_status pab_experiment_set_seed(pab_experiment* experiment, uint64_t seed);
PAB_API pab_status pab_experiment_set_runs(pab_experiment* experiment, uint64_t runs);
PAB_API pab_status pab_experiment_set_horizon(pab_experiment* experiment, uint64_t horizon);
/* threads = 0 uses every hardware thread. */
PAB_API pab_status pab_experiment_run(const pab_experiment* experiment, unsigned threads,
                                      pab_result** out);
PAB_API void pab_experiment_destroy(pab_experiment* experiment);

/* runs or horizon = 0 keeps the figure's default. */
PAB_API pab_status pab_figure_run(const char* name, uint64_t runs, uint64_t horizon,
                                  uint64_t seed, unsigned threads, pab_result** out);
/* Writes the figure names, newline separated. */
PAB_API pab_status pab_figure_names(char** out);

PAB_API size_t pab_result_series_count(const pab_result* result);
/* The label stays valid until the result is destroyed. */
PAB_API pab_status pab_result_series_label(const pab_result* result, size_t series,
                                           const char** out);
PAB_API pab_status pab_result_series_length(const pab_result* result, size_t series,
                                            size_t* out);
/* Mean and standard error of cumulative regret at step t (1-based). */
PAB_API pab_status pab_result_regret_at(const pab_result* result, size_t series, size_t t,
                                        double* mean, double* std_error);

typedef struct pab_diagnostics {
  double doubling_ratio;
  double log_slope;
  double tail_rate;
} pab_diagnostics;

PAB_API pab_status pab_result_diagnostics(const pab_result* result, size_t series,
                                          pab_diagnostics* out);
/* format: "csv" or "json". */
PAB_API pab_status pab_result_export(const pab_result* result, const char* path,
                                     const char* format);
PAB_API pab_status pab_result_load(const char* path, const char* format, pab_result** out);
PAB_API void pab_result_destroy(pab_result* result);

/* Theorem bound */

PAB_API pab_status pab_bound(const char* instance_path, uint64_t horizon, int conservative,
                             double* out);

typedef struct pab_theorem_check {
  double empirical_mean;
  double empirical_std_error;
  double bound;
  int holds;
} pab_theorem_check;

PAB_API pab_status pab_verify_theorem(uint64_t horizon, uint64_t runs, uint64_t seed,
                                      int conservative, unsigned threads,
                                      pab_theorem_check* out);

/* Session server */

typedef struct pab_server pab_server;

/* log_path may be NULL for an in-memory server. */
PAB_API pab_status pab_server_create(const char* log_path, uint64_t seed, pab_server** out);
/* In-process request; *body_out must be released with pab_string_free. */
PAB_API pab_status pab_server_handle(pab_server* server, const char* method, const char* path,
                                     const char* body, int* http_status, char** body_out);
/* Binds (port 0 = any free port) and serves on a background thread. */
PAB_API pab_status pab_server_start(pab_server* server, const char* host, int port,
                                    int* bound_port);
PAB_API pab_status pab_server_stop(pab_server* server);
PAB_API void pab_server_destroy(pab_server* server);

#ifdef __cplusplus
}
#endif

#endif /* PAB_PAB_H_ */
