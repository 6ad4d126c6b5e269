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

// Command-line front end over the C API.

#include <pthread.h>
#include <signal.h>

#include <csignal>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "pab/pab.h"

namespace {

struct CliError {
  std::string message;
};

void Check(pab_status status) {
  if (status != PAB_OK) {
    throw CliError{std::string(pab_status_name(status)) + ": " + pab_last_error()};
  }
}

void PrintResult(const pab_result* result) {
  const size_t count = pab_result_series_count(result);
  for (size_t s = 0; s < count; ++s) {
    const char* label = nullptr;
    size_t length = 0;
    double mean = 0.0, std_error = 0.0;
    pab_diagnostics diagnostics{};
    Check(pab_result_series_label(result, s, &label));
    Check(pab_result_series_length(result, s, &length));
    Check(pab_result_regret_at(result, s, length, &mean, &std_error));
    Check(pab_result_diagnostics(result, s, &diagnostics));
    std::printf("%-24s T=%zu  regret=%.3f +- %.3f  rho=%.4f  slope=%.3f  tail=%.5f\n",
                label[0] ? label : "(unlabeled)", length, mean, std_error,
                diagnostics.doubling_ratio, diagnostics.log_slope, diagnostics.tail_rate);
  }
}

class ResultHandle {
 public:
  ResultHandle() = default;
  ~ResultHandle() { pab_result_destroy(result_); }
  ResultHandle(const ResultHandle&) = delete;
  ResultHandle& operator=(const ResultHandle&) = delete;
  pab_result** out() { return &result_; }
  const pab_result* get() const { return result_; }

 private:
  pab_result* result_ = nullptr;
};

int Serve(const std::string& host, int port, const std::string& log, std::uint64_t seed) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  pab_server* server = nullptr;
  Check(pab_server_create(log.empty() ? nullptr : log.c_str(), seed, &server));
  int bound = 0;
  const pab_status started = pab_server_start(server, host.c_str(), port, &bound);
  if (started != PAB_OK) {
    pab_server_destroy(server);
    Check(started);
  }
  std::printf("listening on http://%s:%d\n", host.c_str(), bound);
  std::fflush(stdout);
  int received = 0;
  sigwait(&signals, &received);
  pab_server_destroy(server);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partner-aware bandit simulations and session server"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for batches (0 = all cores)");

  auto* run = app.add_subcommand("run", "Run a batch from a JSON experiment config");
  std::string config_path, out_path, format = "csv";
  std::uint64_t seed = 0, runs = 0, horizon = 0;
  bool has_seed = false;
  run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
  auto* seed_option = run->add_option("--seed", seed, "Base seed (overrides the config)");
  run->add_option("--runs", runs, "Run count (overrides the config)");
  run->add_option("--horizon", horizon, "Horizon T (overrides the config)");
  run->add_option("--out", out_path, "Write the aggregate to this file");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* figure = app.add_subcommand("figure", "Reproduce one simulation figure");
  std::string figure_name, out_dir = ".";
  bool list = false;
  figure->add_option("name", figure_name, "Figure name");
  figure->add_flag("--list", list, "List figure names");
  figure->add_option("--runs", runs, "Run count (default 100)");
  figure->add_option("--horizon", horizon, "Horizon (default per figure)");
  figure->add_option("--seed", seed, "Base seed");
  figure->add_option("--out-dir", out_dir, "Directory for <name>.<format>");
  figure->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* bound = app.add_subcommand("bound", "Evaluate the logarithmic regret bound");
  std::string instance_path;
  bool conservative = false;
  bound->add_option("--instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  bound->add_option("--horizon", horizon, "Horizon T")->required();
  bound->add_flag("--conservative", conservative, "Use p_min in the within-row sum");

  auto* verify = app.add_subcommand("verify-theorem", "Theorem-mode batch against the bound");
  std::uint64_t verify_runs = 100, verify_horizon = 10000;
  verify->add_option("--runs", verify_runs, "Run count");
  verify->add_option("--horizon", verify_horizon, "Horizon T");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_flag("--conservative", conservative, "Use p_min in the within-row sum");

  auto* serve = app.add_subcommand("serve", "Serve human-play sessions over HTTP");
  std::string host = "127.0.0.1", log_path;
  int port = 8080;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 = any free port)");
  serve->add_option("--log", log_path, "Append-only session log, replayed on start");
  serve->add_option("--seed", seed, "Seed for session ids and default session seeds");

  CLI11_PARSE(app, argc, argv);
  has_seed = seed_option->count() > 0;

  try {
    if (*run) {
      pab_experiment* experiment = nullptr;
      Check(pab_experiment_load(config_path.c_str(), &experiment));
      std::unique_ptr<pab_experiment, void (*)(pab_experiment*)> owner(experiment,
                                                                      pab_experiment_destroy);
      if (has_seed) Check(pab_experiment_set_seed(experiment, seed));
      if (runs) Check(pab_experiment_set_runs(experiment, runs));
      if (horizon) Check(pab_experiment_set_horizon(experiment, horizon));
      ResultHandle result;
      Check(pab_experiment_run(experiment, threads, result.out()));
      PrintResult(result.get());
      if (!out_path.empty()) Check(pab_result_export(result.get(), out_path.c_str(), format.c_str()));
    } else if (*figure) {
      if (list || figure_name.empty()) {
        char* names = nullptr;
        Check(pab_figure_names(&names));
        std::fputs(names, stdout);
        pab_string_free(names);
        return list ? 0 : 1;
      }
      ResultHandle result;
      Check(pab_figure_run(figure_name.c_str(), runs, horizon, seed, threads, result.out()));
      PrintResult(result.get());
      std::filesystem::create_directories(out_dir);
      const std::string path = (std::filesystem::path(out_dir) / (figure_name + "." + format)).string();
      Check(pab_result_export(result.get(), path.c_str(), format.c_str()));
      std::printf("wrote %s\n", path.c_str());
    } else if (*bound) {
      double value = 0.0;
      Check(pab_bound(instance_path.c_str(), horizon, conservative ? 1 : 0, &value));
      std::printf("%.6f\n", value);
    } else if (*verify) {
      pab_theorem_check check{};
      Check(pab_verify_theorem(verify_horizon, verify_runs, seed, conservative ? 1 : 0, threads,
                               &check));
      std::printf("empirical mean regret %.3f +- %.3f, bound %.3f: %s\n", check.empirical_mean,
                  check.empirical_std_error, check.bound, check.holds ? "holds" : "VIOLATED");
      return check.holds ? 0 : 2;
    } else if (*serve) {
      return Serve(host, port, log_path, seed);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
