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
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pab/server/session.hpp"

namespace pab {

struct SessionManagerOptions {
  // Append-only JSONL of create/act/close events. Replayed on start.
  std::optional<std::filesystem::path> log_path;
  std::uint64_t seed = 0;  // session ids and default session seeds
  std::size_t max_closed = 1024;
};

class SessionManager {
 public:
  explicit SessionManager(SessionManagerOptions options = {});

  std::shared_ptr<Session> Create(const nlohmann::json& config);
  // Throws kNotFound.
  std::shared_ptr<Session> Find(std::string_view id) const;
  ActResult Act(std::string_view id, ActionIndex action, std::uint64_t seq);
  SessionSummary Close(std::string_view id);
  std::size_t size() const;

 private:
  std::shared_ptr<Session> CreateLocked(const SessionConfig& config, const std::string& id);
  void Append(const nlohmann::json& event);
  void Replay(const std::filesystem::path& path);

  SessionManagerOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::deque<std::string> closed_;
  std::uint64_t created_ = 0;
  std::mutex log_mutex_;
  std::ofstream log_;
};

}  // namespace pab
