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

#include "pab/server/session_manager.hpp"

#include <charconv>

#include "pab/core/error.hpp"
#include "pab/core/rng.hpp"

namespace pab {
namespace {

using nlohmann::json;

std::string MakeId(std::uint64_t seed, std::uint64_t ordinal) {
  char hex[17];
  const std::uint64_t tag = DeriveSeed(seed, Stream::kSession, ordinal) >> 32;
  const auto end = std::to_chars(hex, hex + 16, tag, 16).ptr;
  return "s" + std::to_string(ordinal) + "-" + std::string(hex, end);
}

}  // namespace

SessionManager::SessionManager(SessionManagerOptions options) : options_(std::move(options)) {
  if (!options_.log_path) return;
  if (std::filesystem::exists(*options_.log_path)) Replay(*options_.log_path);
  log_.open(*options_.log_path, std::ios::app);
  if (!log_) Fail(ErrorCode::kIo, options_.log_path->string() + ": cannot open session log");
}

void SessionManager::Replay(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, path.string() + ": cannot read session log");
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(number);
    try {
      const json event = json::parse(line);
      const std::string kind = event.at("event").get<std::string>();
      const std::string id = event.at("id").get<std::string>();
      if (kind == "create") {
        SessionConfig config = SessionConfigFromJson(event.at("config"), 0);
        ++created_;
        CreateLocked(config, id);
      } else if (kind == "act") {
        const ActResult result =
            Find(id)->Act(event.at("action").get<ActionIndex>(), event.at("seq").get<std::uint64_t>());
        if (result.agent_action != event.at("agent_action").get<ActionIndex>()) {
          Fail(ErrorCode::kParse, where + ": replay diverged");
        }
      } else if (kind == "close") {
        Close(id);
      } else {
        Fail(ErrorCode::kParse, where + ": unknown event '" + kind + "'");
      }
    } catch (const json::exception& e) {
      Fail(ErrorCode::kParse, where + ": " + e.what());
    }
  }
}

void SessionManager::Append(const json& event) {
  if (!log_.is_open()) return;
  std::lock_guard<std::mutex> lock(log_mutex_);
  log_ << event.dump() << '\n';
  log_.flush();
  if (!log_) Fail(ErrorCode::kIo, options_.log_path->string() + ": session log write failed");
}

std::shared_ptr<Session> SessionManager::CreateLocked(const SessionConfig& config,
                                                      const std::string& id) {
  auto session = std::make_shared<Session>(id, config);
  sessions_.emplace(id, session);
  return session;
}

std::shared_ptr<Session> SessionManager::Create(const json& body) {
  std::unique_lock lock(mutex_);
  const std::uint64_t ordinal = created_ + 1;
  const SessionConfig config =
      SessionConfigFromJson(body, DeriveSeed(options_.seed, Stream::kSession, ordinal));
  const std::string id = MakeId(options_.seed, ordinal);
  auto session = CreateLocked(config, id);
  created_ = ordinal;
  Append({{"event", "create"}, {"id", id}, {"config", SessionConfigToJson(config)}});
  return session;
}

std::shared_ptr<Session> SessionManager::Find(std::string_view id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) Fail(ErrorCode::kNotFound, "no session '" + std::string(id) + "'");
  return it->second;
}

ActResult SessionManager::Act(std::string_view id, ActionIndex action, std::uint64_t seq) {
  const auto session = Find(id);
  // The session lock orders acts, the log lock orders lines; appending from
  // inside Act keeps both orders the same.
  return session->Act(action, seq, [&](const ActResult& result) {
    Append({{"event", "act"},
            {"id", session->id()},
            {"seq", seq},
            {"action", action},
            {"agent_action", result.agent_action}});
  });
}

SessionSummary SessionManager::Close(std::string_view id) {
  const auto session = Find(id);
  const bool was_closed = session->State().closed;
  SessionSummary summary = session->Close();
  if (was_closed) return summary;
  Append({{"event", "close"}, {"id", session->id()}});
  std::unique_lock lock(mutex_);
  closed_.push_back(session->id());
  while (closed_.size() > options_.max_closed) {
    sessions_.erase(closed_.front());
    closed_.pop_front();
  }
  return summary;
}

std::size_t SessionManager::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

}  // namespace pab
