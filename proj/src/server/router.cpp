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

#include "pab/server/router.hpp"

#include <vector>

#include "pab/core/error.hpp"

namespace pab {
namespace {

using nlohmann::json;

std::vector<std::string_view> Segments(std::string_view path) {
  path = path.substr(0, path.find('?'));
  std::vector<std::string_view> out;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const std::size_t end = path.find('/');
    out.push_back(path.substr(0, end));
    path = end == std::string_view::npos ? std::string_view() : path.substr(end);
  }
  return out;
}

HttpResponse Reply(int status, json body) {
  body["v"] = kSessionFormatVersion;
  return {status, body.dump()};
}

HttpResponse ErrorReply(int status, std::string_view code, const std::string& message) {
  return Reply(status, {{"code", code}, {"message", message}});
}

json ParseBody(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return json::object();
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("request body is not JSON: ") + e.what());
  }
}

template <typename T>
T Field(const json& body, const char* name) {
  if (!body.is_object() || !body.contains(name)) {
    Fail(ErrorCode::kInvalidArgument, std::string("missing field '") + name + "'");
  }
  const json& value = body.at(name);
  if (!value.is_number_unsigned()) {
    Fail(ErrorCode::kInvalidArgument, std::string("field '") + name + "' must be a non-negative integer");
  }
  return value.get<T>();
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kConflict: return 409;
    case ErrorCode::kGone:
    case ErrorCode::kBudgetExhausted: return 410;
    case ErrorCode::kIo: return 500;
    default: return 400;
  }
}

HttpResponse Router::Handle(std::string_view method, std::string_view path, std::string_view body) {
  const auto parts = Segments(path);
  try {
    if (parts.empty() || parts[0] != "sessions" || parts.size() > 3) {
      return ErrorReply(404, "not_found", "no route for " + std::string(path));
    }
    if (parts.size() == 1) {
      if (method != "POST") return ErrorReply(405, "method_not_allowed", "use POST /sessions");
      const auto session = sessions_.Create(ParseBody(body));
      return Reply(201, {{"id", session->id()}, {"state", StateToJson(session->State())}});
    }
    const std::string_view id = parts[1];
    if (parts.size() == 2) {
      if (method == "GET") return Reply(200, {{"state", StateToJson(sessions_.Find(id)->State())}});
      if (method == "DELETE") {
        const auto session = sessions_.Find(id);
        const SessionSummary summary = sessions_.Close(id);
        return Reply(200, {{"id", session->id()},
                           {"summary", SummaryToJson(summary, ActionSpace(session->config().shape))}});
      }
      return ErrorReply(405, "method_not_allowed", "use GET or DELETE");
    }
    if (parts[2] == "act") {
      if (method != "POST") return ErrorReply(405, "method_not_allowed", "use POST");
      const json request = ParseBody(body);
      const auto action = Field<ActionIndex>(request, "action");
      const auto seq = Field<std::uint64_t>(request, "seq");
      const ActResult result = sessions_.Act(id, action, seq);
      return Reply(200, {{"agent_action", result.agent_action},
                         {"team_action", TeamActionToJson(result.team_action)},
                         {"observed_reward", result.observed_reward},
                         {"seq", result.seq},
                         {"state", StateToJson(result.state)}});
    }
    if (parts[2] == "trace") {
      if (method != "GET") return ErrorReply(405, "method_not_allowed", "use GET");
      return Reply(200, {{"trace", PublicTraceToJson(sessions_.Find(id)->Trace())}});
    }
    return ErrorReply(404, "not_found", "no route for " + std::string(path));
  } catch (const Error& e) {
    return ErrorReply(HttpStatusFor(e.code()), ErrorCodeName(e.code()), e.what());
  } catch (const std::exception& e) {
    return ErrorReply(500, "internal", e.what());
  }
}

}  // namespace pab
