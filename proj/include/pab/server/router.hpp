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

#include <string>
#include <string_view>

#include "pab/core/error.hpp"
#include "pab/server/session_manager.hpp"

namespace pab {

struct HttpResponse {
  int status = 200;
  std::string body;
};

int HttpStatusFor(ErrorCode code);

// Transport-free request handling:
//   POST   /sessions             -> 201 {id, state}
//   POST   /sessions/{id}/act    -> 200 {agent_action, team_action, observed_reward, seq, state}
//   GET    /sessions/{id}        -> 200 {state}
//   GET    /sessions/{id}/trace  -> 200 {trace}
//   DELETE /sessions/{id}        -> 200 {summary}
// Every body carries "v"; errors are {"v", "code", "message"}.
class Router {
 public:
  explicit Router(SessionManager& sessions) : sessions_(sessions) {}

  HttpResponse Handle(std::string_view method, std::string_view path, std::string_view body);

 private:
  SessionManager& sessions_;
};

}  // namespace pab
