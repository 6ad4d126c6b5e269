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

#include "pab/server/http_server.hpp"

#include "httplib.h"
#include "pab/core/error.hpp"

namespace pab {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Router& router) : impl_(std::make_unique<Impl>()) {
  auto handler = [&router](const httplib::Request& request, httplib::Response& response) {
    const HttpResponse reply = router.Handle(request.method, request.path, request.body);
    response.status = reply.status;
    response.set_content(reply.body, "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Delete(".*", handler);
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) Fail(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::Serve() {
  if (!impl_->server.listen_after_bind()) Fail(ErrorCode::kIo, "server stopped with an error");
}

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void HttpServer::Stop() { impl_->server.stop(); }

}  // namespace pab
