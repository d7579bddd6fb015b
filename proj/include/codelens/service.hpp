// Copyright 2026 The CodeLens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP facade: POST /api/convert, GET /api/examples, GET /api/health.

#ifndef CODELENS_SERVICE_HPP_
#define CODELENS_SERVICE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "codelens/core.hpp"

namespace httplib {
class Server;
}

namespace codelens::service {

struct Config {
  std::string address = "127.0.0.1";
  int port = 8080;
  // Empty allows any origin.
  std::vector<std::string> allowed_origins;
  Limits limits;
  // Socket read/write timeout in seconds.
  int request_timeout_s = 10;

  // CODELENS_ADDR, CODELENS_PORT, CODELENS_CORS_ORIGINS (comma separated),
  // plus the Limits variables.
  static Config from_environment();
};

struct Response {
  int status = 200;
  std::string body;
};

// Handlers are plain functions of the request so they can be tested
// without a socket.
Response handle_convert(std::string_view body, const Limits& limits);
Response handle_examples(std::string_view language);
Response handle_health();

void install_routes(httplib::Server& server, const Config& config);

}  // namespace codelens::service

#endif  // CODELENS_SERVICE_HPP_
