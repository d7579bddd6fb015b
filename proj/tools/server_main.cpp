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

// codelens-server: HTTP service. Configured through CODELENS_ADDR,
// CODELENS_PORT and CODELENS_CORS_ORIGINS.

#include <iostream>
#include <string_view>

#include <httplib.h>

#include "codelens/service.hpp"

int main(int argc, char** argv) {
  if (argc > 1) {
    const std::string_view arg = argv[1];
    const bool help = arg == "-h" || arg == "--help";
    (help ? std::cout : std::cerr)
        << "usage: codelens-server\n"
           "  CODELENS_ADDR          bind address (127.0.0.1)\n"
           "  CODELENS_PORT          port (8080)\n"
           "  CODELENS_CORS_ORIGINS  comma-separated allowed origins (any)\n"
           "  CODELENS_MAX_BYTES     source size limit (1048576)\n"
           "  CODELENS_PARSE_TIMEOUT_MS  parse timeout (5000)\n";
    return help ? 0 : 1;
  }
  const auto config = codelens::service::Config::from_environment();
  httplib::Server server;
  codelens::service::install_routes(server, config);
  std::cerr << "codelens-server listening on " << config.address << ":" << config.port << "\n";
  if (!server.listen(config.address, config.port)) {
    std::cerr << "codelens-server: cannot bind " << config.address << ":" << config.port << "\n";
    return 1;
  }
  return 0;
}
