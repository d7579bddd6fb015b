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

#include <doctest.h>
#include <httplib.h>

#include <string>
#include <thread>

#include "codelens/engine.hpp"
#include "codelens/export.hpp"
#include "codelens/service.hpp"

using namespace codelens;
using exporter::Json;

namespace {

service::Response convert(const Json& body, const Limits& limits = {}) {
  return service::handle_convert(body.dump(), limits);
}

Json request(std::string language, std::string repr, std::string code) {
  Json j = Json::object();
  j["language"] = language;
  j["representation"] = repr;
  j["code"] = code;
  return j;
}

std::string error_code(const service::Response& r) {
  return Json::parse(r.body)["error"]["code"].get<std::string>();
}

// Runs a server on an ephemeral port for the lifetime of the object.
struct LiveServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit LiveServer(const service::Config& config) {
    service::install_routes(server, config);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
};

}  // namespace

TEST_SUITE("service") {

TEST_CASE("convert wraps the engine envelope") {
  const auto body = request("python", "dfg", "a = 1\nb = a\n");
  const auto r = convert(body);
  REQUIRE(r.status == 200);
  engine::ConvertRequest req;
  req.language = Language::kPython;
  req.representation = RepresentationKind::kDfg;
  req.code = "a = 1\nb = a\n";
  const auto direct = engine::convert(req);
  CHECK(r.body.substr(0, 12) == "{\"envelope\":");
  CHECK(r.body.substr(12, direct.envelope.size()) == direct.envelope);
  const auto j = Json::parse(r.body);
  CHECK(j["dot"] == *direct.dot);

  const auto tokens = convert(request("python", "tokens", "x = 1"));
  CHECK(tokens.status == 200);
  CHECK_FALSE(Json::parse(tokens.body).contains("dot"));
}

TEST_CASE("bad requests") {
  CHECK(service::handle_convert("{", {}).status == 400);
  CHECK(service::handle_convert("[]", {}).status == 400);
  CHECK(convert(request("cobol", "ast", "x")).status == 400);
  CHECK(convert(request("python", "bytecode", "x")).status == 400);
  auto missing = request("python", "ast", "x");
  missing.erase("code");
  CHECK(convert(missing).status == 400);
  auto extra = request("python", "ast", "x");
  extra["colour"] = "red";
  CHECK(convert(extra).status == 400);
  auto option = request("python", "ast", "x");
  option["options"]["fast"] = true;
  CHECK(convert(option).status == 400);
  option["options"] = Json{{"strict", "yes"}};
  CHECK(convert(option).status == 400);
  option["options"] = Json{{"vocab", "huge"}};
  CHECK(convert(option).status == 400);
  option["options"] = Json{{"vocab", "default"}, {"pretty", true}};
  CHECK(convert(option).status == 200);
  auto number = request("python", "ast", "x");
  number["code"] = 7;
  const auto r = convert(number);
  CHECK(r.status == 400);
  CHECK(error_code(r) == "bad_request");
  CHECK(convert(request("Python", "AST", "x")).status == 200);
}

TEST_CASE("error statuses") {
  Limits small;
  small.max_source_bytes = 4;
  auto r = convert(request("java", "ast", "class A {}"), small);
  CHECK(r.status == 413);
  CHECK(error_code(r) == "source_too_large");

  auto strict = request("java", "cfg", "class {");
  strict["options"]["strict"] = true;
  r = convert(strict);
  CHECK(r.status == 422);
  CHECK(error_code(r) == "strict_mode_syntax_error");
  const auto diags = Json::parse(r.body)["error"]["diagnostics"];
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0]["span"]["end_byte"].get<int>() <= 7);

  // Invalid UTF-8 cannot travel inside a JSON string.
  r = service::handle_convert(
      "{\"language\":\"python\",\"representation\":\"tokens\",\"code\":\"\xff\"}", {});
  CHECK(r.status == 400);

  Limits instant;
  instant.parse_timeout = std::chrono::milliseconds(0);
  std::string big;
  for (int i = 0; i < 2000; ++i) big += "x = " + std::to_string(i) + "\n";
  r = convert(request("python", "ast", big), instant);
  CHECK(r.status == 504);
  CHECK(error_code(r) == "timeout");
}

TEST_CASE("examples and health") {
  for (const char* lang : {"python", "java", "javascript"}) {
    const auto r = service::handle_examples(lang);
    REQUIRE(r.status == 200);
    const auto list = Json::parse(r.body);
    CHECK(list.size() == 5);
    for (const auto& ex : list) {
      CHECK(ex["id"].get<std::string>().rfind(lang, 0) == 0);
      CHECK_FALSE(ex["code"].get<std::string>().empty());
    }
  }
  CHECK(service::handle_examples("fortran").status == 400);

  const auto h = service::handle_health();
  CHECK(h.status == 200);
  CHECK(h.body == R"({"status":"ok","schema_version":"1.0.0"})");
  CHECK(service::handle_health().body == h.body);
}

TEST_CASE("routes over a socket") {
  LiveServer live(service::Config{});
  httplib::Client client("127.0.0.1", live.port);

  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(health->get_header_value("Content-Type") == "application/json");

  const auto body = request("javascript", "cfg", "if (a) { b(); }\n").dump();
  auto res = client.Post("/api/convert", body, "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == service::handle_convert(body, {}).body);

  auto examples = client.Get("/api/examples?language=java");
  REQUIRE(examples);
  CHECK(examples->status == 200);
  CHECK(Json::parse(examples->body).size() == 5);
  auto no_lang = client.Get("/api/examples");
  REQUIRE(no_lang);
  CHECK(no_lang->status == 400);

  auto preflight = client.Options("/api/convert");
  REQUIRE(preflight);
  CHECK(preflight->status == 204);
  CHECK(preflight->get_header_value("Access-Control-Allow-Methods").find("POST") !=
        std::string::npos);
}

TEST_CASE("oversize body is rejected at the socket") {
  service::Config config;
  config.limits.max_source_bytes = 1000;
  LiveServer live(config);
  httplib::Client client("127.0.0.1", live.port);
  const auto body = request("python", "tokens", std::string(2000, 'x')).dump();
  auto res = client.Post("/api/convert", body, "application/json");
  REQUIRE(res);
  CHECK(res->status == 413);
  const auto huge = request("python", "tokens", std::string(100000, 'x')).dump();
  res = client.Post("/api/convert", huge, "application/json");
  REQUIRE(res);
  CHECK(res->status == 413);
}

TEST_CASE("CORS allow-list") {
  service::Config config;
  config.allowed_origins = {"http://localhost:5173"};
  LiveServer live(config);
  httplib::Client client("127.0.0.1", live.port);
  auto ok = client.Get("/api/health", {{"Origin", "http://localhost:5173"}});
  REQUIRE(ok);
  CHECK(ok->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
  auto other = client.Get("/api/health", {{"Origin", "http://evil.example"}});
  REQUIRE(other);
  CHECK_FALSE(other->has_header("Access-Control-Allow-Origin"));
}

TEST_CASE("config from environment") {
  setenv("CODELENS_PORT", "9123", 1);
  setenv("CODELENS_CORS_ORIGINS", "http://a,http://b", 1);
  const auto c = service::Config::from_environment();
  unsetenv("CODELENS_PORT");
  unsetenv("CODELENS_CORS_ORIGINS");
  CHECK(c.port == 9123);
  CHECK(c.address == "127.0.0.1");
  CHECK(c.allowed_origins == std::vector<std::string>{"http://a", "http://b"});
}

}
