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

#include "codelens/service.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <httplib.h>

#include "codelens/corpus.hpp"
#include "codelens/engine.hpp"
#include "codelens/export.hpp"

namespace codelens::service {
namespace {

using exporter::Json;

constexpr std::size_t kBodySlack = 64 * 1024;

Response error(int status, std::string_view code, const std::string& message,
               const std::vector<Diagnostic>& diagnostics = {}) {
  Json err = Json::object();
  err["code"] = code;
  err["message"] = message;
  err["diagnostics"] = exporter::diagnostics_json(diagnostics);
  Json body = Json::object();
  body["error"] = std::move(err);
  return {status, exporter::serialize(body)};
}

struct BadRequest {
  std::string message;
};

const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw BadRequest{std::string("missing field \"") + key + "\""};
  return *it;
}

std::string require_string(const Json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) throw BadRequest{std::string("field \"") + key + "\" must be a string"};
  return v.get<std::string>();
}

engine::ConvertRequest parse_request(std::string_view body, const Limits& limits) {
  Json doc;
  try {
    doc = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw BadRequest{std::string("malformed JSON: ") + e.what()};
  }
  if (!doc.is_object()) throw BadRequest{"request body must be a JSON object"};
  for (const auto& [key, _] : doc.items()) {
    if (key != "language" && key != "representation" && key != "code" && key != "options") {
      throw BadRequest{"unknown field \"" + key + "\""};
    }
  }
  engine::ConvertRequest req;
  req.limits = limits;
  const auto lang = require_string(doc, "language");
  const auto language = parse_language(lang);
  if (!language) throw BadRequest{"unknown language \"" + lang + "\""};
  req.language = *language;
  const auto repr = require_string(doc, "representation");
  const auto representation = parse_representation(repr);
  if (!representation) throw BadRequest{"unknown representation \"" + repr + "\""};
  req.representation = *representation;
  req.code = require_string(doc, "code");

  if (auto it = doc.find("options"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw BadRequest{"options must be an object"};
    for (const auto& [key, value] : it->items()) {
      if (key == "strict" || key == "pretty") {
        if (!value.is_boolean()) throw BadRequest{"option \"" + key + "\" must be a boolean"};
        (key == "strict" ? req.strict : req.pretty) = value.get<bool>();
      } else if (key == "vocab") {
        if (!value.is_string()) throw BadRequest{"option \"vocab\" must be a string"};
        const auto name = value.get<std::string>();
        req.vocab = corpus::named_vocabulary(name);
        if (!req.vocab) throw BadRequest{"unknown vocabulary \"" + name + "\""};
      } else {
        throw BadRequest{"unknown option \"" + key + "\""};
      }
    }
  }
  return req;
}

}  // namespace

Config Config::from_environment() {
  Config c;
  c.limits = Limits::from_environment();
  if (const char* v = std::getenv("CODELENS_ADDR"); v && *v) c.address = v;
  if (const char* v = std::getenv("CODELENS_PORT"); v && *v) c.port = std::atoi(v);
  if (const char* v = std::getenv("CODELENS_CORS_ORIGINS"); v && *v) {
    std::stringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty() && item != "*") c.allowed_origins.push_back(item);
    }
  }
  return c;
}

Response handle_convert(std::string_view body, const Limits& limits) {
  engine::ConvertRequest req;
  try {
    req = parse_request(body, limits);
  } catch (const BadRequest& e) {
    return error(400, "bad_request", e.message);
  }
  try {
    const auto result = engine::convert(req);
    std::string out = "{\"envelope\":" + result.envelope;
    if (result.dot) out += ",\"dot\":" + exporter::serialize(Json(*result.dot));
    out += "}";
    return {200, std::move(out)};
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kSourceTooLarge:
        return error(413, "source_too_large", e.what(), e.diagnostics());
      case ErrorCode::kStrictModeSyntaxError:
        return error(422, "strict_mode_syntax_error", e.what(), e.diagnostics());
      case ErrorCode::kTimeout:
        return error(504, "timeout", e.what(), e.diagnostics());
      case ErrorCode::kInvalidSource:
        return error(422, "invalid_source", e.what(), e.diagnostics());
      default:
        return error(500, "internal", e.what(), e.diagnostics());
    }
  }
}

Response handle_examples(std::string_view language) {
  const auto lang = parse_language(language);
  if (!lang) return error(400, "bad_request", "unknown language \"" + std::string(language) + "\"");
  Json list = Json::array();
  for (const auto& ex : corpus::examples(*lang)) {
    Json j = Json::object();
    j["id"] = ex.id;
    j["title"] = ex.title;
    j["code"] = ex.code;
    list.push_back(std::move(j));
  }
  return {200, exporter::serialize(list)};
}

Response handle_health() {
  Json j = Json::object();
  j["status"] = "ok";
  j["schema_version"] = kSchemaVersion;
  return {200, exporter::serialize(j)};
}

void install_routes(httplib::Server& server, const Config& config) {
  const auto limits = config.limits;
  const auto origins = config.allowed_origins;
  constexpr const char* kJson = "application/json";

  server.set_payload_max_length(limits.max_source_bytes * 6 + kBodySlack);
  server.set_read_timeout(config.request_timeout_s, 0);
  server.set_write_timeout(config.request_timeout_s, 0);

  server.set_post_routing_handler([origins](const httplib::Request& req, httplib::Response& res) {
    if (origins.empty()) {
      res.set_header("Access-Control-Allow-Origin", "*");
    } else if (req.has_header("Origin")) {
      const auto origin = req.get_header_value("Origin");
      if (std::find(origins.begin(), origins.end(), origin) != origins.end()) {
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Vary", "Origin");
      }
    }
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });

  server.Post("/api/convert", [limits](const httplib::Request& req, httplib::Response& res) {
    auto r = handle_convert(req.body, limits);
    res.status = r.status;
    res.set_content(std::move(r.body), kJson);
  });
  server.Get("/api/examples", [](const httplib::Request& req, httplib::Response& res) {
    Response r = req.has_param("language")
                     ? handle_examples(req.get_param_value("language"))
                     : error(400, "bad_request", "missing query parameter \"language\"");
    res.status = r.status;
    res.set_content(std::move(r.body), kJson);
  });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    auto r = handle_health();
    res.status = r.status;
    res.set_content(std::move(r.body), kJson);
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        auto r = error(500, "internal", message);
        res.status = r.status;
        res.set_content(std::move(r.body), kJson);
      });
}

}  // namespace codelens::service
