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

#include <chrono>
#include <string>
#include <vector>

#include "codelens/engine.hpp"
#include "codelens/export.hpp"

using namespace codelens;
using exporter::Json;

namespace {

engine::ConvertRequest request(Language language, RepresentationKind repr, std::string code) {
  engine::ConvertRequest r;
  r.language = language;
  r.representation = repr;
  r.code = std::move(code);
  return r;
}

ErrorCode error_of(const engine::ConvertRequest& r) {
  try {
    engine::convert(r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("envelope echoes the request") {
  for (auto language : kAllLanguages) {
    for (auto repr : kAllRepresentations) {
      const auto res = engine::convert(request(language, repr, ""));
      const auto j = Json::parse(res.envelope);
      CHECK(j["language"] == to_string(language));
      CHECK(j["representation"] == to_string(repr));
      CHECK(j["diagnostics"].empty());
      CHECK(res.dot.has_value() == (repr != RepresentationKind::kTokens));
    }
  }
}

TEST_CASE("size limit") {
  auto r = request(Language::kPython, RepresentationKind::kTokens, std::string(11, 'x'));
  r.limits.max_source_bytes = 10;
  CHECK(error_of(r) == ErrorCode::kSourceTooLarge);
  r.representation = RepresentationKind::kCfg;
  CHECK(error_of(r) == ErrorCode::kSourceTooLarge);
  r.code.pop_back();
  CHECK_NOTHROW(engine::convert(r));
}

TEST_CASE("invalid UTF-8") {
  for (auto repr : kAllRepresentations) {
    CHECK(error_of(request(Language::kJavaScript, repr, "x = '\xff';")) ==
          ErrorCode::kInvalidSource);
  }
}

TEST_CASE("strict mode") {
  auto r = request(Language::kJava, RepresentationKind::kAst, "class {");
  const auto lenient = Json::parse(engine::convert(r).envelope);
  CHECK_FALSE(lenient["diagnostics"].empty());
  r.strict = true;
  try {
    engine::convert(r);
    FAIL("expected strict error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kStrictModeSyntaxError);
    REQUIRE_FALSE(e.diagnostics().empty());
    CHECK(e.diagnostics()[0].span.end_byte <= 7);
  }
  r.representation = RepresentationKind::kDfg;
  CHECK(error_of(r) == ErrorCode::kStrictModeSyntaxError);
  r.representation = RepresentationKind::kCfg;
  CHECK(error_of(r) == ErrorCode::kStrictModeSyntaxError);
  // Tokens never parse.
  r.representation = RepresentationKind::kTokens;
  CHECK_NOTHROW(engine::convert(r));
}

TEST_CASE("parse timeout") {
  std::string code;
  for (int i = 0; i < 2000; ++i) code += "x" + std::to_string(i) + " = " + std::to_string(i) + "\n";
  auto r = request(Language::kPython, RepresentationKind::kAst, code);
  r.limits.parse_timeout = std::chrono::milliseconds(0);
  CHECK(error_of(r) == ErrorCode::kTimeout);
}

TEST_CASE("pretty and vocab options") {
  auto r = request(Language::kPython, RepresentationKind::kTokens, "x = 1");
  const auto compact = engine::convert(r).envelope;
  r.pretty = true;
  const auto pretty = engine::convert(r).envelope;
  CHECK(pretty != compact);
  CHECK(Json::parse(pretty) == Json::parse(compact));

  const std::vector<std::string> corpus{"xx = 1"};
  const auto tiny = tokenizer::train_bpe(corpus, 0);
  r.code = "xx = 1";
  r.pretty = false;
  r.vocab = &tiny;
  const auto j = Json::parse(engine::convert(r).envelope);
  const auto direct = tokenizer::encode(r.code, tiny);
  REQUIRE(j["payload"]["tokens"].size() == direct.ids.size());
  CHECK(direct.ids.size() == 4);
  for (std::size_t i = 0; i < direct.ids.size(); ++i) {
    CHECK(j["payload"]["tokens"][i]["id"] == direct.ids[i]);
  }
}

}
