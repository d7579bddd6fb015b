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

#include <cstdlib>

#include "codelens/core.hpp"

using namespace codelens;

TEST_SUITE("core") {

TEST_CASE("wire names round-trip") {
  for (auto language : kAllLanguages) CHECK(parse_language(to_string(language)) == language);
  for (auto kind : kAllRepresentations) CHECK(parse_representation(to_string(kind)) == kind);
  CHECK(parse_language("Python") == Language::kPython);
  CHECK(parse_language("JAVA") == Language::kJava);
  CHECK_FALSE(parse_language("cobol"));
  CHECK_FALSE(parse_language("Fortran"));
  CHECK_FALSE(parse_language(""));
  CHECK_FALSE(parse_representation("graph"));
}

TEST_CASE("line index") {
  const std::string text = "ab\ncd\n\nef";
  LineIndex idx(text);
  CHECK(idx.line_count() == 4);
  CHECK(idx.line_of(0) == 0);
  CHECK(idx.line_of(2) == 0);
  CHECK(idx.line_of(3) == 1);
  CHECK(idx.line_of(6) == 2);
  CHECK(idx.line_of(7) == 3);
  CHECK(idx.line_of(9) == 3);
  const auto s = idx.span(4, 8);
  CHECK(s.start_line == 1);
  CHECK(s.start_col == 1);
  CHECK(s.end_line == 3);
  CHECK(s.end_col == 1);
  CHECK(s.size() == 4);
}

TEST_CASE("span containment") {
  Span outer{0, 10, 0, 0, 0, 10};
  Span inner{2, 5, 0, 2, 0, 5};
  CHECK(outer.contains(inner));
  CHECK_FALSE(inner.contains(outer));
  CHECK(outer.contains(outer));
}

TEST_CASE("utf-8 validation") {
  CHECK(is_valid_utf8(""));
  CHECK(is_valid_utf8("plain ascii"));
  CHECK(is_valid_utf8("h\xC3\xA9llo \xE2\x9C\x93 \xF0\x9F\x98\x80"));
  CHECK_FALSE(is_valid_utf8("\xC3"));
  CHECK_FALSE(is_valid_utf8("\xC0\xAF"));            // overlong
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));        // surrogate
  CHECK_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));    // above U+10FFFF
  CHECK_FALSE(is_valid_utf8("abc\xFF"));
  // Long ASCII prefix followed by a bad byte exercises the vector path.
  std::string long_text(1000, 'a');
  CHECK(is_valid_utf8(long_text));
  long_text[777] = '\x80';
  CHECK_FALSE(is_valid_utf8(long_text));
}

TEST_CASE("validate_source") {
  Limits limits;
  limits.max_source_bytes = 8;
  CHECK(validate_source({"x = 1", Language::kPython}, limits).empty());
  const auto big = validate_source({"123456789", Language::kPython}, limits);
  REQUIRE(big.size() == 1);
  CHECK(big[0].message.find("size limit") != std::string::npos);
  const auto bad = validate_source({"a\n\xFF", Language::kPython}, limits);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].span.start_line == 1);
  CHECK(bad[0].span.start_col == 0);
  CHECK(bad[0].span.size() == 1);
}

TEST_CASE("limits from environment") {
  setenv("CODELENS_MAX_BYTES", "1234", 1);
  setenv("CODELENS_PARSE_TIMEOUT_MS", "77", 1);
  const auto limits = Limits::from_environment();
  CHECK(limits.max_source_bytes == 1234);
  CHECK(limits.parse_timeout.count() == 77);
  unsetenv("CODELENS_MAX_BYTES");
  unsetenv("CODELENS_PARSE_TIMEOUT_MS");
  CHECK(Limits::from_environment().max_source_bytes == Limits{}.max_source_bytes);
}

}
