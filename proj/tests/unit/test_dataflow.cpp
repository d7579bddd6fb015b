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

#include "codelens/dataflow.hpp"
#include "codelens/syntax.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::testing;

namespace {

dataflow::Dfg dfg_of(Language language, const std::string& code) {
  return dataflow::extract_dfg(syntax::parse({code, language}));
}

}  // namespace

TEST_SUITE("dataflow") {

TEST_CASE("hand-traced fixtures") {
  for (auto language : kAllLanguages) {
    const auto list = fixtures("dfg", language);
    CHECK(list.size() >= 15);
    for (const auto& f : list) {
      CAPTURE(f.source.filename().string());
      const auto code = read_file(f.source);
      const auto ast = syntax::parse({code, language});
      REQUIRE(ast.diagnostics.empty());
      const auto dfg = dataflow::extract_dfg(ast);
      const auto d = diff_unordered(expected_lines(f.expected), render_dfg(dfg));
      INFO(d.describe());
      CHECK(d.empty());
    }
  }
}

TEST_CASE("two uses of one definition") {
  const auto dfg = dfg_of(Language::kPython, "a = 1; b = a + a");
  REQUIRE(dfg.nodes.size() == 4);
  CHECK(dfg.nodes[0].name == "a");
  CHECK(dfg.nodes[0].role == dataflow::Role::kDefinition);
  int comes = 0;
  int computed = 0;
  for (const auto& e : dfg.edges) {
    (e.kind == dataflow::EdgeKind::kComesFrom ? comes : computed)++;
  }
  CHECK(comes == 2);
  CHECK(computed == 2);
}

TEST_CASE("empty program") {
  for (auto language : kAllLanguages) {
    const auto dfg = dfg_of(language, "");
    CHECK(dfg.nodes.empty());
    CHECK(dfg.edges.empty());
  }
}

TEST_CASE("strict mode rejects syntax errors") {
  const auto ast = syntax::parse({"class {", Language::kJava});
  REQUIRE(ast.has_errors());
  CHECK_THROWS_AS(dataflow::extract_dfg(ast, true), Error);
  CHECK_NOTHROW(dataflow::extract_dfg(ast, false));
}

TEST_CASE("invariants and determinism on generated snippets") {
  for (auto language : kAllLanguages) {
    for (const auto& code : generate_snippets(language, 120, 7)) {
      const auto ast = syntax::parse({code, language});
      const auto a = dataflow::extract_dfg(ast);
      const auto b = dataflow::extract_dfg(syntax::parse({code, language}));
      const auto problems = dataflow::check_dfg(a, ast);
      CAPTURE(code);
      CHECK(problems.empty());
      CHECK(a.nodes == b.nodes);
      CHECK(a.edges == b.edges);
    }
  }
}

TEST_CASE("every use edge points at a definition that precedes it or sits in a loop") {
  // comesFrom only links occurrences of the same name.
  for (const auto& code : generate_snippets(Language::kPython, 50, 11)) {
    const auto dfg = dfg_of(Language::kPython, code);
    for (const auto& e : dfg.edges) {
      const auto& src = dfg.nodes[e.src];
      const auto& dst = dfg.nodes[e.dst];
      if (e.kind == dataflow::EdgeKind::kComesFrom) {
        CHECK(src.role == dataflow::Role::kUse);
        CHECK(dst.role == dataflow::Role::kDefinition);
        CHECK(src.name == dst.name);
      } else {
        CHECK(src.role == dataflow::Role::kDefinition);
        CHECK(dst.role == dataflow::Role::kUse);
      }
    }
  }
}

TEST_CASE("deep nesting is rejected, not crashed on") {
  std::string code = "x = ";
  for (int i = 0; i < 5000; ++i) code += "(";
  code += "1";
  for (int i = 0; i < 5000; ++i) code += ")";
  const auto ast = syntax::parse({code, Language::kPython});
  try {
    dataflow::extract_dfg(ast);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidSource);
  }
}

}
