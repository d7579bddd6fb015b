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

#include <functional>

#include "codelens/corpus.hpp"
#include "codelens/syntax.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::syntax;
using namespace codelens::testing;

namespace {

std::size_t depth(const Ast& ast, NodeId id) {
  std::size_t d = 0;
  for (auto c : ast.node(id).children) d = std::max(d, depth(ast, c));
  return d + 1;
}

}  // namespace

TEST_SUITE("syntax") {

TEST_CASE("x = 1") {
  const auto ast = parse({"x = 1", Language::kPython});
  CHECK(ast.diagnostics.empty());
  CHECK(ast.root == 0);
  CHECK(ast.root_node().kind == "module");
  CHECK(depth(ast, ast.root) >= 2);
  std::size_t edges = 0;
  for (const auto& n : ast.nodes) edges += n.children.size();
  CHECK(edges == ast.nodes.size() - 1);
  bool saw_x = false;
  for (const auto& n : ast.nodes) {
    if (n.kind == "identifier") {
      saw_x = true;
      CHECK(n.text == "x");
      CHECK(n.named);
    }
    if (n.kind == "=") CHECK_FALSE(n.named);
  }
  CHECK(saw_x);
}

TEST_CASE("empty module is a single node") {
  for (auto language : kAllLanguages) {
    const auto ast = parse({"", language});
    CHECK(ast.nodes.size() == 1);
    CHECK(ast.diagnostics.empty());
  }
}

TEST_CASE("syntax errors stay in the tree") {
  const auto ast = parse({"class {", Language::kJava});
  CHECK(ast.has_errors());
  REQUIRE_FALSE(ast.diagnostics.empty());
  const auto& d = ast.diagnostics.front();
  CHECK(d.severity == Severity::kError);
  CHECK(d.span.end_byte <= 7);
  CHECK(d.span.start_byte <= d.span.end_byte);
  bool error_node = false;
  for (const auto& n : ast.nodes) error_node |= n.is_error() || n.kind == "MISSING";
  CHECK((error_node || ast.diagnostics.size() > 0));
  CHECK(check_tree(ast, "class {").empty());
}

TEST_CASE("strict mode") {
  ParseOptions opts;
  opts.strict = true;
  try {
    parse({"def f(:\n", Language::kPython}, opts);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kStrictModeSyntaxError);
    CHECK_FALSE(e.diagnostics().empty());
  }
  CHECK_NOTHROW(parse({"def f(): pass\n", Language::kPython}, opts));
}

TEST_CASE("input validation") {
  ParseOptions opts;
  opts.limits.max_source_bytes = 4;
  try {
    parse({"x = 10", Language::kPython}, opts);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSourceTooLarge);
  }
  try {
    parse({"x\xFF", Language::kPython});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidSource);
  }
}

TEST_CASE("timeout") {
  ParseOptions opts;
  opts.limits.parse_timeout = std::chrono::milliseconds(0);
  std::string code;
  for (int i = 0; i < 2000; ++i) code += "x = [1, 2, 3]\n";
  try {
    parse({code, Language::kPython}, opts);
    FAIL("expected a timeout");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTimeout);
  }
}

TEST_CASE("comments are not part of the tree") {
  const auto ast = parse({"# hi\nx = 1  # there\n", Language::kPython});
  for (const auto& n : ast.nodes) CHECK(n.kind != "comment");
  CHECK(ast.root_node().span.end_byte == 20);
}

TEST_CASE("named subtree keeps named nodes only") {
  const auto ast = parse({"if (a) { b(); }", Language::kJavaScript});
  const auto named = named_subtree(ast);
  CHECK(named.nodes.size() < ast.nodes.size());
  for (const auto& n : named.nodes) CHECK(n.named);
  CHECK(check_tree(named, "if (a) { b(); }").empty());
}

TEST_CASE("fields are recorded") {
  const auto ast = parse({"if x:\n    y\n", Language::kPython});
  bool found = false;
  for (const auto& n : ast.nodes) {
    if (n.kind == "if_statement") {
      found = true;
      CHECK(ast.child_by_field(n.id, "condition").has_value());
      CHECK(ast.child_by_field(n.id, "consequence").has_value());
      CHECK_FALSE(ast.child_by_field(n.id, "alternative").has_value());
    }
  }
  CHECK(found);
}

TEST_CASE("well-formed trees on every corpus file and snippet") {
  std::size_t files = 0;
  for (const auto& ex : corpus::all_examples()) {
    const std::string code(ex.code);
    const auto ast = parse({code, ex.language});
    CAPTURE(ex.id);
    CHECK(ast.diagnostics.empty());
    CHECK(check_tree(ast, code).empty());
    ++files;
  }
  for (auto language : kAllLanguages) {
    for (const auto& code : generate_snippets(language, 120, 13)) {
      const auto ast = parse({code, language});
      CAPTURE(code);
      CHECK(ast.diagnostics.empty());
      CHECK(check_tree(ast, code).empty());
      const auto again = parse({code, language});
      REQUIRE(again.nodes.size() == ast.nodes.size());
      for (std::size_t i = 0; i < ast.nodes.size(); ++i) {
        CHECK(again.nodes[i].kind == ast.nodes[i].kind);
        CHECK(again.nodes[i].span == ast.nodes[i].span);
      }
      ++files;
    }
  }
  CHECK(files == 15 + 360);
}

TEST_CASE("check_tree reports broken trees") {
  auto ast = parse({"x = 1", Language::kPython});
  REQUIRE(ast.nodes.size() > 2);
  ast.nodes[1].span.end_byte = 100;
  CHECK_FALSE(check_tree(ast, "x = 1").empty());
}

}
