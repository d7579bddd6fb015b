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

#include <map>
#include <set>

#include "codelens/controlflow.hpp"
#include "codelens/corpus.hpp"
#include "codelens/syntax.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::testing;
using controlflow::BlockKind;
using controlflow::EdgeLabel;

namespace {

controlflow::CfgSet cfg_of(Language language, const std::string& code) {
  return controlflow::extract_cfg(syntax::parse({code, language}));
}

// Statement-level nodes every graph must account for: the statement spans
// of all blocks, collected per graph.
std::size_t statement_count(const controlflow::CfgSet& set) {
  std::size_t n = 0;
  for (const auto& g : set.graphs) {
    for (const auto& b : g.blocks) n += b.statements.size();
  }
  return n;
}

}  // namespace

TEST_SUITE("controlflow") {

TEST_CASE("hand-constructed fixtures") {
  for (auto language : kAllLanguages) {
    const auto list = fixtures("cfg", language);
    CHECK(list.size() >= 15);
    for (const auto& f : list) {
      CAPTURE(f.source.filename().string());
      const auto code = read_file(f.source);
      const auto ast = syntax::parse({code, language});
      REQUIRE(ast.diagnostics.empty());
      const auto cfgs = controlflow::extract_cfg(ast);
      const auto d = diff_ordered(expected_lines(f.expected), render_cfg(cfgs));
      INFO(d.describe());
      CHECK(d.empty());
      for (const auto& g : cfgs.graphs) {
        CAPTURE(g.function_name);
        CHECK(controlflow::check_cfg(g).empty());
      }
    }
  }
}

TEST_CASE("if/else inside a function has six blocks and six edges") {
  const auto set = cfg_of(Language::kPython,
                          "def f(x):\n    if x:\n        y = 1\n    else:\n        y = 2\n"
                          "    return y\n");
  REQUIRE(set.graphs.size() == 2);
  const auto& g = set.graphs[1];
  CHECK(g.function_name == "f");
  CHECK(g.blocks.size() == 6);
  CHECK(g.edges.size() == 6);
  int conditions = 0;
  for (const auto& b : g.blocks) conditions += b.kind == BlockKind::kCondition;
  CHECK(conditions == 1);
}

TEST_CASE("empty program is entry to exit") {
  for (auto language : kAllLanguages) {
    const auto set = cfg_of(language, "");
    REQUIRE(set.graphs.size() == 1);
    const auto& g = set.graphs[0];
    CHECK(g.function_name == "<module>");
    REQUIRE(g.blocks.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].src == g.entry);
    CHECK(g.edges[0].dst == g.exit);
    CHECK(g.blocks[g.entry].span == Span{});
  }
}

TEST_CASE("graph names are unique") {
  const auto set = cfg_of(Language::kJavaScript,
                          "function f() {}\nfunction f() {}\nconst g = function () { return 1; };\n"
                          "class K { m() { return 2; } }\n");
  std::set<std::string> names;
  for (const auto& g : set.graphs) CHECK(names.insert(g.function_name).second);
  CHECK(names.count("K.m") == 1);
  CHECK(names.count("g") == 1);
}

TEST_CASE("structural invariants on the bundled examples and generated snippets") {
  std::vector<std::pair<Language, std::string>> inputs;
  for (const auto& ex : corpus::all_examples()) inputs.emplace_back(ex.language, std::string(ex.code));
  for (auto language : kAllLanguages) {
    for (auto& code : generate_snippets(language, 120, 5)) inputs.emplace_back(language, code);
  }
  for (const auto& [language, code] : inputs) {
    const auto a = cfg_of(language, code);
    const auto b = cfg_of(language, code);
    CAPTURE(code);
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i) {
      const auto& g = a.graphs[i];
      CAPTURE(g.function_name);
      CHECK(controlflow::check_cfg(g).empty());
      CHECK(g.blocks == b.graphs[i].blocks);
      CHECK(g.edges == b.graphs[i].edges);
    }
  }
}

TEST_CASE("statements are partitioned across blocks") {
  // No statement node may appear in two blocks of the same graph.
  for (auto language : kAllLanguages) {
    for (const auto& code : generate_snippets(language, 60, 9)) {
      const auto set = cfg_of(language, code);
      for (const auto& g : set.graphs) {
        std::set<syntax::NodeId> seen;
        for (const auto& b : g.blocks) {
          for (const auto& s : b.statements) CHECK(seen.insert(s.ast_node).second);
        }
      }
      CHECK(statement_count(set) > 0);
    }
  }
}

TEST_CASE("condition edges are exactly true and false") {
  for (const auto& code : generate_snippets(Language::kJavaScript, 60, 21)) {
    for (const auto& g : cfg_of(Language::kJavaScript, code).graphs) {
      std::map<std::uint32_t, std::multiset<EdgeLabel>> out;
      for (const auto& e : g.edges) out[e.src].insert(e.label);
      for (const auto& b : g.blocks) {
        if (b.kind != BlockKind::kCondition) continue;
        CHECK(out[b.id] == std::multiset<EdgeLabel>{EdgeLabel::kTrue, EdgeLabel::kFalse});
      }
    }
  }
}

TEST_CASE("long statements are cut in excerpts") {
  std::string code = "x = " + std::string(300, '1') + "\n";
  const auto set = cfg_of(Language::kPython, code);
  const auto& text = set.graphs[0].blocks[1].statements[0].text;
  CHECK(text.size() <= 124);
  CHECK(text.ends_with(" ..."));
}

}
