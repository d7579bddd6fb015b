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

#include "codelens/corpus.hpp"
#include "codelens/engine.hpp"
#include "codelens/export.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::testing;
using exporter::Json;

namespace {

engine::ConvertResult run(Language language, RepresentationKind repr, const std::string& code,
                          bool pretty = false) {
  engine::ConvertRequest req;
  req.language = language;
  req.representation = repr;
  req.code = code;
  req.pretty = pretty;
  return engine::convert(req);
}

void check_span(const Json& span, std::size_t size) {
  const auto sb = span.at("start_byte").get<std::size_t>();
  const auto eb = span.at("end_byte").get<std::size_t>();
  CHECK(sb <= eb);
  CHECK(eb <= size);
  const auto sl = span.at("start_line").get<std::size_t>();
  const auto el = span.at("end_line").get<std::size_t>();
  CHECK(sl <= el);
  if (sl == el) CHECK(span.at("start_col").get<std::size_t>() <= span.at("end_col").get<std::size_t>());
}

// Walks every "span" object in a JSON value.
void check_spans(const Json& j, std::size_t size) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "span") {
        check_span(v, size);
      } else {
        check_spans(v, size);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) check_spans(v, size);
  }
}

const std::string kIfElse =
    "def f(x):\n    if x:\n        y = 1\n    else:\n        y = 2\n    return y\n";

}  // namespace

TEST_SUITE("export") {

TEST_CASE("envelope keys in schema order") {
  const auto r = run(Language::kPython, RepresentationKind::kTokens, "x = 1");
  const auto j = Json::parse(r.envelope);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "language", "representation", "payload",
                                         "diagnostics"});
  CHECK(j["schema_version"] == "1.0.0");
  CHECK(j["language"] == "python");
  CHECK(j["representation"] == "tokens");
  CHECK(j["payload"]["tokens"].size() == 3);
  CHECK(j["payload"]["tokens"][0]["span"]["end_byte"] == 1);
  CHECK_FALSE(r.dot.has_value());
  CHECK(r.envelope.find('\n') == std::string::npos);
}

TEST_CASE("pretty output keeps key order") {
  const auto compact = run(Language::kPython, RepresentationKind::kAst, "x = 1");
  const auto pretty = run(Language::kPython, RepresentationKind::kAst, "x = 1", true);
  CHECK(pretty.envelope.find("\n  \"language\"") != std::string::npos);
  CHECK(Json::parse(pretty.envelope) == Json::parse(compact.envelope));
  CHECK(exporter::serialize(Json::parse(pretty.envelope)) == compact.envelope);
}

TEST_CASE("canonical form and spans on every example and representation") {
  for (const auto& ex : corpus::all_examples()) {
    const std::string code(ex.code);
    for (auto repr : kAllRepresentations) {
      CAPTURE(ex.id);
      CAPTURE(to_string(repr));
      const auto a = run(ex.language, repr, code);
      const auto b = run(ex.language, repr, code);
      CHECK(a.envelope == b.envelope);
      CHECK(a.dot == b.dot);
      const auto j = Json::parse(a.envelope);
      CHECK(exporter::serialize(j) == a.envelope);
      CHECK(exporter::serialize(j, true) == run(ex.language, repr, code, true).envelope);
      check_spans(j, code.size());
    }
  }
}

TEST_CASE("AST payload") {
  const auto j = Json::parse(run(Language::kPython, RepresentationKind::kAst, "").envelope);
  CHECK(j["payload"]["root"] == 0);
  CHECK(j["payload"]["nodes"].size() == 1);

  const auto x = Json::parse(run(Language::kPython, RepresentationKind::kAst, "x = 1").envelope);
  std::size_t edges = 0;
  for (const auto& n : x["payload"]["nodes"]) {
    edges += n["children"].size();
    CHECK(n.contains("text") == n["children"].empty());
    for (const auto& c : n["children"]) CHECK(c.get<int>() > n["id"].get<int>());
  }
  CHECK(edges + 1 == x["payload"]["nodes"].size());
}

TEST_CASE("AST DOT is a bijection") {
  const auto ast = syntax::parse({"x = 1", Language::kPython});
  const auto st = dot_stats(exporter::to_dot(ast));
  CHECK(st.is_digraph);
  CHECK(st.balanced);
  CHECK(st.nodes == ast.nodes.size());
  CHECK(st.edges == ast.nodes.size() - 1);
}

TEST_CASE("DFG DOT") {
  const auto r = run(Language::kPython, RepresentationKind::kDfg, "a = 1; b = a + a");
  REQUIRE(r.dot);
  const auto st = dot_stats(*r.dot);
  CHECK(st.nodes == 4);
  CHECK(st.edges == 4);
  CHECK(st.dashed_edges == 2);
  CHECK(r.dot->find("label=\"a@1\"") != std::string::npos);

  const auto lone = run(Language::kPython, RepresentationKind::kDfg, "a = 1\nb = 2\n");
  const auto s2 = dot_stats(*lone.dot);
  CHECK(s2.nodes == 2);
  CHECK(s2.edges == 0);
}

TEST_CASE("CFG DOT of the if/else example") {
  const auto set = controlflow::extract_cfg(syntax::parse({kIfElse, Language::kPython}));
  REQUIRE(set.graphs.size() == 2);
  const auto st = dot_stats(exporter::to_dot(set.graphs[1]));
  CHECK(st.nodes == 6);
  CHECK(st.edges == 6);
  CHECK(st.diamonds == 1);
  CHECK(st.doublecircles == 2);

  const auto all = dot_stats(exporter::to_dot(set));
  CHECK(all.nodes == 6 + 3);
  CHECK(all.edges == 6 + 2);
  CHECK(all.balanced);
}

TEST_CASE("CFG payload flags and loop-back styling") {
  const auto code = "while c:\n    break\n    y = 1\n";
  const auto r = run(Language::kPython, RepresentationKind::kCfg, code);
  const auto j = Json::parse(r.envelope);
  const auto& blocks = j["payload"]["graphs"][0]["blocks"];
  int flagged = 0;
  for (const auto& b : blocks) {
    if (b.contains("unreachable")) {
      CHECK(b["unreachable"] == true);
      ++flagged;
    }
    CHECK_FALSE(b.contains("approximate"));
  }
  CHECK(flagged == 1);
  CHECK(dot_stats(*r.dot).dashed_edges == 1);
  CHECK(r.dot->find("style=dotted") != std::string::npos);
}

TEST_CASE("empty program CFG") {
  const auto r = run(Language::kPython, RepresentationKind::kCfg, "");
  const auto j = Json::parse(r.envelope);
  REQUIRE(j["payload"]["graphs"].size() == 1);
  const auto& g = j["payload"]["graphs"][0];
  CHECK(g["function"] == "<module>");
  CHECK(g["blocks"].size() == 2);
  CHECK(g["edges"].size() == 1);
  CHECK(g["edges"][0]["src"] == g["entry"]);
  CHECK(g["edges"][0]["dst"] == g["exit"]);
  CHECK(dot_stats(*r.dot).nodes == 2);
}

TEST_CASE("DOT uses label, shape and style only") {
  for (const auto& ex : corpus::all_examples()) {
    for (auto repr : {RepresentationKind::kAst, RepresentationKind::kDfg, RepresentationKind::kCfg}) {
      const auto r = run(ex.language, repr, std::string(ex.code));
      const auto st = dot_stats(*r.dot);
      CAPTURE(ex.id);
      CHECK(st.is_digraph);
      CHECK(st.balanced);
      for (const auto& a : st.attributes) {
        CHECK((a == "label" || a == "shape" || a == "style"));
      }
    }
  }
}

TEST_CASE("DOT escapes quotes and backslashes") {
  const auto r = run(Language::kJavaScript, RepresentationKind::kCfg, "f(\"a\\\\b\\\"c\");\n");
  CHECK(r.dot->find(R"(f(\"a\\\\b\\\"c\");)") != std::string::npos);
  CHECK(dot_stats(*r.dot).balanced);
}

TEST_CASE("diagnostics are exported with spans") {
  const auto r = run(Language::kJava, RepresentationKind::kAst, "class {");
  const auto j = Json::parse(r.envelope);
  REQUIRE_FALSE(j["diagnostics"].empty());
  CHECK(j["diagnostics"][0]["severity"] == "error");
  check_spans(j["diagnostics"], 7);
  bool error_node = false;
  for (const auto& n : j["payload"]["nodes"]) error_node |= n["kind"] == "ERROR";
  CHECK(error_node);
}

TEST_CASE("byte pieces are shown as hex") {
  tokenizer::TokenSequence seq;
  seq.ids = {0xC3};
  seq.pieces = {{"\xC3", Span{0, 1, 0, 0, 0, 1}}};
  const auto j = exporter::tokens_payload(seq, corpus::default_vocabulary());
  CHECK(j["tokens"][0]["text"] == "<0xC3>");
}

}
