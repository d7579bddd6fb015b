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

#include "codelens/export.hpp"

#include <cstddef>
#include <string_view>

namespace codelens::exporter {
namespace {

std::string dump(const Json& value, bool pretty) {
  return value.dump(pretty ? 2 : -1, ' ', false, Json::error_handler_t::replace);
}

// DOT string literal body.
std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

// Cuts long leaf text on a UTF-8 boundary.
std::string shorten(std::string_view text, std::size_t limit = 40) {
  if (text.size() <= limit) return std::string(text);
  std::size_t cut = limit;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
  return std::string(text.substr(0, cut)) + "...";
}

}  // namespace

Json span_json(const Span& span) {
  Json j = Json::object();
  j["start_byte"] = span.start_byte;
  j["end_byte"] = span.end_byte;
  j["start_line"] = span.start_line;
  j["start_col"] = span.start_col;
  j["end_line"] = span.end_line;
  j["end_col"] = span.end_col;
  return j;
}

Json diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    Json j = Json::object();
    j["severity"] = to_string(d.severity);
    j["message"] = d.message;
    j["span"] = span_json(d.span);
    out.push_back(std::move(j));
  }
  return out;
}

Json tokens_payload(const tokenizer::TokenSequence& tokens, const tokenizer::Vocabulary& vocab) {
  Json list = Json::array();
  for (std::size_t i = 0; i < tokens.ids.size(); ++i) {
    Json j = Json::object();
    // Byte entries may hold a partial UTF-8 sequence, so they go out as <0xNN>.
    j["text"] = vocab.display(tokens.ids[i]);
    j["id"] = tokens.ids[i];
    j["span"] = span_json(tokens.pieces[i].span);
    list.push_back(std::move(j));
  }
  Json out = Json::object();
  out["tokens"] = std::move(list);
  return out;
}

Json ast_payload(const syntax::Ast& ast) {
  Json nodes = Json::array();
  for (const auto& n : ast.nodes) {
    Json j = Json::object();
    j["id"] = n.id;
    j["kind"] = n.kind;
    j["named"] = n.named;
    j["span"] = span_json(n.span);
    if (n.is_leaf()) j["text"] = n.text;
    j["children"] = n.children;
    nodes.push_back(std::move(j));
  }
  Json out = Json::object();
  out["root"] = ast.root;
  out["nodes"] = std::move(nodes);
  return out;
}

Json dfg_payload(const dataflow::Dfg& dfg) {
  Json nodes = Json::array();
  for (const auto& n : dfg.nodes) {
    Json j = Json::object();
    j["id"] = n.id;
    j["name"] = n.name;
    j["role"] = dataflow::to_string(n.role);
    j["ast_node"] = n.ast_node;
    j["span"] = span_json(n.span);
    nodes.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const auto& e : dfg.edges) {
    Json j = Json::object();
    j["src"] = e.src;
    j["dst"] = e.dst;
    j["kind"] = dataflow::to_string(e.kind);
    edges.push_back(std::move(j));
  }
  Json out = Json::object();
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

Json cfg_payload(const controlflow::CfgSet& cfgs) {
  Json graphs = Json::array();
  for (const auto& g : cfgs.graphs) {
    Json blocks = Json::array();
    for (const auto& b : g.blocks) {
      Json j = Json::object();
      j["id"] = b.id;
      j["kind"] = controlflow::to_string(b.kind);
      j["span"] = span_json(b.span);
      Json stmts = Json::array();
      for (const auto& s : b.statements) {
        Json st = Json::object();
        st["ast_node"] = s.ast_node;
        st["text"] = s.text;
        stmts.push_back(std::move(st));
      }
      j["statements"] = std::move(stmts);
      if (b.unreachable) j["unreachable"] = true;
      if (b.approximate) j["approximate"] = true;
      blocks.push_back(std::move(j));
    }
    Json edges = Json::array();
    for (const auto& e : g.edges) {
      Json j = Json::object();
      j["src"] = e.src;
      j["dst"] = e.dst;
      j["label"] = controlflow::to_string(e.label);
      edges.push_back(std::move(j));
    }
    Json j = Json::object();
    j["function"] = g.function_name;
    j["entry"] = g.entry;
    j["exit"] = g.exit;
    j["blocks"] = std::move(blocks);
    j["edges"] = std::move(edges);
    graphs.push_back(std::move(j));
  }
  Json out = Json::object();
  out["graphs"] = std::move(graphs);
  return out;
}

Json envelope_json(const Envelope& envelope) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["language"] = to_string(envelope.language);
  j["representation"] = to_string(envelope.representation);
  j["payload"] = envelope.payload;
  j["diagnostics"] = diagnostics_json(envelope.diagnostics);
  return j;
}

std::string to_json(const Envelope& envelope, bool pretty) {
  return dump(envelope_json(envelope), pretty);
}

std::string serialize(const Json& value, bool pretty) { return dump(value, pretty); }

std::string to_dot(const syntax::Ast& ast) {
  std::string out = "digraph ast {\n";
  for (const auto& n : ast.nodes) {
    std::string label = n.kind;
    if (n.is_leaf() && n.named) label += "\n" + shorten(n.text);
    out += "  n" + std::to_string(n.id) + " [label=" + quote(label);
    if (n.is_error()) {
      out += ", shape=box, style=filled";
    } else {
      out += n.named ? ", shape=box" : ", shape=plaintext";
    }
    out += "];\n";
  }
  for (const auto& n : ast.nodes) {
    for (auto c : n.children) {
      out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(c) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_dot(const dataflow::Dfg& dfg) {
  std::string out = "digraph dfg {\n";
  for (const auto& n : dfg.nodes) {
    out += "  n" + std::to_string(n.id) + " [label=" +
           quote(n.name + "@" + std::to_string(n.span.start_line + 1)) +
           (n.role == dataflow::Role::kDefinition ? ", shape=box" : ", shape=ellipse") + "];\n";
  }
  for (const auto& e : dfg.edges) {
    bool comes = e.kind == dataflow::EdgeKind::kComesFrom;
    out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) +
           " [label=" + quote(dataflow::to_string(e.kind)) +
           (comes ? ", style=solid" : ", style=dashed") + "];\n";
  }
  out += "}\n";
  return out;
}

namespace {

void cfg_body(const controlflow::Cfg& g, const std::string& prefix, const std::string& indent,
              std::string& out) {
  using controlflow::BlockKind;
  for (const auto& b : g.blocks) {
    std::string label;
    std::string shape;
    switch (b.kind) {
      case BlockKind::kEntry: label = "entry"; shape = "doublecircle"; break;
      case BlockKind::kExit: label = "exit"; shape = "doublecircle"; break;
      case BlockKind::kCondition: shape = "diamond"; break;
      case BlockKind::kBody: shape = "box"; break;
    }
    for (std::size_t i = 0; i < b.statements.size(); ++i) {
      if (i > 0) label += "\n";
      label += b.statements[i].text;
    }
    out += indent + prefix + std::to_string(b.id) + " [label=" + quote(label) + ", shape=" + shape;
    if (b.unreachable) {
      out += ", style=dotted";
    } else if (b.approximate) {
      out += ", style=dashed";
    }
    out += "];\n";
  }
  for (const auto& e : g.edges) {
    out += indent + prefix + std::to_string(e.src) + " -> " + prefix + std::to_string(e.dst);
    switch (e.label) {
      case controlflow::EdgeLabel::kUnconditional: break;
      case controlflow::EdgeLabel::kTrue: out += " [label=\"true\"]"; break;
      case controlflow::EdgeLabel::kFalse: out += " [label=\"false\"]"; break;
      case controlflow::EdgeLabel::kLoopBack: out += " [label=\"loop-back\", style=dashed]"; break;
    }
    out += ";\n";
  }
}

}  // namespace

std::string to_dot(const controlflow::CfgSet& cfgs) {
  std::string out = "digraph cfg {\n";
  for (std::size_t i = 0; i < cfgs.graphs.size(); ++i) {
    out += "  subgraph cluster_" + std::to_string(i) + " {\n";
    out += "    label=" + quote(cfgs.graphs[i].function_name) + ";\n";
    cfg_body(cfgs.graphs[i], "g" + std::to_string(i) + "_b", "    ", out);
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string to_dot(const controlflow::Cfg& cfg) {
  std::string out = "digraph cfg {\n";
  out += "  label=" + quote(cfg.function_name) + ";\n";
  cfg_body(cfg, "b", "  ", out);
  out += "}\n";
  return out;
}

}  // namespace codelens::exporter
