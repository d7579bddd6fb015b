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

#include "codelens/syntax.hpp"

#include <tree_sitter/api.h>

#include <algorithm>
#include <chrono>
#include <memory>
#include <utility>

extern "C" {
const TSLanguage* tree_sitter_python(void);
const TSLanguage* tree_sitter_javascript(void);
const TSLanguage* tree_sitter_java(void);
}

namespace codelens::syntax {
namespace {

const TSLanguage* grammar_for(Language language) {
  switch (language) {
    case Language::kPython: return tree_sitter_python();
    case Language::kJavaScript: return tree_sitter_javascript();
    case Language::kJava: return tree_sitter_java();
  }
  throw Error(ErrorCode::kUnsupportedLanguage, "unsupported language");
}

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};
struct CursorGuard {
  TSTreeCursor cursor;
  explicit CursorGuard(TSNode node) : cursor(ts_tree_cursor_new(node)) {}
  ~CursorGuard() { ts_tree_cursor_delete(&cursor); }
  CursorGuard(const CursorGuard&) = delete;
  CursorGuard& operator=(const CursorGuard&) = delete;
};

struct ReadState {
  std::string_view text;
};

const char* read_chunk(void* payload, uint32_t byte_index, TSPoint, uint32_t* bytes_read) {
  const auto* state = static_cast<const ReadState*>(payload);
  if (byte_index >= state->text.size()) {
    *bytes_read = 0;
    return "";
  }
  *bytes_read = static_cast<uint32_t>(state->text.size() - byte_index);
  return state->text.data() + byte_index;
}

struct Deadline {
  std::chrono::steady_clock::time_point at;
};

bool past_deadline(TSParseState* state) {
  const auto* deadline = static_cast<const Deadline*>(state->payload);
  return std::chrono::steady_clock::now() >= deadline->at;
}

bool is_comment(TSNode node) {
  if (!ts_node_is_extra(node)) return false;
  const std::string_view kind = ts_node_type(node);
  return kind.find("comment") != std::string_view::npos;
}

class TreeBuilder {
 public:
  TreeBuilder(std::string_view code, const LineIndex& index, Ast& ast)
      : code_(code), index_(index), ast_(ast) {}

  void build(TSNode root) {
    CursorGuard guard(root);
    TSTreeCursor* cursor = &guard.cursor;
    std::vector<NodeId> stack;  // ids of open ancestors
    add(ts_tree_cursor_current_node(cursor), "", std::nullopt);
    stack.push_back(0);
    // Iterative pre-order walk; comment extras are skipped with their subtrees.
    if (!ts_tree_cursor_goto_first_child(cursor)) return finish();
    while (true) {
      const TSNode node = ts_tree_cursor_current_node(cursor);
      bool descended = false;
      if (!is_comment(node)) {
        const char* field = ts_tree_cursor_current_field_name(cursor);
        const NodeId id = add(node, field ? field : "", stack.back());
        if (ts_tree_cursor_goto_first_child(cursor)) {
          stack.push_back(id);
          descended = true;
        }
      }
      if (descended) continue;
      while (!ts_tree_cursor_goto_next_sibling(cursor)) {
        if (!ts_tree_cursor_goto_parent(cursor) || stack.size() <= 1) return finish();
        stack.pop_back();
      }
    }
  }

 private:
  NodeId add(TSNode node, std::string field, std::optional<NodeId> parent) {
    AstNode n;
    n.id = static_cast<NodeId>(ast_.nodes.size());
    n.kind = ts_node_type(node);
    n.named = ts_node_is_named(node);
    n.field = std::move(field);
    n.parent = parent;
    n.span = index_.span(ts_node_start_byte(node), ts_node_end_byte(node));
    if (ts_node_is_missing(node)) {
      ast_.diagnostics.push_back(
          {Severity::kError, "missing " + n.kind, n.span});
    } else if (ts_node_is_error(node)) {
      ast_.diagnostics.push_back({Severity::kError, "syntax error", n.span});
    }
    if (parent) ast_.nodes[*parent].children.push_back(n.id);
    ast_.nodes.push_back(std::move(n));
    return ast_.nodes.back().id;
  }

  void finish() {
    // The root always spans the whole input so leading and trailing trivia
    // are covered.
    ast_.nodes[0].span = index_.span(0, static_cast<std::uint32_t>(code_.size()));
    for (auto& n : ast_.nodes) {
      if (n.children.empty()) {
        n.text = std::string(code_.substr(n.span.start_byte, n.span.size()));
      }
    }
  }

  std::string_view code_;
  const LineIndex& index_;
  Ast& ast_;
};

}  // namespace

std::optional<NodeId> Ast::child_by_field(NodeId id, std::string_view field) const {
  for (auto c : nodes.at(id).children) {
    if (nodes[c].field == field) return c;
  }
  return std::nullopt;
}

std::vector<NodeId> Ast::children_by_field(NodeId id, std::string_view field) const {
  std::vector<NodeId> out;
  for (auto c : nodes.at(id).children) {
    if (nodes[c].field == field) out.push_back(c);
  }
  return out;
}

std::vector<NodeId> Ast::named_children(NodeId id) const {
  std::vector<NodeId> out;
  for (auto c : nodes.at(id).children) {
    if (nodes[c].named) out.push_back(c);
  }
  return out;
}

bool Ast::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

Ast parse(const SourceUnit& unit, const ParseOptions& options) {
  auto problems = validate_source(unit, options.limits);
  if (!problems.empty()) {
    const auto code = unit.code.size() > options.limits.max_source_bytes
                          ? ErrorCode::kSourceTooLarge
                          : ErrorCode::kInvalidSource;
    const auto message = problems.front().message;
    throw Error(code, message, std::move(problems));
  }

  std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
  if (!ts_parser_set_language(parser.get(), grammar_for(unit.language))) {
    throw Error(ErrorCode::kUnsupportedLanguage, "grammar ABI mismatch");
  }

  ReadState read_state{unit.code};
  TSInput input{};
  input.payload = &read_state;
  input.read = &read_chunk;
  input.encoding = TSInputEncodingUTF8;

  Deadline deadline{std::chrono::steady_clock::now() + options.limits.parse_timeout};
  TSParseOptions parse_options{};
  parse_options.payload = &deadline;
  parse_options.progress_callback = &past_deadline;

  std::unique_ptr<TSTree, TreeDeleter> tree(
      ts_parser_parse_with_options(parser.get(), nullptr, input, parse_options));
  if (!tree || std::chrono::steady_clock::now() >= deadline.at) {
    throw Error(ErrorCode::kTimeout, "parse exceeded the time limit");
  }

  Ast ast;
  ast.language = unit.language;
  ast.source = std::make_shared<const std::string>(unit.code);
  const LineIndex index(unit.code);
  TreeBuilder(*ast.source, index, ast).build(ts_tree_root_node(tree.get()));

  if (options.strict && ast.has_errors()) {
    throw Error(ErrorCode::kStrictModeSyntaxError, "syntax error", ast.diagnostics);
  }
  return ast;
}

Ast named_subtree(const Ast& ast) {
  Ast out;
  out.language = ast.language;
  out.diagnostics = ast.diagnostics;
  out.source = ast.source;
  if (ast.nodes.empty()) return out;

  // Pre-order over the original tree; each kept node attaches to the
  // nearest kept ancestor.
  std::vector<std::optional<NodeId>> mapped(ast.nodes.size());
  std::vector<std::pair<NodeId, std::optional<NodeId>>> stack{{ast.root, std::nullopt}};
  while (!stack.empty()) {
    auto [id, kept_parent] = stack.back();
    stack.pop_back();
    const auto& n = ast.nodes[id];
    auto next_parent = kept_parent;
    if (n.named || id == ast.root) {
      AstNode copy;
      copy.id = static_cast<NodeId>(out.nodes.size());
      copy.kind = n.kind;
      copy.span = n.span;
      copy.named = n.named;
      copy.field = n.field;
      copy.parent = kept_parent;
      if (kept_parent) out.nodes[*kept_parent].children.push_back(copy.id);
      mapped[id] = copy.id;
      next_parent = copy.id;
      out.nodes.push_back(std::move(copy));
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.emplace_back(*it, next_parent);
    }
  }
  for (auto& n : out.nodes) {
    if (n.children.empty()) {
      n.text = ast.source ? ast.source->substr(n.span.start_byte, n.span.size())
                          : std::string();
    }
  }
  return out;
}

std::vector<std::string> check_tree(const Ast& ast, std::string_view code) {
  std::vector<std::string> problems;
  const auto n = ast.nodes.size();
  if (n == 0) {
    problems.push_back("empty tree");
    return problems;
  }
  std::vector<int> parent_count(n, 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = ast.nodes[i];
    if (node.id != i) problems.push_back("node id not dense at " + std::to_string(i));
    if (node.span.start_byte > node.span.end_byte || node.span.end_byte > code.size()) {
      problems.push_back("bad span at node " + std::to_string(i));
    }
    if (node.children.empty() && node.text != code.substr(node.span.start_byte, node.span.size())) {
      problems.push_back("leaf text mismatch at node " + std::to_string(i));
    }
    std::uint32_t prev_end = node.span.start_byte;
    for (auto c : node.children) {
      ++edges;
      if (c >= n) {
        problems.push_back("dangling child " + std::to_string(c));
        continue;
      }
      if (c <= i) problems.push_back("child id precedes parent at " + std::to_string(i));
      ++parent_count[c];
      const auto& child = ast.nodes[c];
      if (!node.span.contains(child.span)) {
        problems.push_back("child " + std::to_string(c) + " escapes parent " + std::to_string(i));
      }
      if (child.span.start_byte < prev_end) {
        problems.push_back("siblings overlap at node " + std::to_string(c));
      }
      prev_end = child.span.end_byte;
    }
  }
  if (edges != n - 1) problems.push_back("edge count " + std::to_string(edges) + " != N-1");
  for (std::size_t i = 0; i < n; ++i) {
    const int expected = i == ast.root ? 0 : 1;
    if (parent_count[i] != expected) {
      problems.push_back("node " + std::to_string(i) + " has " +
                         std::to_string(parent_count[i]) + " parents");
    }
  }
  // Reachability from the root.
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{ast.root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    if (id >= n || seen[id]) continue;
    seen[id] = true;
    ++reached;
    for (auto c : ast.nodes[id].children) stack.push_back(c);
  }
  if (reached != n) problems.push_back("unreachable nodes from root");
  return problems;
}

}  // namespace codelens::syntax
