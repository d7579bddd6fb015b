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

#ifndef CODELENS_SYNTAX_HPP_
#define CODELENS_SYNTAX_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codelens/core.hpp"

namespace codelens::syntax {

using NodeId = std::uint32_t;

struct AstNode {
  NodeId id = 0;
  // Grammar symbol name, passed through verbatim ("identifier", "if_statement", "=").
  std::string kind;
  Span span;
  std::vector<NodeId> children;
  // False for anonymous grammar tokens such as punctuation and keywords.
  bool named = false;
  // Populated for leaves only.
  std::string text;
  // Grammar field under which this node hangs off its parent ("condition",
  // "body", ...). Empty when the grammar assigns none. Not serialized.
  std::string field;
  std::optional<NodeId> parent;

  bool is_leaf() const { return children.empty(); }
  bool is_error() const { return kind == "ERROR"; }
};

struct Ast {
  NodeId root = 0;
  std::vector<AstNode> nodes;  // id order == pre-order
  Language language = Language::kPython;
  std::vector<Diagnostic> diagnostics;
  // Source the spans index into; shared with views derived from this tree.
  std::shared_ptr<const std::string> source;

  const AstNode& node(NodeId id) const { return nodes.at(id); }
  const AstNode& root_node() const { return nodes.at(root); }

  // First child hanging off `field`, if any.
  std::optional<NodeId> child_by_field(NodeId id, std::string_view field) const;
  std::vector<NodeId> children_by_field(NodeId id, std::string_view field) const;
  std::vector<NodeId> named_children(NodeId id) const;
  bool has_errors() const;
};

struct ParseOptions {
  Limits limits;
  bool strict = false;
};

// Throws Error{kTimeout} when the parse exceeds limits.parse_timeout,
// Error{kInvalidSource}/Error{kSourceTooLarge} when validate_source fails,
// and Error{kStrictModeSyntaxError} in strict mode when the tree has errors.
Ast parse(const SourceUnit& unit, const ParseOptions& options = {});

// The tree restricted to named nodes, with anonymous nodes' named
// descendants re-parented to the nearest named ancestor.
Ast named_subtree(const Ast& ast);

// Structural checks used by tests and the acceptance suite. Returns a
// description of every violated invariant; empty means well-formed.
std::vector<std::string> check_tree(const Ast& ast, std::string_view code);

// Source text covered by a node.
inline std::string_view node_text(const Ast& ast, NodeId id, std::string_view code) {
  const auto& span = ast.node(id).span;
  return code.substr(span.start_byte, span.end_byte - span.start_byte);
}

}  // namespace codelens::syntax

#endif  // CODELENS_SYNTAX_HPP_
