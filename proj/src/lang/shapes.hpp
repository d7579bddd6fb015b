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

// Language rules: map grammar-specific node kinds onto the small set of
// statement, expression and binding shapes the flow analyses understand.

#ifndef CODELENS_SRC_LANG_SHAPES_HPP_
#define CODELENS_SRC_LANG_SHAPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codelens/syntax.hpp"

namespace codelens::lang {

using syntax::Ast;
using syntax::NodeId;

enum class StmtKind {
  kSimple,
  kBlock,
  kIf,
  kWhile,
  kDoWhile,
  kForEach,
  kForC,
  kSwitch,
  kTry,
  kBreak,
  kContinue,
  kReturn,
  kThrow,
  kLabeled,
  kWith,
};

struct IfArm {
  NodeId condition;
  std::vector<NodeId> body;
};

struct SwitchCase {
  NodeId node;
  // Nodes shown in condition blocks, one per case label.
  std::vector<NodeId> tests;
  bool is_default = false;
  // Case expressions evaluated as uses when the case is tested.
  std::vector<NodeId> values;
  // Match-statement patterns that bind names.
  std::vector<NodeId> patterns;
  std::optional<NodeId> guard;
  std::vector<NodeId> body;
  // End of the case header, for excerpts.
  std::uint32_t header_end = 0;
};

struct Handler {
  NodeId node;
  // Exception type expressions, evaluated as uses.
  std::vector<NodeId> types;
  std::optional<NodeId> binding;
  std::vector<NodeId> body;
  // End of the clause header; 0 means the first line.
  std::uint32_t header_end = 0;
};

struct WithItem {
  NodeId value;
  std::optional<NodeId> target;
};

struct Stmt {
  StmtKind kind = StmtKind::kSimple;
  NodeId node = 0;

  // kBlock
  std::vector<NodeId> statements;
  // kIf: the if arm followed by elif arms.
  std::vector<IfArm> arms;
  // kIf else branch, loop else clause (Python), try else clause (Python).
  std::optional<std::vector<NodeId>> else_body;
  // Loops.
  std::optional<NodeId> condition;
  std::vector<NodeId> body;
  std::vector<NodeId> init;
  std::vector<NodeId> update;
  std::optional<NodeId> target;
  std::optional<NodeId> iterable;
  // kSwitch
  std::optional<NodeId> subject;
  std::vector<SwitchCase> cases;
  bool fallthrough = false;
  // kTry
  std::vector<Handler> handlers;
  std::optional<std::vector<NodeId>> finally_body;
  // kBreak / kContinue target label, kLabeled label.
  std::optional<std::string> label;
  std::optional<NodeId> inner;
  // kWith (also try-with-resources headers).
  std::vector<WithItem> with_items;
  // kReturn / kThrow
  std::optional<NodeId> value;
  // End of the header for compound statements shown as a pseudo-statement
  // (for-each, switch, try, with).
  std::uint32_t header_end = 0;
};

enum class ExprKind {
  kOther,
  // Identifier leaf that denotes a variable.
  kVariable,
  // Identifier leaf in a non-variable position (member names, labels).
  kIgnored,
  // Subtree not analysed at all (type annotations, global declarations).
  kOpaque,
  // targets = value (also chained and walrus forms).
  kAssign,
  // target op= value
  kAugAssign,
  // x++ / --x
  kUpdate,
  // Declaration of targets with an optional initializer.
  kDeclare,
  // Identifier bound without an initializer in expression position
  // (pattern variables, match captures).
  kBindLeaf,
  kFunction,
  kClass,
  kComprehension,
  // Import binding the identifiers in `targets`.
  kImport,
};

struct Param {
  NodeId pattern;
  std::optional<NodeId> default_value;
};

struct ExprShape {
  ExprKind kind = ExprKind::kOther;
  std::vector<NodeId> targets;
  std::optional<NodeId> value;
};

struct FunctionShape {
  NodeId node = 0;
  // Identifier bound in the enclosing scope (declarations only).
  std::optional<NodeId> name_node;
  // Display name used for CFG titles, "" for anonymous functions.
  std::string name;
  std::vector<Param> params;
  // Expressions evaluated in the enclosing scope before the function exists
  // (decorators are handled by the statement that owns them).
  bool defaults_in_enclosing_scope = false;
  // Statement body (block) or expression body.
  std::optional<NodeId> body;
  bool expression_body = false;
};

struct ClassShape {
  NodeId node = 0;
  std::optional<NodeId> name_node;
  std::string name;
  // Superclass expressions evaluated in the enclosing scope.
  std::vector<NodeId> heritage;
  // Members processed as an independent scope.
  std::vector<NodeId> members;
};

struct ComprehensionClause {
  // for-clause: target bound from iterable; if-clause: condition only.
  std::optional<NodeId> target;
  std::optional<NodeId> iterable;
  std::optional<NodeId> condition;
};

struct ComprehensionShape {
  std::vector<ComprehensionClause> clauses;
  std::vector<NodeId> elements;
};

// Decomposition of an assignment target.
struct TargetParts {
  // Identifiers bound by the assignment.
  std::vector<NodeId> defs;
  // Base identifiers of member/subscript writes (defined without killing).
  std::vector<NodeId> weak_defs;
  // Expressions evaluated while locating the target (indices, defaults).
  std::vector<NodeId> evaluated;
};

class LanguageRules {
 public:
  virtual ~LanguageRules() = default;

  virtual Stmt classify_statement(const Ast& ast, NodeId id) const = 0;
  // Statements inside a body-like node (a block, or a single statement).
  virtual std::vector<NodeId> statements_of(const Ast& ast, NodeId id) const = 0;
  virtual std::vector<NodeId> module_statements(const Ast& ast) const;

  virtual ExprShape classify_expression(const Ast& ast, NodeId id) const = 0;
  virtual std::optional<FunctionShape> function_shape(const Ast& ast, NodeId id) const = 0;
  virtual std::optional<ClassShape> class_shape(const Ast& ast, NodeId id) const = 0;
  virtual std::optional<ComprehensionShape> comprehension_shape(const Ast& ast,
                                                                NodeId id) const;
  virtual TargetParts split_target(const Ast& ast, NodeId target) const = 0;
  // Bindings introduced by a function parameter pattern.
  virtual TargetParts split_parameter(const Ast& ast, NodeId param) const;
};

const LanguageRules& rules_for(Language language);

// Helpers shared by the rule sets.
std::vector<NodeId> named_children(const Ast& ast, NodeId id);
std::optional<NodeId> named_field(const Ast& ast, NodeId id, std::string_view field);
std::vector<NodeId> named_fields(const Ast& ast, NodeId id, std::string_view field);
bool is_kind(const Ast& ast, NodeId id, std::string_view kind);
// First named child with the given kind.
std::optional<NodeId> child_of_kind(const Ast& ast, NodeId id, std::string_view kind);

}  // namespace codelens::lang

#endif  // CODELENS_SRC_LANG_SHAPES_HPP_
