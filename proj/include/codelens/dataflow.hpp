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

// Data-flow graphs over identifier occurrences.
//
// Nodes are variable occurrences (definitions and uses). A use has a
// comesFrom edge to every definition of the same name that reaches it; a
// definition has computedFrom edges to the uses in its right-hand side.
// Function and class bodies are analysed as separate scopes that start
// with no visible definitions.

#ifndef CODELENS_DATAFLOW_HPP_
#define CODELENS_DATAFLOW_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codelens/core.hpp"
#include "codelens/syntax.hpp"

namespace codelens::dataflow {

enum class Role { kDefinition, kUse };
enum class EdgeKind { kComesFrom, kComputedFrom };

std::string_view to_string(Role role);
std::string_view to_string(EdgeKind kind);

struct DfgNode {
  std::uint32_t id = 0;
  std::string name;
  Role role = Role::kUse;
  syntax::NodeId ast_node = 0;
  Span span;

  friend bool operator==(const DfgNode&, const DfgNode&) = default;
};

struct DfgEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  EdgeKind kind = EdgeKind::kComesFrom;

  friend bool operator==(const DfgEdge&, const DfgEdge&) = default;
  friend auto operator<=>(const DfgEdge&, const DfgEdge&) = default;
};

struct Dfg {
  std::vector<DfgNode> nodes;
  std::vector<DfgEdge> edges;
  Language language = Language::kPython;
};

// Nodes come out in source order, edges sorted by (src, dst, kind).
// Throws Error{kStrictModeSyntaxError} when `strict` and the tree has errors,
// Error{kInvalidSource} when nesting is too deep to analyse.
Dfg extract_dfg(const syntax::Ast& ast, bool strict = false);

// Structural invariant violations (empty when the graph is well-formed).
std::vector<std::string> check_dfg(const Dfg& dfg, const syntax::Ast& ast);

}  // namespace codelens::dataflow

#endif  // CODELENS_DATAFLOW_HPP_
