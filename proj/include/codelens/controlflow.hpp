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

// Control-flow graphs over basic blocks, one per function plus one for the
// top-level code ("<module>").

#ifndef CODELENS_CONTROLFLOW_HPP_
#define CODELENS_CONTROLFLOW_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codelens/core.hpp"
#include "codelens/syntax.hpp"

namespace codelens::controlflow {

enum class BlockKind { kEntry, kExit, kBody, kCondition };
enum class EdgeLabel { kUnconditional, kTrue, kFalse, kLoopBack };

std::string_view to_string(BlockKind kind);
// "unconditional", "true", "false", "loop-back"
std::string_view to_string(EdgeLabel label);

struct Statement {
  syntax::NodeId ast_node = 0;
  // First line of the statement, " ..." appended when cut.
  std::string text;
  Span span;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct BasicBlock {
  std::uint32_t id = 0;
  BlockKind kind = BlockKind::kBody;
  Span span;
  std::vector<Statement> statements;
  // No path from entry reaches this block.
  bool unreachable = false;
  // Exception handler entered from its try header without knowing which
  // statement raised.
  bool approximate = false;

  friend bool operator==(const BasicBlock&, const BasicBlock&) = default;
};

struct CfgEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  EdgeLabel label = EdgeLabel::kUnconditional;

  friend bool operator==(const CfgEdge&, const CfgEdge&) = default;
  friend auto operator<=>(const CfgEdge&, const CfgEdge&) = default;
};

struct Cfg {
  std::string function_name;
  std::vector<BasicBlock> blocks;
  std::vector<CfgEdge> edges;
  std::uint32_t entry = 0;
  std::uint32_t exit = 0;
};

struct CfgSet {
  std::vector<Cfg> graphs;
  Language language = Language::kPython;
};

// Graphs come out as "<module>" first, then functions in source order.
// Block ids: entry 0, then blocks by source position, exit last.
CfgSet extract_cfg(const syntax::Ast& ast, bool strict = false);

// Structural invariant violations (empty when the graph is well-formed).
std::vector<std::string> check_cfg(const Cfg& cfg);

}  // namespace codelens::controlflow

#endif  // CODELENS_CONTROLFLOW_HPP_
