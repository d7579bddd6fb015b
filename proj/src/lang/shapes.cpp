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

#include "lang/shapes.hpp"

namespace codelens::lang {

const LanguageRules& python_rules();
const LanguageRules& javascript_rules();
const LanguageRules& java_rules();

const LanguageRules& rules_for(Language language) {
  switch (language) {
    case Language::kPython: return python_rules();
    case Language::kJavaScript: return javascript_rules();
    case Language::kJava: return java_rules();
  }
  throw Error(ErrorCode::kUnsupportedLanguage, "unsupported language");
}

std::vector<NodeId> LanguageRules::module_statements(const Ast& ast) const {
  return named_children(ast, ast.root);
}

std::optional<ComprehensionShape> LanguageRules::comprehension_shape(const Ast&,
                                                                     NodeId) const {
  return std::nullopt;
}

TargetParts LanguageRules::split_parameter(const Ast& ast, NodeId param) const {
  return split_target(ast, param);
}

std::vector<NodeId> named_children(const Ast& ast, NodeId id) {
  return ast.named_children(id);
}

std::optional<NodeId> named_field(const Ast& ast, NodeId id, std::string_view field) {
  for (auto c : ast.node(id).children) {
    if (ast.node(c).named && ast.node(c).field == field) return c;
  }
  return std::nullopt;
}

std::vector<NodeId> named_fields(const Ast& ast, NodeId id, std::string_view field) {
  std::vector<NodeId> out;
  for (auto c : ast.node(id).children) {
    if (ast.node(c).named && ast.node(c).field == field) out.push_back(c);
  }
  return out;
}

bool is_kind(const Ast& ast, NodeId id, std::string_view kind) {
  return ast.node(id).kind == kind;
}

std::optional<NodeId> child_of_kind(const Ast& ast, NodeId id, std::string_view kind) {
  for (auto c : ast.node(id).children) {
    if (ast.node(c).named && ast.node(c).kind == kind) return c;
  }
  return std::nullopt;
}

}  // namespace codelens::lang
