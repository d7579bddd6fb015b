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

#include <algorithm>

#include "lang/shapes.hpp"

namespace codelens::lang {
namespace {

bool one_of(std::string_view kind, std::initializer_list<std::string_view> kinds) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

std::uint32_t token_end(const Ast& ast, NodeId id, std::string_view token) {
  for (auto c : ast.node(id).children) {
    if (!ast.node(c).named && ast.node(c).kind == token) return ast.node(c).span.end_byte;
  }
  return ast.node(id).span.start_byte;
}

bool has_token(const Ast& ast, NodeId id, std::string_view token) {
  for (auto c : ast.node(id).children) {
    if (!ast.node(c).named && ast.node(c).kind == token) return true;
  }
  return false;
}

const std::initializer_list<std::string_view> kClassKinds = {
    "class_declaration", "interface_declaration", "enum_declaration",
    "record_declaration", "annotation_type_declaration"};

const std::initializer_list<std::string_view> kFunctionKinds = {
    "method_declaration", "constructor_declaration", "compact_constructor_declaration",
    "lambda_expression"};

class JavaRules final : public LanguageRules {
 public:
  std::vector<NodeId> statements_of(const Ast& ast, NodeId id) const override {
    if (is_kind(ast, id, "block") || is_kind(ast, id, "constructor_body")) {
      return named_children(ast, id);
    }
    return {id};
  }

  Stmt classify_statement(const Ast& ast, NodeId id) const override {
    Stmt s;
    s.node = id;
    const auto& kind = ast.node(id).kind;
    if (kind == "block") {
      s.kind = StmtKind::kBlock;
      s.statements = named_children(ast, id);
    } else if (kind == "if_statement") {
      s.kind = StmtKind::kIf;
      s.arms.push_back({*named_field(ast, id, "condition"), body_of(ast, id, "consequence")});
      if (auto alt = named_field(ast, id, "alternative")) s.else_body = statements_of(ast, *alt);
    } else if (kind == "while_statement") {
      s.kind = StmtKind::kWhile;
      s.condition = named_field(ast, id, "condition");
      s.body = body_of(ast, id, "body");
    } else if (kind == "do_statement") {
      s.kind = StmtKind::kDoWhile;
      s.condition = named_field(ast, id, "condition");
      s.body = body_of(ast, id, "body");
    } else if (kind == "for_statement") {
      s.kind = StmtKind::kForC;
      s.init = named_fields(ast, id, "init");
      s.condition = named_field(ast, id, "condition");
      s.update = named_fields(ast, id, "update");
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, ")");
    } else if (kind == "enhanced_for_statement") {
      s.kind = StmtKind::kForEach;
      s.target = named_field(ast, id, "name");
      s.iterable = named_field(ast, id, "value");
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, ")");
    } else if (kind == "switch_expression") {
      classify_switch(ast, id, s);
    } else if (kind == "try_statement" || kind == "try_with_resources_statement") {
      s.kind = StmtKind::kTry;
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, "try");
      if (auto resources = named_field(ast, id, "resources")) {
        s.header_end = ast.node(*resources).span.end_byte;
        for (auto r : named_children(ast, *resources)) {
          auto value = named_field(ast, r, "value");
          if (value) {
            s.with_items.push_back({*value, named_field(ast, r, "name")});
          } else {
            auto kids = named_children(ast, r);
            s.with_items.push_back({kids.empty() ? r : kids.front(), std::nullopt});
          }
        }
      }
      for (auto c : named_children(ast, id)) {
        const auto& ck = ast.node(c).kind;
        if (ck == "catch_clause") {
          Handler h;
          h.node = c;
          if (auto param = child_of_kind(ast, c, "catch_formal_parameter")) {
            h.binding = named_field(ast, *param, "name");
          }
          h.body = body_of(ast, c, "body");
          if (auto body = named_field(ast, c, "body")) h.header_end = ast.node(*body).span.start_byte;
          s.handlers.push_back(std::move(h));
        } else if (ck == "finally_clause") {
          auto block = child_of_kind(ast, c, "block");
          s.finally_body = block ? statements_of(ast, *block) : std::vector<NodeId>{};
        }
      }
    } else if (kind == "labeled_statement") {
      s.kind = StmtKind::kLabeled;
      auto kids = named_children(ast, id);
      if (!kids.empty() && is_kind(ast, kids.front(), "identifier")) {
        s.label = ast.node(kids.front()).text;
      }
      if (kids.size() > 1) s.inner = kids.back();
    } else if (kind == "synchronized_statement") {
      s.kind = StmtKind::kWith;
      if (auto lock = child_of_kind(ast, id, "parenthesized_expression")) {
        s.with_items.push_back({*lock, std::nullopt});
        s.header_end = ast.node(*lock).span.end_byte;
      }
      s.body = body_of(ast, id, "body");
    } else if (kind == "return_statement" || kind == "throw_statement") {
      s.kind = kind == "return_statement" ? StmtKind::kReturn : StmtKind::kThrow;
      auto kids = named_children(ast, id);
      if (!kids.empty()) s.value = kids.front();
    } else if (kind == "break_statement" || kind == "continue_statement") {
      s.kind = kind == "break_statement" ? StmtKind::kBreak : StmtKind::kContinue;
      if (auto label = child_of_kind(ast, id, "identifier")) s.label = ast.node(*label).text;
    }
    return s;
  }

  ExprShape classify_expression(const Ast& ast, NodeId id) const override {
    const auto& n = ast.node(id);
    ExprShape e;
    if (n.kind == "identifier") {
      e.kind = identifier_kind(ast, id);
      return e;
    }
    if (n.kind == "assignment_expression") {
      auto op = ast.child_by_field(id, "operator");
      bool plain = op && ast.node(*op).kind == "=";
      e.kind = plain ? ExprKind::kAssign : ExprKind::kAugAssign;
      e.targets = named_fields(ast, id, "left");
      e.value = named_field(ast, id, "right");
    } else if (n.kind == "update_expression") {
      e.kind = ExprKind::kUpdate;
      e.targets = named_children(ast, id);
    } else if (n.kind == "variable_declarator") {
      e.kind = ExprKind::kDeclare;
      e.targets = named_fields(ast, id, "name");
      e.value = named_field(ast, id, "value");
    } else if (one_of(n.kind, kFunctionKinds)) {
      e.kind = ExprKind::kFunction;
    } else if (one_of(n.kind, kClassKinds)) {
      e.kind = ExprKind::kClass;
    } else if (one_of(n.kind, {"package_declaration", "import_declaration",
                               "module_declaration", "marker_annotation", "annotation",
                               "type_arguments", "type_parameters", "dimensions",
                               "catch_type", "throws", "superclass", "super_interfaces",
                               "extends_interfaces", "permits"})) {
      e.kind = ExprKind::kOpaque;
    }
    return e;
  }

  std::optional<FunctionShape> function_shape(const Ast& ast, NodeId id) const override {
    const auto& kind = ast.node(id).kind;
    if (!one_of(kind, kFunctionKinds)) return std::nullopt;
    FunctionShape f;
    f.node = id;
    if (auto name = named_field(ast, id, "name")) f.name = ast.node(*name).text;
    if (auto params = named_field(ast, id, "parameters")) {
      if (is_kind(ast, *params, "identifier")) {
        f.params.push_back({*params, std::nullopt});
      } else {
        for (auto p : named_children(ast, *params)) {
          if (is_kind(ast, p, "receiver_parameter")) continue;
          f.params.push_back({p, std::nullopt});
        }
      }
    }
    f.body = named_field(ast, id, "body");
    f.expression_body = f.body && !is_kind(ast, *f.body, "block") &&
                        !is_kind(ast, *f.body, "constructor_body");
    return f;
  }

  std::optional<ClassShape> class_shape(const Ast& ast, NodeId id) const override {
    if (!one_of(ast.node(id).kind, kClassKinds)) return std::nullopt;
    ClassShape c;
    c.node = id;
    if (auto name = named_field(ast, id, "name")) c.name = ast.node(*name).text;
    if (auto body = named_field(ast, id, "body")) {
      for (auto m : named_children(ast, *body)) {
        if (is_kind(ast, m, "enum_body_declarations")) {
          for (auto inner : named_children(ast, m)) c.members.push_back(inner);
        } else {
          c.members.push_back(m);
        }
      }
    }
    return c;
  }

  TargetParts split_target(const Ast& ast, NodeId target) const override {
    TargetParts parts;
    split_into(ast, target, parts);
    return parts;
  }

  TargetParts split_parameter(const Ast& ast, NodeId param) const override {
    TargetParts parts;
    const auto& kind = ast.node(param).kind;
    if (kind == "identifier") {
      parts.defs.push_back(param);
    } else if (kind == "formal_parameter") {
      if (auto name = named_field(ast, param, "name")) parts.defs.push_back(*name);
    } else if (kind == "spread_parameter") {
      if (auto decl = child_of_kind(ast, param, "variable_declarator")) {
        if (auto name = named_field(ast, *decl, "name")) parts.defs.push_back(*name);
      }
    }
    return parts;
  }

 private:
  std::vector<NodeId> body_of(const Ast& ast, NodeId id, std::string_view field) const {
    auto body = named_field(ast, id, field);
    if (!body) return {};
    return statements_of(ast, *body);
  }

  void classify_switch(const Ast& ast, NodeId id, Stmt& s) const {
    s.kind = StmtKind::kSwitch;
    s.subject = named_field(ast, id, "condition");
    s.header_end = s.subject ? ast.node(*s.subject).span.end_byte : ast.node(id).span.start_byte;
    auto body = named_field(ast, id, "body");
    if (!body) return;
    for (auto c : named_children(ast, *body)) {
      const auto& ck = ast.node(c).kind;
      if (ck != "switch_block_statement_group" && ck != "switch_rule") continue;
      s.fallthrough = s.fallthrough || ck == "switch_block_statement_group";
      SwitchCase sc;
      sc.node = c;
      for (auto part : named_children(ast, c)) {
        if (is_kind(ast, part, "switch_label")) {
          if (has_token(ast, part, "default") || named_children(ast, part).empty()) {
            sc.is_default = true;
          } else {
            sc.tests.push_back(part);
            sc.values.push_back(part);
          }
          sc.header_end = ast.node(part).span.end_byte;
          if (auto guard = named_field(ast, part, "guard")) sc.guard = guard;
        } else if (ck == "switch_rule") {
          auto stmts = statements_of(ast, part);
          sc.body.insert(sc.body.end(), stmts.begin(), stmts.end());
        } else {
          sc.body.push_back(part);
        }
      }
      auto sep = ck == "switch_rule" ? token_end(ast, c, "->") : token_end(ast, c, ":");
      if (sep > sc.header_end) sc.header_end = sep;
      s.cases.push_back(std::move(sc));
    }
  }

  static ExprKind identifier_kind(const Ast& ast, NodeId id) {
    const auto& n = ast.node(id);
    if (!n.parent) return ExprKind::kVariable;
    const auto& p = ast.node(*n.parent);
    const auto& pk = p.kind;
    if (pk == "method_invocation" && n.field == "name") return ExprKind::kIgnored;
    if (pk == "field_access" && n.field == "field") return ExprKind::kIgnored;
    if ((one_of(pk, kClassKinds) || one_of(pk, kFunctionKinds) || pk == "enum_constant" ||
         pk == "annotation_type_element_declaration") &&
        n.field == "name") {
      return ExprKind::kIgnored;
    }
    if (one_of(pk, {"labeled_statement", "break_statement", "continue_statement",
                    "scoped_identifier", "element_value_pair"})) {
      return ExprKind::kIgnored;
    }
    if (pk == "method_reference" && p.children.front() != id) return ExprKind::kIgnored;
    if (pk == "instanceof_expression" && n.field == "name") return ExprKind::kBindLeaf;
    if (pk == "record_pattern") return ExprKind::kIgnored;
    if (pk == "type_pattern" || pk == "record_pattern_component") return ExprKind::kBindLeaf;
    return ExprKind::kVariable;
  }

  static void split_base(const Ast& ast, NodeId id, TargetParts& parts) {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.weak_defs.push_back(id);
    } else if (kind == "field_access") {
      if (auto object = named_field(ast, id, "object")) split_base(ast, *object, parts);
    } else if (kind == "array_access") {
      if (auto array = named_field(ast, id, "array")) split_base(ast, *array, parts);
      if (auto index = named_field(ast, id, "index")) parts.evaluated.push_back(*index);
    } else if (kind == "parenthesized_expression") {
      for (auto c : named_children(ast, id)) split_base(ast, c, parts);
    } else if (kind != "this" && kind != "super") {
      parts.evaluated.push_back(id);
    }
  }

  static void split_into(const Ast& ast, NodeId id, TargetParts& parts) {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.defs.push_back(id);
    } else if (kind == "field_access" || kind == "array_access") {
      split_base(ast, id, parts);
    } else if (kind == "parenthesized_expression") {
      for (auto c : named_children(ast, id)) split_into(ast, c, parts);
    } else {
      parts.evaluated.push_back(id);
    }
  }
};

}  // namespace

const LanguageRules& java_rules() {
  static const JavaRules rules;
  return rules;
}

}  // namespace codelens::lang
