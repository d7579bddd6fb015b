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
#include <array>

#include "lang/shapes.hpp"

namespace codelens::lang {
namespace {

bool one_of(std::string_view kind, std::initializer_list<std::string_view> kinds) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

class PythonRules final : public LanguageRules {
 public:
  std::vector<NodeId> statements_of(const Ast& ast, NodeId id) const override {
    if (is_kind(ast, id, "block")) return named_children(ast, id);
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
      for (auto alt : named_fields(ast, id, "alternative")) {
        if (is_kind(ast, alt, "elif_clause")) {
          s.arms.push_back({*named_field(ast, alt, "condition"),
                            body_of(ast, alt, "consequence")});
        } else {
          s.else_body = body_of(ast, alt, "body");
        }
      }
    } else if (kind == "while_statement") {
      s.kind = StmtKind::kWhile;
      s.condition = named_field(ast, id, "condition");
      s.body = body_of(ast, id, "body");
      if (auto alt = named_field(ast, id, "alternative")) s.else_body = body_of(ast, *alt, "body");
    } else if (kind == "for_statement") {
      s.kind = StmtKind::kForEach;
      s.target = named_field(ast, id, "left");
      s.iterable = named_field(ast, id, "right");
      s.body = body_of(ast, id, "body");
      if (auto alt = named_field(ast, id, "alternative")) s.else_body = body_of(ast, *alt, "body");
      s.header_end = header_end_before(ast, id, named_field(ast, id, "body"));
    } else if (kind == "try_statement") {
      s.kind = StmtKind::kTry;
      s.body = body_of(ast, id, "body");
      s.header_end = ast.node(ast.node(id).children.front()).span.end_byte;
      for (auto c : named_children(ast, id)) {
        const auto& ck = ast.node(c).kind;
        if (ck == "except_clause" || ck == "except_group_clause") {
          s.handlers.push_back(handler(ast, c));
        } else if (ck == "else_clause") {
          s.else_body = body_of(ast, c, "body");
        } else if (ck == "finally_clause") {
          auto block = child_of_kind(ast, c, "block");
          s.finally_body = block ? statements_of(ast, *block) : std::vector<NodeId>{};
        }
      }
    } else if (kind == "with_statement") {
      s.kind = StmtKind::kWith;
      s.body = body_of(ast, id, "body");
      if (auto clause = child_of_kind(ast, id, "with_clause")) {
        s.header_end = ast.node(*clause).span.end_byte;
        for (auto item : named_children(ast, *clause)) {
          auto value = named_field(ast, item, "value");
          if (!value) continue;
          if (is_kind(ast, *value, "as_pattern")) {
            const auto parts = named_children(ast, *value);
            WithItem w{parts.front(), std::nullopt};
            if (auto alias = named_field(ast, *value, "alias")) w.target = *alias;
            s.with_items.push_back(w);
          } else {
            s.with_items.push_back({*value, std::nullopt});
          }
        }
      }
    } else if (kind == "match_statement") {
      s.kind = StmtKind::kSwitch;
      s.subject = named_field(ast, id, "subject");
      s.header_end = s.subject ? ast.node(*s.subject).span.end_byte : ast.node(id).span.start_byte;
      if (auto body = named_field(ast, id, "body")) {
        for (auto clause : named_children(ast, *body)) {
          if (!is_kind(ast, clause, "case_clause")) continue;
          s.cases.push_back(case_of(ast, clause));
        }
      }
    } else if (kind == "return_statement") {
      s.kind = StmtKind::kReturn;
      auto kids = named_children(ast, id);
      if (!kids.empty()) s.value = kids.front();
    } else if (kind == "raise_statement") {
      s.kind = StmtKind::kThrow;
      auto kids = named_children(ast, id);
      if (!kids.empty()) s.value = kids.front();
    } else if (kind == "break_statement") {
      s.kind = StmtKind::kBreak;
    } else if (kind == "continue_statement") {
      s.kind = StmtKind::kContinue;
    }
    return s;
  }

  ExprShape classify_expression(const Ast& ast, NodeId id) const override {
    const auto& n = ast.node(id);
    ExprShape e;
    if (n.kind == "identifier") {
      e.kind = ExprKind::kVariable;
      if (n.parent) {
        const auto& p = ast.node(*n.parent);
        if ((p.kind == "attribute" && n.field == "attribute") ||
            (p.kind == "keyword_argument" && n.field == "name") ||
            (p.kind == "dotted_name" && p.children.front() != id)) {
          e.kind = ExprKind::kIgnored;
        }
      }
      return e;
    }
    if (one_of(n.kind, {"type", "global_statement", "nonlocal_statement",
                        "future_import_statement", "type_parameter"})) {
      e.kind = ExprKind::kOpaque;
    } else if (n.kind == "assignment") {
      e.targets = named_fields(ast, id, "left");
      e.value = named_field(ast, id, "right");
      e.kind = e.value ? ExprKind::kAssign : ExprKind::kDeclare;
    } else if (n.kind == "augmented_assignment") {
      e.kind = ExprKind::kAugAssign;
      e.targets = named_fields(ast, id, "left");
      e.value = named_field(ast, id, "right");
    } else if (n.kind == "named_expression") {
      e.kind = ExprKind::kAssign;
      e.targets = named_fields(ast, id, "name");
      e.value = named_field(ast, id, "value");
    } else if (n.kind == "import_statement" || n.kind == "import_from_statement") {
      e.kind = ExprKind::kImport;
      for (auto name : named_fields(ast, id, "name")) {
        if (is_kind(ast, name, "aliased_import")) {
          if (auto alias = named_field(ast, name, "alias")) e.targets.push_back(*alias);
        } else if (is_kind(ast, name, "dotted_name")) {
          e.targets.push_back(ast.node(name).children.front());
        }
      }
    } else if (n.kind == "function_definition" || n.kind == "lambda") {
      e.kind = ExprKind::kFunction;
    } else if (n.kind == "class_definition") {
      e.kind = ExprKind::kClass;
    } else if (one_of(n.kind, {"list_comprehension", "set_comprehension",
                               "dictionary_comprehension", "generator_expression"})) {
      e.kind = ExprKind::kComprehension;
    }
    return e;
  }

  std::optional<FunctionShape> function_shape(const Ast& ast, NodeId id) const override {
    const auto& kind = ast.node(id).kind;
    if (kind != "function_definition" && kind != "lambda") return std::nullopt;
    FunctionShape f;
    f.node = id;
    f.defaults_in_enclosing_scope = true;
    if (auto name = named_field(ast, id, "name")) {
      f.name_node = name;
      f.name = ast.node(*name).text;
    }
    if (auto params = named_field(ast, id, "parameters")) {
      for (auto p : named_children(ast, *params)) {
        const auto& pk = ast.node(p).kind;
        if (pk == "keyword_separator" || pk == "positional_separator") continue;
        Param param{p, std::nullopt};
        if (pk == "default_parameter" || pk == "typed_default_parameter") {
          param.default_value = named_field(ast, p, "value");
        }
        f.params.push_back(param);
      }
    }
    f.body = named_field(ast, id, "body");
    f.expression_body = kind == "lambda";
    return f;
  }

  std::optional<ClassShape> class_shape(const Ast& ast, NodeId id) const override {
    if (!is_kind(ast, id, "class_definition")) return std::nullopt;
    ClassShape c;
    c.node = id;
    if (auto name = named_field(ast, id, "name")) {
      c.name_node = name;
      c.name = ast.node(*name).text;
    }
    if (auto supers = named_field(ast, id, "superclasses")) c.heritage.push_back(*supers);
    if (auto body = named_field(ast, id, "body")) c.members = statements_of(ast, *body);
    return c;
  }

  std::optional<ComprehensionShape> comprehension_shape(const Ast& ast,
                                                        NodeId id) const override {
    if (classify_expression(ast, id).kind != ExprKind::kComprehension) return std::nullopt;
    ComprehensionShape shape;
    for (auto c : named_children(ast, id)) {
      const auto& node = ast.node(c);
      if (node.field == "body") {
        shape.elements.push_back(c);
      } else if (node.kind == "for_in_clause") {
        ComprehensionClause clause;
        clause.target = named_field(ast, c, "left");
        clause.iterable = named_field(ast, c, "right");
        shape.clauses.push_back(clause);
      } else if (node.kind == "if_clause") {
        auto kids = named_children(ast, c);
        if (!kids.empty()) shape.clauses.push_back({std::nullopt, std::nullopt, kids.front()});
      }
    }
    return shape;
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
    } else if (kind == "default_parameter" || kind == "typed_default_parameter") {
      if (auto name = named_field(ast, param, "name")) split_parameter_into(ast, *name, parts);
    } else {
      split_parameter_into(ast, param, parts);
    }
    return parts;
  }

 private:
  std::vector<NodeId> body_of(const Ast& ast, NodeId id, std::string_view field) const {
    auto body = named_field(ast, id, field);
    if (!body) return {};
    return statements_of(ast, *body);
  }

  static std::uint32_t header_end_before(const Ast& ast, NodeId id, std::optional<NodeId> body) {
    std::uint32_t end = ast.node(id).span.start_byte;
    for (auto c : ast.node(id).children) {
      if (body && c == *body) break;
      if (ast.node(c).kind == ":") break;
      end = ast.node(c).span.end_byte;
    }
    return end;
  }

  Handler handler(const Ast& ast, NodeId clause) const {
    Handler h;
    h.node = clause;
    if (auto value = named_field(ast, clause, "value")) {
      if (is_kind(ast, *value, "as_pattern")) {
        const auto parts = named_children(ast, *value);
        h.types.push_back(parts.front());
        if (auto alias = named_field(ast, *value, "alias")) h.binding = *alias;
      } else {
        h.types.push_back(*value);
      }
    }
    if (auto block = child_of_kind(ast, clause, "block")) h.body = statements_of(ast, *block);
    return h;
  }

  SwitchCase case_of(const Ast& ast, NodeId clause) const {
    SwitchCase c;
    c.node = clause;
    c.tests.push_back(clause);
    c.guard = named_field(ast, clause, "guard");
    std::uint32_t header_end = ast.node(clause).span.start_byte;
    for (auto k : named_children(ast, clause)) {
      if (is_kind(ast, k, "case_pattern")) {
        c.patterns.push_back(k);
        header_end = ast.node(k).span.end_byte;
      }
    }
    if (c.guard) header_end = ast.node(*c.guard).span.end_byte;
    c.header_end = header_end;
    // `case _:` is the only irrefutable pattern treated as a default arm.
    c.is_default = !c.guard && c.patterns.size() == 1 &&
                   named_children(ast, c.patterns.front()).empty();
    if (auto body = named_field(ast, clause, "consequence")) c.body = statements_of(ast, *body);
    return c;
  }

  void split_parameter_into(const Ast& ast, NodeId id, TargetParts& parts) const {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.defs.push_back(id);
      return;
    }
    if (kind == "type") return;
    for (auto c : named_children(ast, id)) {
      if (ast.node(c).field == "type") continue;
      split_parameter_into(ast, c, parts);
    }
  }

  // Identifier at the root of an attribute/subscript chain, defined weakly.
  void split_member_base(const Ast& ast, NodeId id, TargetParts& parts) const {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.weak_defs.push_back(id);
    } else if (kind == "attribute") {
      if (auto object = named_field(ast, id, "object")) split_member_base(ast, *object, parts);
    } else if (kind == "subscript") {
      if (auto value = named_field(ast, id, "value")) split_member_base(ast, *value, parts);
      for (auto index : named_fields(ast, id, "subscript")) parts.evaluated.push_back(index);
    } else if (kind == "parenthesized_expression") {
      for (auto c : named_children(ast, id)) split_member_base(ast, c, parts);
    } else {
      parts.evaluated.push_back(id);
    }
  }

  void split_into(const Ast& ast, NodeId id, TargetParts& parts) const {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.defs.push_back(id);
    } else if (kind == "attribute" || kind == "subscript") {
      split_member_base(ast, id, parts);
    } else if (one_of(kind, {"pattern_list", "tuple_pattern", "list_pattern", "tuple", "list",
                             "parenthesized_expression", "list_splat_pattern", "list_splat",
                             "as_pattern_target", "case_pattern", "union_pattern",
                             "splat_pattern", "expression_list"})) {
      for (auto c : named_children(ast, id)) split_into(ast, c, parts);
    } else if (kind == "dotted_name") {
      // Capture pattern for a bare name, value pattern for a dotted path.
      const auto kids = named_children(ast, id);
      if (kids.size() == 1) {
        parts.defs.push_back(kids.front());
      } else {
        parts.evaluated.push_back(id);
      }
    } else if (kind == "class_pattern") {
      for (auto c : named_children(ast, id)) {
        if (is_kind(ast, c, "dotted_name")) {
          parts.evaluated.push_back(c);
        } else {
          split_into(ast, c, parts);
        }
      }
    } else if (kind == "keyword_pattern") {
      // First identifier names the attribute being matched.
      const auto kids = named_children(ast, id);
      for (std::size_t i = 1; i < kids.size(); ++i) split_into(ast, kids[i], parts);
    } else if (kind == "dict_pattern") {
      for (auto c : named_children(ast, id)) {
        if (ast.node(c).field == "key") {
          parts.evaluated.push_back(c);
        } else {
          split_into(ast, c, parts);
        }
      }
    } else if (kind == "as_pattern") {
      for (auto c : named_children(ast, id)) split_into(ast, c, parts);
    } else if (one_of(kind, {"integer", "float", "string", "true", "false", "none",
                             "concatenated_string"})) {
      // Literal patterns bind nothing and mention no variables.
    } else {
      parts.evaluated.push_back(id);
    }
  }
};

}  // namespace

const LanguageRules& python_rules() {
  static const PythonRules rules;
  return rules;
}

}  // namespace codelens::lang
