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

// End of the first anonymous child with the given text.
std::uint32_t token_end(const Ast& ast, NodeId id, std::string_view token) {
  for (auto c : ast.node(id).children) {
    if (!ast.node(c).named && ast.node(c).kind == token) return ast.node(c).span.end_byte;
  }
  return ast.node(id).span.start_byte;
}

class JavaScriptRules final : public LanguageRules {
 public:
  std::vector<NodeId> statements_of(const Ast& ast, NodeId id) const override {
    if (is_kind(ast, id, "statement_block")) return named_children(ast, id);
    return {id};
  }

  Stmt classify_statement(const Ast& ast, NodeId id) const override {
    Stmt s;
    s.node = id;
    const auto& kind = ast.node(id).kind;
    if (kind == "statement_block") {
      s.kind = StmtKind::kBlock;
      s.statements = named_children(ast, id);
    } else if (kind == "if_statement") {
      s.kind = StmtKind::kIf;
      s.arms.push_back({*named_field(ast, id, "condition"), body_of(ast, id, "consequence")});
      if (auto alt = named_field(ast, id, "alternative")) {
        auto kids = named_children(ast, *alt);
        s.else_body = kids.empty() ? std::vector<NodeId>{} : statements_of(ast, kids.front());
      }
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
      if (auto init = named_field(ast, id, "initializer")) {
        if (!is_kind(ast, *init, "empty_statement")) s.init.push_back(*init);
      }
      if (auto cond = named_field(ast, id, "condition")) {
        if (!is_kind(ast, *cond, "empty_statement")) {
          // Older grammar revisions wrap the condition in an expression_statement.
          if (is_kind(ast, *cond, "expression_statement")) {
            auto kids = named_children(ast, *cond);
            if (!kids.empty()) s.condition = kids.front();
          } else {
            s.condition = cond;
          }
        }
      }
      for (auto inc : named_fields(ast, id, "increment")) s.update.push_back(inc);
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, ")");
    } else if (kind == "for_in_statement") {
      s.kind = StmtKind::kForEach;
      s.target = named_field(ast, id, "left");
      s.iterable = named_field(ast, id, "right");
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, ")");
    } else if (kind == "switch_statement") {
      s.kind = StmtKind::kSwitch;
      s.fallthrough = true;
      s.subject = named_field(ast, id, "value");
      s.header_end = s.subject ? ast.node(*s.subject).span.end_byte : ast.node(id).span.start_byte;
      if (auto body = named_field(ast, id, "body")) {
        for (auto c : named_children(ast, *body)) {
          const auto& ck = ast.node(c).kind;
          if (ck != "switch_case" && ck != "switch_default") continue;
          SwitchCase sc;
          sc.node = c;
          sc.is_default = ck == "switch_default";
          if (!sc.is_default) sc.tests.push_back(c);
          sc.values = named_fields(ast, c, "value");
          sc.body = named_fields(ast, c, "body");
          sc.header_end = token_end(ast, c, ":");
          s.cases.push_back(std::move(sc));
        }
      }
    } else if (kind == "try_statement") {
      s.kind = StmtKind::kTry;
      s.body = body_of(ast, id, "body");
      s.header_end = token_end(ast, id, "try");
      if (auto handler = named_field(ast, id, "handler")) {
        Handler h;
        h.node = *handler;
        h.binding = named_field(ast, *handler, "parameter");
        h.body = body_of(ast, *handler, "body");
        if (auto body = named_field(ast, *handler, "body")) {
          h.header_end = ast.node(*body).span.start_byte;
        }
        s.handlers.push_back(std::move(h));
      }
      if (auto fin = named_field(ast, id, "finalizer")) s.finally_body = body_of(ast, *fin, "body");
    } else if (kind == "labeled_statement") {
      s.kind = StmtKind::kLabeled;
      if (auto label = named_field(ast, id, "label")) s.label = ast.node(*label).text;
      s.inner = named_field(ast, id, "body");
    } else if (kind == "with_statement") {
      s.kind = StmtKind::kWith;
      if (auto object = named_field(ast, id, "object")) {
        s.with_items.push_back({*object, std::nullopt});
        s.header_end = ast.node(*object).span.end_byte;
      }
      s.body = body_of(ast, id, "body");
    } else if (kind == "return_statement" || kind == "throw_statement") {
      s.kind = kind == "return_statement" ? StmtKind::kReturn : StmtKind::kThrow;
      auto kids = named_children(ast, id);
      if (!kids.empty()) s.value = kids.front();
    } else if (kind == "break_statement" || kind == "continue_statement") {
      s.kind = kind == "break_statement" ? StmtKind::kBreak : StmtKind::kContinue;
      if (auto label = named_field(ast, id, "label")) s.label = ast.node(*label).text;
    }
    return s;
  }

  ExprShape classify_expression(const Ast& ast, NodeId id) const override {
    const auto& n = ast.node(id);
    ExprShape e;
    if (n.kind == "identifier" || n.kind == "shorthand_property_identifier") {
      e.kind = ExprKind::kVariable;
      if (n.parent) {
        const auto& p = ast.node(*n.parent);
        if ((p.kind == "function_expression" || p.kind == "generator_function" ||
             p.kind == "class") && n.field == "name") {
          e.kind = ExprKind::kIgnored;
        } else if (p.kind == "export_specifier" && n.field == "alias") {
          e.kind = ExprKind::kIgnored;
        }
      }
      return e;
    }
    if (n.kind == "assignment_expression") {
      e.kind = ExprKind::kAssign;
      e.targets = named_fields(ast, id, "left");
      e.value = named_field(ast, id, "right");
    } else if (n.kind == "augmented_assignment_expression") {
      e.kind = ExprKind::kAugAssign;
      e.targets = named_fields(ast, id, "left");
      e.value = named_field(ast, id, "right");
    } else if (n.kind == "update_expression") {
      e.kind = ExprKind::kUpdate;
      e.targets = named_fields(ast, id, "argument");
    } else if (n.kind == "variable_declarator") {
      e.kind = ExprKind::kDeclare;
      e.targets = named_fields(ast, id, "name");
      e.value = named_field(ast, id, "value");
    } else if (one_of(n.kind, {"function_declaration", "function_expression",
                               "generator_function_declaration", "generator_function",
                               "arrow_function", "method_definition"})) {
      e.kind = ExprKind::kFunction;
    } else if (n.kind == "class_declaration" || n.kind == "class") {
      e.kind = ExprKind::kClass;
    } else if (n.kind == "import_statement") {
      e.kind = ExprKind::kImport;
      collect_imports(ast, id, e.targets);
    } else if (one_of(n.kind, {"meta_property", "regex", "debugger_statement"})) {
      e.kind = ExprKind::kOpaque;
    }
    return e;
  }

  std::optional<FunctionShape> function_shape(const Ast& ast, NodeId id) const override {
    const auto& kind = ast.node(id).kind;
    if (!one_of(kind, {"function_declaration", "function_expression",
                       "generator_function_declaration", "generator_function",
                       "arrow_function", "method_definition"})) {
      return std::nullopt;
    }
    FunctionShape f;
    f.node = id;
    if (auto name = named_field(ast, id, "name")) {
      f.name = ast.node(*name).text;
      if (kind == "function_declaration" || kind == "generator_function_declaration") {
        f.name_node = name;
      }
    } else {
      f.name = contextual_name(ast, id);
    }
    if (auto params = named_field(ast, id, "parameters")) {
      for (auto p : named_children(ast, *params)) {
        Param param{p, std::nullopt};
        if (is_kind(ast, p, "assignment_pattern")) param.default_value = named_field(ast, p, "right");
        f.params.push_back(param);
      }
    } else if (auto single = named_field(ast, id, "parameter")) {
      f.params.push_back({*single, std::nullopt});
    }
    f.body = named_field(ast, id, "body");
    f.expression_body = f.body && !is_kind(ast, *f.body, "statement_block");
    return f;
  }

  std::optional<ClassShape> class_shape(const Ast& ast, NodeId id) const override {
    const auto& kind = ast.node(id).kind;
    if (kind != "class_declaration" && kind != "class") return std::nullopt;
    ClassShape c;
    c.node = id;
    if (auto name = named_field(ast, id, "name")) {
      c.name = ast.node(*name).text;
      if (kind == "class_declaration") c.name_node = name;
    } else {
      c.name = contextual_name(ast, id);
    }
    if (auto heritage = child_of_kind(ast, id, "class_heritage")) c.heritage.push_back(*heritage);
    if (auto body = named_field(ast, id, "body")) c.members = named_children(ast, *body);
    return c;
  }

  TargetParts split_target(const Ast& ast, NodeId target) const override {
    TargetParts parts;
    split_into(ast, target, parts);
    return parts;
  }

  TargetParts split_parameter(const Ast& ast, NodeId param) const override {
    TargetParts parts;
    if (is_kind(ast, param, "assignment_pattern")) {
      if (auto left = named_field(ast, param, "left")) split_into(ast, *left, parts);
    } else {
      split_into(ast, param, parts);
    }
    return parts;
  }

 private:
  std::vector<NodeId> body_of(const Ast& ast, NodeId id, std::string_view field) const {
    auto body = named_field(ast, id, field);
    if (!body) return {};
    return statements_of(ast, *body);
  }

  static void collect_imports(const Ast& ast, NodeId id, std::vector<NodeId>& out) {
    for (auto c : named_children(ast, id)) {
      const auto& kind = ast.node(c).kind;
      if (kind == "import_clause" || kind == "named_imports") {
        collect_imports(ast, c, out);
      } else if (kind == "identifier") {
        out.push_back(c);
      } else if (kind == "namespace_import") {
        if (auto name = child_of_kind(ast, c, "identifier")) out.push_back(*name);
      } else if (kind == "import_specifier") {
        auto alias = named_field(ast, c, "alias");
        auto name = named_field(ast, c, "name");
        if (alias && is_kind(ast, *alias, "identifier")) {
          out.push_back(*alias);
        } else if (name && is_kind(ast, *name, "identifier")) {
          out.push_back(*name);
        }
      }
    }
  }

  // Name for anonymous functions and classes taken from what they are bound to.
  static std::string contextual_name(const Ast& ast, NodeId id) {
    const auto parent = ast.node(id).parent;
    if (!parent) return "";
    const auto& p = ast.node(*parent);
    std::optional<NodeId> key;
    if (p.kind == "variable_declarator") {
      key = named_field(ast, *parent, "name");
    } else if (p.kind == "assignment_expression") {
      key = named_field(ast, *parent, "left");
    } else if (p.kind == "pair") {
      key = named_field(ast, *parent, "key");
    } else if (p.kind == "field_definition") {
      key = named_field(ast, *parent, "property");
    }
    if (!key || !ast.source) return "";
    const auto& span = ast.node(*key).span;
    std::string text = ast.source->substr(span.start_byte, span.size());
    if (text.find_first_of("\n\r") != std::string::npos) return "";
    return text;
  }

  void split_member_base(const Ast& ast, NodeId id, TargetParts& parts) const {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier") {
      parts.weak_defs.push_back(id);
    } else if (kind == "member_expression") {
      if (auto object = named_field(ast, id, "object")) split_member_base(ast, *object, parts);
    } else if (kind == "subscript_expression") {
      if (auto object = named_field(ast, id, "object")) split_member_base(ast, *object, parts);
      for (auto index : named_fields(ast, id, "index")) parts.evaluated.push_back(index);
    } else if (kind == "parenthesized_expression") {
      for (auto c : named_children(ast, id)) split_member_base(ast, c, parts);
    } else {
      parts.evaluated.push_back(id);
    }
  }

  void split_into(const Ast& ast, NodeId id, TargetParts& parts) const {
    const auto& kind = ast.node(id).kind;
    if (kind == "identifier" || kind == "shorthand_property_identifier_pattern") {
      parts.defs.push_back(id);
    } else if (kind == "member_expression" || kind == "subscript_expression") {
      split_member_base(ast, id, parts);
    } else if (one_of(kind, {"object_pattern", "array_pattern", "rest_pattern",
                             "parenthesized_expression"})) {
      for (auto c : named_children(ast, id)) split_into(ast, c, parts);
    } else if (kind == "pair_pattern") {
      if (auto key = named_field(ast, id, "key")) {
        if (is_kind(ast, *key, "computed_property_name")) parts.evaluated.push_back(*key);
      }
      if (auto value = named_field(ast, id, "value")) split_into(ast, *value, parts);
    } else if (kind == "assignment_pattern" || kind == "object_assignment_pattern") {
      if (auto left = named_field(ast, id, "left")) split_into(ast, *left, parts);
      if (auto right = named_field(ast, id, "right")) parts.evaluated.push_back(*right);
    } else if (kind == "undefined") {
      // `undefined` is a keyword-like binding target in sloppy code; ignored.
    } else {
      parts.evaluated.push_back(id);
    }
  }
};

}  // namespace

const LanguageRules& javascript_rules() {
  static const JavaScriptRules rules;
  return rules;
}

}  // namespace codelens::lang
