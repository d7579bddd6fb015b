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

#include "codelens/dataflow.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lang/shapes.hpp"

namespace codelens::dataflow {

std::string_view to_string(Role role) {
  return role == Role::kDefinition ? "definition" : "use";
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::kComesFrom ? "comesFrom" : "computedFrom";
}

namespace {

using lang::ExprKind;
using lang::Stmt;
using lang::StmtKind;
using syntax::Ast;
using syntax::NodeId;

// Statement plus expression nesting the recursive walk accepts.
constexpr int kMaxDepth = 2000;
// Loops nested deeper than this get a single pass.
constexpr int kMaxTwoPassLoops = 12;

using DefSet = std::vector<std::uint32_t>;  // sorted, unique

void merge_sets(DefSet& into, const DefSet& from) {
  DefSet out;
  out.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
  into = std::move(out);
}

// Reaching definitions at a program point. A dead state belongs to code no
// path reaches; its uses get no edges and it contributes nothing to joins.
struct State {
  bool live = true;
  std::map<std::string, DefSet, std::less<>> env;
};

State dead_state() {
  State s;
  s.live = false;
  return s;
}

void join_into(State& acc, const State& other) {
  if (!other.live) return;
  if (!acc.live) {
    acc = other;
    return;
  }
  for (const auto& [name, defs] : other.env) merge_sets(acc.env[name], defs);
}

struct Frame {
  std::vector<std::string> labels;
  bool loop = false;
  bool is_switch = false;
  std::vector<State> breaks;
  std::vector<State> continues;

  bool has_label(std::string_view label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
  }
};

struct RawNode {
  NodeId ast_node;
  Role role;
};

bool is_loop(StmtKind kind) {
  return kind == StmtKind::kWhile || kind == StmtKind::kDoWhile ||
         kind == StmtKind::kForEach || kind == StmtKind::kForC;
}

class Extractor {
 public:
  explicit Extractor(const Ast& ast) : ast_(ast), rules_(lang::rules_for(ast.language)) {}

  Dfg run() {
    State top;
    exec_list(rules_.module_statements(ast_), top);
    return finish();
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(int& depth) : depth_(depth) {
      if (++depth_ > kMaxDepth) {
        throw Error(ErrorCode::kInvalidSource,
                    "nesting exceeds the analysis limit of " + std::to_string(kMaxDepth));
      }
    }
    ~DepthGuard() { --depth_; }
    int& depth_;
  };

  const std::string& name_of(NodeId id) const { return ast_.node(id).text; }

  std::uint32_t node_for(NodeId id, Role role) {
    auto [it, inserted] = by_ast_.try_emplace(id, static_cast<std::uint32_t>(nodes_.size()));
    if (inserted) nodes_.push_back({id, role});
    return it->second;
  }

  std::uint32_t use(NodeId id, State& st) {
    auto n = node_for(id, Role::kUse);
    if (st.live) {
      auto it = st.env.find(name_of(id));
      if (it != st.env.end()) {
        for (auto d : it->second) edges_.insert({n, d, EdgeKind::kComesFrom});
      }
    }
    return n;
  }

  void define(NodeId id, State& st, const std::vector<std::uint32_t>& sources, bool kill) {
    auto n = node_for(id, Role::kDefinition);
    for (auto s : sources) edges_.insert({n, s, EdgeKind::kComputedFrom});
    auto& defs = st.env[name_of(id)];
    if (kill) {
      defs = {n};
    } else {
      merge_sets(defs, {n});
    }
  }

  void assign(NodeId target, State& st, const std::vector<std::uint32_t>& sources) {
    auto parts = rules_.split_target(ast_, target);
    std::vector<std::uint32_t> ignored;
    for (auto e : parts.evaluated) eval(e, st, ignored);
    for (auto w : parts.weak_defs) define(w, st, sources, false);
    for (auto d : parts.defs) define(d, st, sources, true);
  }

  void eval(NodeId id, State& st, std::vector<std::uint32_t>& uses) {
    DepthGuard guard(depth_);
    auto shape = rules_.classify_expression(ast_, id);
    switch (shape.kind) {
      case ExprKind::kVariable:
        uses.push_back(use(id, st));
        return;
      case ExprKind::kIgnored:
      case ExprKind::kOpaque:
        return;
      case ExprKind::kAssign:
      case ExprKind::kAugAssign:
      case ExprKind::kDeclare: {
        std::vector<std::uint32_t> rhs;
        if (shape.value) eval(*shape.value, st, rhs);
        for (auto t : shape.targets) assign(t, st, rhs);
        uses.insert(uses.end(), rhs.begin(), rhs.end());
        return;
      }
      case ExprKind::kUpdate:
        for (auto t : shape.targets) assign(t, st, {});
        return;
      case ExprKind::kBindLeaf:
        define(id, st, {}, true);
        return;
      case ExprKind::kImport:
        for (auto t : shape.targets) define(t, st, {}, true);
        return;
      case ExprKind::kFunction:
        function(id, st);
        return;
      case ExprKind::kClass:
        klass(id, st);
        return;
      case ExprKind::kComprehension:
        comprehension(id, st, uses);
        return;
      case ExprKind::kOther:
        break;
    }
    for (auto c : ast_.node(id).children) {
      if (ast_.node(c).named) eval(c, st, uses);
    }
  }

  // Runs `body` as a separate scope with its own frames.
  template <typename Fn>
  void in_scope(Fn&& body) {
    auto saved_frames = std::move(frames_);
    auto saved_labels = std::move(pending_labels_);
    auto saved_loops = loop_depth_;
    frames_.clear();
    pending_labels_.clear();
    loop_depth_ = 0;
    body();
    frames_ = std::move(saved_frames);
    pending_labels_ = std::move(saved_labels);
    loop_depth_ = saved_loops;
  }

  void function(NodeId id, State& st) {
    auto f = rules_.function_shape(ast_, id);
    if (!f) return;
    std::vector<std::vector<std::uint32_t>> defaults(f->params.size());
    if (f->defaults_in_enclosing_scope) {
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        if (f->params[i].default_value) eval(*f->params[i].default_value, st, defaults[i]);
      }
    }
    if (f->name_node) define(*f->name_node, st, {}, true);
    if (!scopes_done_.insert(id).second) return;
    in_scope([&] {
      State inner;
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        const auto& p = f->params[i];
        if (!f->defaults_in_enclosing_scope && p.default_value) {
          eval(*p.default_value, inner, defaults[i]);
        }
        auto parts = rules_.split_parameter(ast_, p.pattern);
        std::vector<std::uint32_t> ignored;
        for (auto e : parts.evaluated) eval(e, inner, ignored);
        for (auto w : parts.weak_defs) define(w, inner, defaults[i], false);
        for (auto d : parts.defs) define(d, inner, defaults[i], true);
      }
      if (!f->body) return;
      if (f->expression_body) {
        std::vector<std::uint32_t> ignored;
        eval(*f->body, inner, ignored);
      } else {
        exec_list(rules_.statements_of(ast_, *f->body), inner);
      }
    });
  }

  void klass(NodeId id, State& st) {
    auto c = rules_.class_shape(ast_, id);
    if (!c) return;
    std::vector<std::uint32_t> ignored;
    for (auto h : c->heritage) eval(h, st, ignored);
    if (c->name_node) define(*c->name_node, st, {}, true);
    if (!scopes_done_.insert(id).second) return;
    in_scope([&] {
      State inner;
      exec_list(c->members, inner);
    });
  }

  void comprehension(NodeId id, State& st, std::vector<std::uint32_t>& uses) {
    auto c = rules_.comprehension_shape(ast_, id);
    if (!c) return;
    State inner = st;
    for (const auto& clause : c->clauses) {
      if (clause.iterable) {
        std::vector<std::uint32_t> source;
        eval(*clause.iterable, inner, source);
        uses.insert(uses.end(), source.begin(), source.end());
        if (clause.target) assign(*clause.target, inner, source);
      }
      if (clause.condition) eval(*clause.condition, inner, uses);
    }
    for (auto e : c->elements) eval(e, inner, uses);
  }

  void exec_list(const std::vector<NodeId>& stmts, State& st) {
    for (auto s : stmts) exec(s, st);
  }

  std::vector<std::string> take_labels() { return std::exchange(pending_labels_, {}); }

  void exec(NodeId id, State& st) {
    DepthGuard guard(depth_);
    const Stmt s = rules_.classify_statement(ast_, id);
    std::vector<std::uint32_t> ignored;
    switch (s.kind) {
      case StmtKind::kSimple:
        pending_labels_.clear();
        eval(id, st, ignored);
        return;
      case StmtKind::kBlock:
        pending_labels_.clear();
        exec_list(s.statements, st);
        return;
      case StmtKind::kIf:
        pending_labels_.clear();
        exec_if(s, st);
        return;
      case StmtKind::kWhile:
      case StmtKind::kDoWhile:
      case StmtKind::kForEach:
      case StmtKind::kForC:
        exec_loop(s, st);
        return;
      case StmtKind::kSwitch:
        exec_switch(s, st);
        return;
      case StmtKind::kTry:
        pending_labels_.clear();
        exec_try(s, st);
        return;
      case StmtKind::kWith:
        pending_labels_.clear();
        for (const auto& item : s.with_items) {
          std::vector<std::uint32_t> source;
          eval(item.value, st, source);
          if (item.target) assign(*item.target, st, source);
        }
        exec_list(s.body, st);
        return;
      case StmtKind::kReturn:
      case StmtKind::kThrow:
        pending_labels_.clear();
        eval(id, st, ignored);
        st = dead_state();
        return;
      case StmtKind::kBreak:
      case StmtKind::kContinue:
        pending_labels_.clear();
        jump(s, st);
        return;
      case StmtKind::kLabeled:
        exec_labeled(s, st);
        return;
    }
  }

  void exec_labeled(const Stmt& s, State& st) {
    if (s.label) pending_labels_.push_back(*s.label);
    if (!s.inner) {
      pending_labels_.clear();
      return;
    }
    auto inner = rules_.classify_statement(ast_, *s.inner).kind;
    if (is_loop(inner) || inner == StmtKind::kSwitch || inner == StmtKind::kLabeled) {
      exec(*s.inner, st);
      return;
    }
    Frame frame;
    frame.labels = take_labels();
    frames_.push_back(std::move(frame));
    exec(*s.inner, st);
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    for (const auto& b : done.breaks) join_into(st, b);
  }

  void jump(const Stmt& s, State& st) {
    const bool is_break = s.kind == StmtKind::kBreak;
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      bool match = s.label ? it->has_label(*s.label) && (is_break || it->loop)
                           : it->loop || (is_break && it->is_switch);
      if (!match) continue;
      (is_break ? it->breaks : it->continues).push_back(st);
      break;
    }
    st = dead_state();
  }

  void exec_if(const Stmt& s, State& st) {
    std::vector<State> outs;
    std::vector<std::uint32_t> ignored;
    for (const auto& arm : s.arms) {
      eval(arm.condition, st, ignored);
      State taken = st;
      exec_list(arm.body, taken);
      outs.push_back(std::move(taken));
    }
    if (s.else_body) exec_list(*s.else_body, st);
    for (const auto& o : outs) join_into(st, o);
  }

  // Runs one pass of a loop body inside a fresh frame; returns the frame.
  Frame body_pass(const Stmt& s, const std::vector<std::string>& labels, State& body) {
    Frame frame;
    frame.labels = labels;
    frame.loop = true;
    frames_.push_back(std::move(frame));
    exec_list(s.body, body);
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    for (const auto& c : done.continues) join_into(body, c);
    return done;
  }

  void exec_loop(const Stmt& s, State& st) {
    const auto labels = take_labels();
    const int passes = loop_depth_ < kMaxTwoPassLoops ? 2 : 1;
    ++loop_depth_;
    std::vector<std::uint32_t> ignored;
    std::vector<std::uint32_t> source;
    if (s.kind == StmtKind::kForC) {
      for (auto init : s.init) eval(init, st, ignored);
    } else if (s.kind == StmtKind::kForEach && s.iterable) {
      eval(*s.iterable, st, source);
    }
    const State entry = st;
    State head;
    State back = dead_state();
    Frame last;
    for (int pass = 0; pass < passes; ++pass) {
      if (s.kind == StmtKind::kDoWhile) {
        State body = entry;
        join_into(body, back);
        last = body_pass(s, labels, body);
        if (s.condition) eval(*s.condition, body, ignored);
        back = body;
        head = body;
        continue;
      }
      head = entry;
      join_into(head, back);
      if (s.condition) eval(*s.condition, head, ignored);
      State body = head;
      if (s.kind == StmtKind::kForEach && s.target) assign(*s.target, body, source);
      last = body_pass(s, labels, body);
      for (auto u : s.update) eval(u, body, ignored);
      back = std::move(body);
    }
    --loop_depth_;
    // Normal exit: the condition fails (or the iterator is exhausted).
    State exit = head;
    if (s.kind == StmtKind::kForC && !s.condition) exit = dead_state();
    if (s.else_body) exec_list(*s.else_body, exit);
    for (const auto& b : last.breaks) join_into(exit, b);
    st = std::move(exit);
  }

  void exec_switch(const Stmt& s, State& st) {
    std::vector<std::uint32_t> subject;
    if (s.subject) eval(*s.subject, st, subject);
    Frame frame;
    frame.labels = take_labels();
    frame.is_switch = true;
    frames_.push_back(std::move(frame));
    State testing = st;
    State fall = dead_state();
    std::vector<State> outs;
    bool has_default = false;
    std::vector<std::uint32_t> ignored;
    for (const auto& c : s.cases) {
      for (auto v : c.values) eval(v, testing, ignored);
      State matched = testing;
      for (auto p : c.patterns) assign(p, matched, subject);
      if (c.guard) eval(*c.guard, matched, ignored);
      has_default = has_default || c.is_default;
      if (s.fallthrough) join_into(matched, fall);
      exec_list(c.body, matched);
      if (s.fallthrough) {
        fall = std::move(matched);
      } else {
        outs.push_back(std::move(matched));
      }
    }
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    State exit = std::move(fall);
    for (const auto& o : outs) join_into(exit, o);
    if (!has_default) join_into(exit, testing);
    for (const auto& b : done.breaks) join_into(exit, b);
    st = std::move(exit);
  }

  void exec_try(const Stmt& s, State& st) {
    for (const auto& item : s.with_items) {
      std::vector<std::uint32_t> source;
      eval(item.value, st, source);
      if (item.target) assign(*item.target, st, source);
    }
    const State start = st;
    exec_list(s.body, st);
    // Any statement of the body may raise, so handlers see both ends.
    State handler_entry = start;
    join_into(handler_entry, st);
    if (s.else_body) exec_list(*s.else_body, st);
    std::vector<std::uint32_t> ignored;
    State out = st;
    for (const auto& h : s.handlers) {
      State hs = handler_entry;
      for (auto t : h.types) eval(t, hs, ignored);
      if (h.binding) assign(*h.binding, hs, {});
      exec_list(h.body, hs);
      join_into(out, hs);
    }
    if (s.finally_body) exec_list(*s.finally_body, out);
    st = std::move(out);
  }

  Dfg finish() const {
    std::vector<std::uint32_t> order(nodes_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      const auto& sa = ast_.node(nodes_[a].ast_node).span;
      const auto& sb = ast_.node(nodes_[b].ast_node).span;
      if (sa.start_byte != sb.start_byte) return sa.start_byte < sb.start_byte;
      return nodes_[a].ast_node < nodes_[b].ast_node;
    });
    std::vector<std::uint32_t> renumber(nodes_.size());
    Dfg dfg;
    dfg.language = ast_.language;
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      const auto& raw = nodes_[order[i]];
      renumber[order[i]] = i;
      const auto& ast_node = ast_.node(raw.ast_node);
      dfg.nodes.push_back({i, ast_node.text, raw.role, raw.ast_node, ast_node.span});
    }
    for (const auto& e : edges_) dfg.edges.push_back({renumber[e.src], renumber[e.dst], e.kind});
    std::sort(dfg.edges.begin(), dfg.edges.end());
    return dfg;
  }

  const Ast& ast_;
  const lang::LanguageRules& rules_;
  std::vector<RawNode> nodes_;
  std::unordered_map<NodeId, std::uint32_t> by_ast_;
  std::set<DfgEdge> edges_;
  std::vector<Frame> frames_;
  std::vector<std::string> pending_labels_;
  std::unordered_set<NodeId> scopes_done_;
  int depth_ = 0;
  int loop_depth_ = 0;
};

bool is_identifier_kind(std::string_view kind) {
  return kind == "identifier" || kind == "shorthand_property_identifier" ||
         kind == "shorthand_property_identifier_pattern";
}

}  // namespace

Dfg extract_dfg(const syntax::Ast& ast, bool strict) {
  if (strict && ast.has_errors()) {
    throw Error(ErrorCode::kStrictModeSyntaxError, "source has syntax errors", ast.diagnostics);
  }
  return Extractor(ast).run();
}

std::vector<std::string> check_dfg(const Dfg& dfg, const syntax::Ast& ast) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };
  for (std::size_t i = 0; i < dfg.nodes.size(); ++i) {
    const auto& n = dfg.nodes[i];
    const auto tag = "node " + std::to_string(i);
    if (n.id != i) fail(tag + ": id not dense");
    if (n.ast_node >= ast.nodes.size()) {
      fail(tag + ": ast_node out of range");
      continue;
    }
    const auto& leaf = ast.node(n.ast_node);
    if (!leaf.is_leaf() || !is_identifier_kind(leaf.kind)) fail(tag + ": not an identifier leaf");
    if (leaf.text != n.name) fail(tag + ": name differs from leaf text");
    if (!(leaf.span == n.span)) fail(tag + ": span differs from leaf span");
    if (i > 0 && dfg.nodes[i - 1].span.start_byte > n.span.start_byte) {
      fail(tag + ": not in source order");
    }
  }
  for (std::size_t i = 0; i < dfg.edges.size(); ++i) {
    const auto& e = dfg.edges[i];
    const auto tag = "edge " + std::to_string(i);
    if (i > 0 && !(dfg.edges[i - 1] < e)) fail(tag + ": duplicate or unsorted");
    if (e.src >= dfg.nodes.size() || e.dst >= dfg.nodes.size()) {
      fail(tag + ": endpoint out of range");
      continue;
    }
    const auto& src = dfg.nodes[e.src];
    const auto& dst = dfg.nodes[e.dst];
    if (e.kind == EdgeKind::kComesFrom) {
      if (src.role != Role::kUse || dst.role != Role::kDefinition) {
        fail(tag + ": comesFrom must run use to definition");
      }
      if (src.name != dst.name) fail(tag + ": comesFrom joins different names");
    } else if (src.role != Role::kDefinition || dst.role != Role::kUse) {
      fail(tag + ": computedFrom must run definition to use");
    }
  }
  return out;
}

}  // namespace codelens::dataflow
