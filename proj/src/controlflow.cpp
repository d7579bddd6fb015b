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

#include "codelens/controlflow.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "lang/shapes.hpp"

namespace codelens::controlflow {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kEntry:
      return "entry";
    case BlockKind::kExit:
      return "exit";
    case BlockKind::kBody:
      return "body";
    case BlockKind::kCondition:
      return "condition";
  }
  return "";
}

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::kUnconditional:
      return "unconditional";
    case EdgeLabel::kTrue:
      return "true";
    case EdgeLabel::kFalse:
      return "false";
    case EdgeLabel::kLoopBack:
      return "loop-back";
  }
  return "";
}

namespace {

using lang::Stmt;
using lang::StmtKind;
using syntax::Ast;
using syntax::NodeId;

constexpr int kMaxDepth = 2000;
constexpr std::size_t kExcerptBytes = 120;

// Cuts [start, end) to its first line and at most kExcerptBytes bytes.
std::string excerpt(std::string_view source, std::uint32_t start, std::uint32_t end) {
  std::string_view text = source.substr(start, end - start);
  bool cut = false;
  if (auto nl = text.find_first_of("\r\n"); nl != std::string_view::npos) {
    text = text.substr(0, nl);
    cut = true;
  }
  if (text.size() > kExcerptBytes) {
    std::size_t n = kExcerptBytes;
    while (n > 0 && (static_cast<unsigned char>(text[n]) & 0xC0) == 0x80) --n;
    text = text.substr(0, n);
    cut = true;
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  std::string out(text);
  if (cut) out += " ...";
  return out;
}

bool is_loop(StmtKind kind) {
  return kind == StmtKind::kWhile || kind == StmtKind::kDoWhile ||
         kind == StmtKind::kForEach || kind == StmtKind::kForC;
}

struct Pending {
  std::uint32_t block;
  EdgeLabel label;
};

struct Frame {
  std::vector<std::string> labels;
  bool loop = false;
  bool is_switch = false;
  std::vector<Pending> breaks;
  std::vector<Pending> continues;

  bool has_label(std::string_view label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
  }
};

class GraphBuilder {
 public:
  GraphBuilder(const Ast& ast, const lang::LanguageRules& rules, const LineIndex& lines)
      : ast_(ast), rules_(rules), lines_(lines), source_(*ast.source) {}

  Cfg build(std::string name, const std::vector<NodeId>& statements) {
    entry_ = new_block(BlockKind::kEntry);
    exit_ = new_block(BlockKind::kExit);
    pending_ = {{entry_, EdgeLabel::kUnconditional}};
    exec_list(statements);
    connect(exit_);
    return finish(std::move(name));
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

  std::uint32_t new_block(BlockKind kind) {
    BasicBlock b;
    b.kind = kind;
    blocks_.push_back(std::move(b));
    force_new_ = false;
    return static_cast<std::uint32_t>(blocks_.size() - 1);
  }

  void edge(std::uint32_t src, std::uint32_t dst, EdgeLabel label) {
    edges_.insert({src, dst, label});
  }

  // Links every pending exit to `target` and clears the pending list.
  void connect(std::uint32_t target, bool loop_back = false) {
    for (const auto& p : pending_) {
      auto label = p.label;
      if (loop_back && label == EdgeLabel::kUnconditional) label = EdgeLabel::kLoopBack;
      edge(p.block, target, label);
    }
    pending_.clear();
  }

  Statement make_statement(NodeId id, std::uint32_t end) const {
    const auto& span = ast_.node(id).span;
    end = std::clamp(end, span.start_byte, span.end_byte);
    Statement s;
    s.ast_node = id;
    s.text = excerpt(source_, span.start_byte, end);
    s.span = lines_.span(span.start_byte, end);
    return s;
  }

  Statement make_statement(NodeId id) const {
    return make_statement(id, ast_.node(id).span.end_byte);
  }

  // Appends to the open body block when control can only arrive from its
  // end; starts a new block otherwise.
  std::uint32_t add_statement(Statement s) {
    std::uint32_t target;
    if (!force_new_ && pending_.size() == 1 &&
        pending_.front().label == EdgeLabel::kUnconditional &&
        blocks_[pending_.front().block].kind == BlockKind::kBody) {
      target = pending_.front().block;
    } else {
      target = new_block(BlockKind::kBody);
      connect(target);
    }
    blocks_[target].statements.push_back(std::move(s));
    pending_ = {{target, EdgeLabel::kUnconditional}};
    return target;
  }

  std::uint32_t add_condition(Statement s) {
    auto c = new_block(BlockKind::kCondition);
    blocks_[c].statements.push_back(std::move(s));
    connect(c);
    return c;
  }

  std::vector<std::string> take_labels() { return std::exchange(pending_labels_, {}); }

  void exec_list(const std::vector<NodeId>& stmts) {
    for (auto s : stmts) exec(s);
  }

  void exec(NodeId id) {
    DepthGuard guard(depth_);
    const Stmt s = rules_.classify_statement(ast_, id);
    if (s.kind != StmtKind::kLabeled && !is_loop(s.kind) && s.kind != StmtKind::kSwitch) {
      pending_labels_.clear();
    }
    switch (s.kind) {
      case StmtKind::kSimple:
        add_statement(make_statement(id));
        return;
      case StmtKind::kBlock:
        exec_list(s.statements);
        return;
      case StmtKind::kIf:
        exec_if(s);
        return;
      case StmtKind::kWhile:
      case StmtKind::kForEach:
      case StmtKind::kForC:
        exec_loop(s);
        return;
      case StmtKind::kDoWhile:
        exec_do(s);
        return;
      case StmtKind::kSwitch:
        exec_switch(s);
        return;
      case StmtKind::kTry:
        exec_try(s);
        return;
      case StmtKind::kWith:
        add_statement(make_statement(id, s.header_end));
        exec_list(s.body);
        return;
      case StmtKind::kReturn:
      case StmtKind::kThrow:
        add_statement(make_statement(id));
        connect(exit_);
        return;
      case StmtKind::kBreak:
      case StmtKind::kContinue:
        add_statement(make_statement(id));
        jump(s);
        return;
      case StmtKind::kLabeled:
        exec_labeled(s);
        return;
    }
  }

  void jump(const Stmt& s) {
    const bool is_break = s.kind == StmtKind::kBreak;
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      bool match = s.label ? it->has_label(*s.label) && (is_break || it->loop)
                           : it->loop || (is_break && it->is_switch);
      if (!match) continue;
      auto& list = is_break ? it->breaks : it->continues;
      list.insert(list.end(), pending_.begin(), pending_.end());
      break;
    }
    pending_.clear();
  }

  void exec_labeled(const Stmt& s) {
    if (s.label) pending_labels_.push_back(*s.label);
    if (!s.inner) {
      pending_labels_.clear();
      return;
    }
    auto inner = rules_.classify_statement(ast_, *s.inner).kind;
    if (is_loop(inner) || inner == StmtKind::kSwitch || inner == StmtKind::kLabeled) {
      exec(*s.inner);
      return;
    }
    Frame frame;
    frame.labels = take_labels();
    frames_.push_back(std::move(frame));
    exec(*s.inner);
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    pending_.insert(pending_.end(), done.breaks.begin(), done.breaks.end());
  }

  void exec_if(const Stmt& s) {
    std::vector<Pending> outs;
    for (const auto& arm : s.arms) {
      auto c = add_condition(make_statement(arm.condition));
      pending_ = {{c, EdgeLabel::kTrue}};
      exec_list(arm.body);
      outs.insert(outs.end(), pending_.begin(), pending_.end());
      pending_ = {{c, EdgeLabel::kFalse}};
    }
    if (s.else_body) exec_list(*s.else_body);
    pending_.insert(pending_.begin(), outs.begin(), outs.end());
  }

  Frame run_body(const std::vector<NodeId>& body, std::vector<std::string> labels) {
    Frame frame;
    frame.labels = std::move(labels);
    frame.loop = true;
    frames_.push_back(std::move(frame));
    exec_list(body);
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    return done;
  }

  void exec_loop(const Stmt& s) {
    auto labels = take_labels();
    for (auto init : s.init) add_statement(make_statement(init));
    Statement head = s.kind == StmtKind::kWhile || (s.kind == StmtKind::kForC && s.condition)
                         ? make_statement(*s.condition)
                         : make_statement(s.node, s.header_end);
    auto c = add_condition(std::move(head));
    pending_ = {{c, EdgeLabel::kTrue}};
    Frame done = run_body(s.body, std::move(labels));
    pending_.insert(pending_.end(), done.continues.begin(), done.continues.end());
    for (auto u : s.update) add_statement(make_statement(u));
    connect(c, /*loop_back=*/true);
    pending_ = {{c, EdgeLabel::kFalse}};
    if (s.else_body) exec_list(*s.else_body);
    pending_.insert(pending_.end(), done.breaks.begin(), done.breaks.end());
  }

  void exec_do(const Stmt& s) {
    auto labels = take_labels();
    const auto mark = blocks_.size();
    force_new_ = true;
    Frame done = run_body(s.body, std::move(labels));
    force_new_ = false;
    pending_.insert(pending_.end(), done.continues.begin(), done.continues.end());
    auto c = add_condition(make_statement(*s.condition));
    const auto body_start = blocks_.size() - 1 > mark ? static_cast<std::uint32_t>(mark) : c;
    edge(c, body_start, EdgeLabel::kTrue);
    pending_ = {{c, EdgeLabel::kFalse}};
    pending_.insert(pending_.end(), done.breaks.begin(), done.breaks.end());
  }

  void exec_switch(const Stmt& s) {
    auto labels = take_labels();
    add_statement(make_statement(s.node, s.header_end));
    // Tests run in order until one matches; default catches the rest.
    std::vector<std::vector<Pending>> entries(s.cases.size());
    std::optional<std::size_t> default_case;
    for (std::size_t i = 0; i < s.cases.size(); ++i) {
      const auto& sc = s.cases[i];
      if (sc.is_default) {
        default_case = i;
        continue;
      }
      for (auto t : sc.tests) {
        auto c = add_condition(make_statement(t, sc.header_end));
        entries[i].push_back({c, EdgeLabel::kTrue});
        pending_ = {{c, EdgeLabel::kFalse}};
      }
    }
    std::vector<Pending> no_match = std::move(pending_);
    pending_.clear();
    if (default_case) entries[*default_case] = std::move(no_match);

    Frame frame;
    frame.labels = std::move(labels);
    frame.is_switch = true;
    frames_.push_back(std::move(frame));
    std::vector<Pending> outs;
    for (std::size_t i = 0; i < s.cases.size(); ++i) {
      std::vector<Pending> in = std::move(entries[i]);
      if (s.fallthrough) in.insert(in.end(), pending_.begin(), pending_.end());
      pending_ = std::move(in);
      exec_list(s.cases[i].body);
      if (!s.fallthrough) {
        outs.insert(outs.end(), pending_.begin(), pending_.end());
        pending_.clear();
      }
    }
    Frame done = std::move(frames_.back());
    frames_.pop_back();
    pending_.insert(pending_.end(), outs.begin(), outs.end());
    if (!default_case) pending_.insert(pending_.end(), no_match.begin(), no_match.end());
    pending_.insert(pending_.end(), done.breaks.begin(), done.breaks.end());
  }

  std::uint32_t first_line_end(NodeId id) const {
    const auto& span = ast_.node(id).span;
    auto text = source_.substr(span.start_byte, span.size());
    auto nl = text.find_first_of("\r\n");
    return nl == std::string_view::npos ? span.end_byte
                                        : span.start_byte + static_cast<std::uint32_t>(nl);
  }

  void exec_try(const Stmt& s) {
    auto header = add_statement(make_statement(s.node, s.header_end));
    exec_list(s.body);
    if (s.else_body) exec_list(*s.else_body);
    std::vector<Pending> outs = std::move(pending_);
    for (const auto& h : s.handlers) {
      pending_ = {{header, EdgeLabel::kUnconditional}};
      force_new_ = true;
      auto end = h.header_end ? h.header_end : first_line_end(h.node);
      auto block = add_statement(make_statement(h.node, end));
      blocks_[block].approximate = true;
      exec_list(h.body);
      outs.insert(outs.end(), pending_.begin(), pending_.end());
    }
    pending_ = std::move(outs);
    if (s.finally_body) exec_list(*s.finally_body);
  }

  Cfg finish(std::string name) {
    // Reachability from entry on the raw graph.
    std::vector<std::vector<std::uint32_t>> succ(blocks_.size());
    for (const auto& e : edges_) succ[e.src].push_back(e.dst);
    std::vector<bool> seen(blocks_.size(), false);
    std::deque<std::uint32_t> queue{entry_};
    seen[entry_] = true;
    while (!queue.empty()) {
      auto b = queue.front();
      queue.pop_front();
      for (auto n : succ[b]) {
        if (!seen[n]) {
          seen[n] = true;
          queue.push_back(n);
        }
      }
    }
    for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
      auto& b = blocks_[i];
      b.unreachable = !seen[i];
      if (!b.statements.empty()) {
        std::uint32_t start = b.statements.front().span.start_byte;
        std::uint32_t end = b.statements.front().span.end_byte;
        for (const auto& st : b.statements) {
          start = std::min(start, st.span.start_byte);
          end = std::max(end, st.span.end_byte);
        }
        b.span = lines_.span(start, end);
      }
    }

    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
      if (i != entry_ && i != exit_) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return blocks_[a].span.start_byte < blocks_[b].span.start_byte;
    });
    order.insert(order.begin(), entry_);
    order.push_back(exit_);
    std::vector<std::uint32_t> renumber(blocks_.size());
    Cfg cfg;
    cfg.function_name = std::move(name);
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      renumber[order[i]] = i;
      BasicBlock b = std::move(blocks_[order[i]]);
      b.id = i;
      cfg.blocks.push_back(std::move(b));
    }
    for (const auto& e : edges_) cfg.edges.push_back({renumber[e.src], renumber[e.dst], e.label});
    std::sort(cfg.edges.begin(), cfg.edges.end());
    cfg.entry = 0;
    cfg.exit = static_cast<std::uint32_t>(cfg.blocks.size() - 1);
    return cfg;
  }

  const Ast& ast_;
  const lang::LanguageRules& rules_;
  const LineIndex& lines_;
  std::string_view source_;
  std::vector<BasicBlock> blocks_;
  std::set<CfgEdge> edges_;
  std::vector<Pending> pending_;
  std::vector<Frame> frames_;
  std::vector<std::string> pending_labels_;
  std::uint32_t entry_ = 0;
  std::uint32_t exit_ = 0;
  bool force_new_ = false;
  int depth_ = 0;
};

struct Scope {
  NodeId node;
  std::string name;
};

// Qualified display name built from enclosing classes and functions.
std::string qualified_name(const Ast& ast, const lang::LanguageRules& rules, NodeId id,
                           const std::string& own) {
  std::vector<std::string> parts{own.empty() ? "<anonymous>" : own};
  for (auto p = ast.node(id).parent; p; p = ast.node(*p).parent) {
    if (auto f = rules.function_shape(ast, *p)) {
      parts.push_back(f->name.empty() ? "<anonymous>" : f->name);
    } else if (auto c = rules.class_shape(ast, *p)) {
      parts.push_back(c->name.empty() ? "<anonymous>" : c->name);
    }
  }
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += *it;
  }
  return out;
}

}  // namespace

CfgSet extract_cfg(const syntax::Ast& ast, bool strict) {
  if (strict && ast.has_errors()) {
    throw Error(ErrorCode::kStrictModeSyntaxError, "source has syntax errors", ast.diagnostics);
  }
  const auto& rules = lang::rules_for(ast.language);
  static const std::string kEmpty;
  const std::string& source = ast.source ? *ast.source : kEmpty;
  LineIndex lines(source);
  CfgSet set;
  set.language = ast.language;
  {
    GraphBuilder builder(ast, rules, lines);
    set.graphs.push_back(builder.build("<module>", rules.module_statements(ast)));
  }
  std::set<std::string> used{"<module>"};
  // Nodes are stored in pre-order, so ids follow source order.
  for (NodeId id = 0; id < ast.nodes.size(); ++id) {
    auto f = rules.function_shape(ast, id);
    if (!f || !f->body || f->expression_body) continue;
    auto name = qualified_name(ast, rules, id, f->name);
    if (used.count(name)) {
      const auto& span = ast.node(id).span;
      name += "@" + std::to_string(span.start_line + 1);
      if (used.count(name)) name += ":" + std::to_string(span.start_col + 1);
    }
    used.insert(name);
    GraphBuilder builder(ast, rules, lines);
    set.graphs.push_back(builder.build(name, rules.statements_of(ast, *f->body)));
  }
  return set;
}

std::vector<std::string> check_cfg(const Cfg& cfg) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(cfg.function_name + ": " + std::move(msg)); };
  const auto n = cfg.blocks.size();
  if (n < 2) {
    fail("fewer than two blocks");
    return out;
  }
  std::vector<int> in(n, 0), outdeg(n, 0);
  std::vector<std::vector<EdgeLabel>> out_labels(n);
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (std::size_t i = 0; i < cfg.edges.size(); ++i) {
    const auto& e = cfg.edges[i];
    if (e.src >= n || e.dst >= n) {
      fail("edge endpoint out of range");
      continue;
    }
    if (i > 0 && !(cfg.edges[i - 1] < e)) fail("duplicate or unsorted edge");
    ++in[e.dst];
    ++outdeg[e.src];
    out_labels[e.src].push_back(e.label);
    succ[e.src].push_back(e.dst);
  }
  int entries = 0, exits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = cfg.blocks[i];
    const auto tag = "block " + std::to_string(i);
    if (b.id != i) fail(tag + ": id not dense");
    switch (b.kind) {
      case BlockKind::kEntry:
        ++entries;
        if (i != cfg.entry) fail(tag + ": stray entry");
        if (!b.statements.empty()) fail(tag + ": entry holds statements");
        if (in[i] != 0) fail(tag + ": entry has predecessors");
        break;
      case BlockKind::kExit:
        ++exits;
        if (i != cfg.exit) fail(tag + ": stray exit");
        if (!b.statements.empty()) fail(tag + ": exit holds statements");
        if (outdeg[i] != 0) fail(tag + ": exit has successors");
        break;
      case BlockKind::kBody:
        if (b.statements.empty()) fail(tag + ": empty body block");
        for (auto l : out_labels[i]) {
          if (l == EdgeLabel::kTrue || l == EdgeLabel::kFalse) fail(tag + ": branch label");
        }
        break;
      case BlockKind::kCondition: {
        if (b.statements.size() != 1) fail(tag + ": condition holds != 1 statement");
        auto labels = out_labels[i];
        std::sort(labels.begin(), labels.end());
        if (labels != std::vector<EdgeLabel>{EdgeLabel::kTrue, EdgeLabel::kFalse}) {
          fail(tag + ": condition needs one true and one false edge");
        }
        break;
      }
    }
    if (b.kind != BlockKind::kEntry && in[i] == 0 && !b.unreachable) {
      fail(tag + ": no predecessors but not flagged unreachable");
    }
    // Maximality: a body block must not flow straight into a body block
    // that nothing else enters.
    if (b.kind == BlockKind::kBody && succ[i].size() == 1) {
      auto next = succ[i].front();
      if (cfg.blocks[next].kind == BlockKind::kBody && in[next] == 1 && next != i) {
        fail(tag + ": not maximal, merges with block " + std::to_string(next));
      }
    }
  }
  if (entries != 1) fail("expected exactly one entry");
  if (exits != 1) fail("expected exactly one exit");
  // Flags agree with reachability from entry.
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{cfg.entry};
  seen[cfg.entry] = true;
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (auto s : succ[b]) {
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] == cfg.blocks[i].unreachable) {
      fail("block " + std::to_string(i) + ": unreachable flag disagrees with reachability");
    }
  }
  return out;
}

}  // namespace codelens::controlflow
