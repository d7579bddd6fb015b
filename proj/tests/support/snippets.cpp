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

// Random but syntactically valid programs. Output depends only on the
// seed: std::mt19937 raw draws are used, never the distribution classes,
// whose results differ between standard libraries.

#include <random>
#include <string>
#include <vector>

#include "support.hpp"

namespace codelens::testing {
namespace {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(rng_() % n); }
  bool chance(std::uint32_t percent) { return below(100) < percent; }

  template <typename T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[below(N)];
  }

 private:
  std::mt19937 rng_;
};

constexpr const char* kVars[] = {"a", "b", "n", "total", "item", "acc", "x", "y", "idx", "name"};
constexpr const char* kFuncs[] = {"f", "helper", "compute", "fetch"};
constexpr const char* kStrings[] = {"hi", "héllo", "naïve ✓", "日本", "tab\\tsep", "q\\\"uote"};
constexpr const char* kOps[] = {"+", "-", "*", "<", ">", "=="};

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

// Python ------------------------------------------------------------------

struct PyGen {
  Gen& g;
  std::string out;

  std::string expr(int depth) {
    switch (depth > 2 ? g.below(3) : g.below(9)) {
      case 0: return g.pick(kVars);
      case 1: return std::to_string(g.below(1000));
      case 2: return std::string("\"") + g.pick(kStrings) + "\"";
      case 3: return expr(depth + 1) + " " + g.pick(kOps) + " " + expr(depth + 1);
      case 4: return std::string(g.pick(kFuncs)) + "(" + expr(depth + 1) + ")";
      case 5: return "[" + expr(depth + 1) + ", " + expr(depth + 1) + "]";
      case 6: return std::string("[") + g.pick(kVars) + " for " + g.pick(kVars) + " in " +
                     expr(depth + 1) + "]";
      case 7: return std::string(g.pick(kVars)) + "[" + expr(depth + 1) + "]";
      default: return std::string(g.pick(kVars)) + ".size";
    }
  }

  void line(int indent, const std::string& text) { out += pad(indent) + text + "\n"; }

  void block(int indent, int depth, bool in_func, bool in_loop) {
    const auto n = 1 + g.below(3);
    for (std::uint32_t i = 0; i < n; ++i) stmt(indent, depth, in_func, in_loop);
  }

  void stmt(int indent, int depth, bool in_func, bool in_loop) {
    const auto k = depth > 2 ? g.below(4) : g.below(13);
    switch (k) {
      case 0: line(indent, std::string(g.pick(kVars)) + " = " + expr(0)); break;
      case 1: line(indent, std::string(g.pick(kVars)) + " += " + expr(0)); break;
      case 2: line(indent, std::string(g.pick(kFuncs)) + "(" + expr(0) + ")"); break;
      case 3:
        if (in_func) {
          line(indent, "return " + expr(0));
        } else if (in_loop) {
          line(indent, g.chance(50) ? "break" : "continue");
        } else {
          line(indent, std::string(g.pick(kVars)) + ", " + g.pick(kVars) + " = " + expr(0) +
                           ", " + expr(0));
        }
        break;
      case 4:
      case 5:
        line(indent, "if " + expr(0) + ":");
        block(indent + 4, depth + 1, in_func, in_loop);
        if (g.chance(40)) {
          line(indent, "elif " + expr(0) + ":");
          block(indent + 4, depth + 1, in_func, in_loop);
        }
        if (g.chance(50)) {
          line(indent, "else:");
          block(indent + 4, depth + 1, in_func, in_loop);
        }
        break;
      case 6:
        line(indent, "while " + expr(0) + ":");
        block(indent + 4, depth + 1, in_func, true);
        break;
      case 7:
      case 8:
        line(indent, std::string("for ") + g.pick(kVars) + " in " + expr(0) + ":");
        block(indent + 4, depth + 1, in_func, true);
        break;
      case 9:
        line(indent, std::string("def ") + g.pick(kFuncs) + "(" + g.pick(kVars) + ", " +
                         g.pick(kVars) + "=" + expr(1) + "):");
        block(indent + 4, depth + 1, true, false);
        break;
      case 10:
        line(indent, "try:");
        block(indent + 4, depth + 1, in_func, in_loop);
        line(indent, std::string("except ValueError as ") + g.pick(kVars) + ":");
        block(indent + 4, depth + 1, in_func, in_loop);
        if (g.chance(30)) {
          line(indent, "finally:");
          block(indent + 4, depth + 1, in_func, in_loop);
        }
        break;
      case 11:
        line(indent, "with open(" + expr(1) + ") as " + g.pick(kVars) + ":");
        block(indent + 4, depth + 1, in_func, in_loop);
        break;
      default:
        line(indent, "# note " + std::string(g.pick(kStrings)));
        line(indent, "pass");
        break;
    }
  }
};

// JavaScript --------------------------------------------------------------

struct JsGen {
  Gen& g;
  std::string out;

  std::string expr(int depth) {
    switch (depth > 2 ? g.below(3) : g.below(9)) {
      case 0: return g.pick(kVars);
      case 1: return std::to_string(g.below(1000));
      case 2: return std::string("'") + g.pick(kStrings) + "'";
      case 3: return expr(depth + 1) + " " + g.pick(kOps) + " " + expr(depth + 1);
      case 4: return std::string(g.pick(kFuncs)) + "(" + expr(depth + 1) + ")";
      case 5: return "[" + expr(depth + 1) + ", " + expr(depth + 1) + "]";
      case 6: return std::string("{ k: ") + expr(depth + 1) + ", " + g.pick(kVars) + " }";
      case 7: return std::string("((") + g.pick(kVars) + ") => " + expr(depth + 1) + ")";
      default: return std::string(g.pick(kVars)) + ".length";
    }
  }

  void line(int indent, const std::string& text) { out += pad(indent) + text + "\n"; }

  void block(int indent, int depth, bool in_func, bool in_loop, bool in_switch = false) {
    const auto n = 1 + g.below(3);
    for (std::uint32_t i = 0; i < n; ++i) stmt(indent, depth, in_func, in_loop, in_switch);
  }

  void stmt(int indent, int depth, bool in_func, bool in_loop, bool in_switch) {
    const auto k = depth > 2 ? g.below(4) : g.below(14);
    switch (k) {
      case 0: line(indent, std::string("let ") + g.pick(kVars) + " = " + expr(0) + ";"); break;
      case 1: line(indent, std::string(g.pick(kVars)) + " += " + expr(0) + ";"); break;
      case 2: line(indent, std::string(g.pick(kFuncs)) + "(" + expr(0) + ");"); break;
      case 3:
        if (in_func) {
          line(indent, "return " + expr(0) + ";");
        } else if (in_loop || in_switch) {
          line(indent, in_loop && g.chance(50) ? "continue;" : "break;");
        } else {
          line(indent, std::string("const [") + g.pick(kVars) + ", " + g.pick(kVars) +
                           "] = " + expr(0) + ";");
        }
        break;
      case 4:
      case 5:
        line(indent, "if (" + expr(0) + ") {");
        block(indent + 2, depth + 1, in_func, in_loop, in_switch);
        if (g.chance(50)) {
          line(indent, "} else {");
          block(indent + 2, depth + 1, in_func, in_loop, in_switch);
        }
        line(indent, "}");
        break;
      case 6:
        line(indent, "while (" + expr(0) + ") {");
        block(indent + 2, depth + 1, in_func, true);
        line(indent, "}");
        break;
      case 7: {
        const char* v = g.pick(kVars);
        line(indent, std::string("for (let ") + v + " = 0; " + v + " < " + expr(1) + "; " + v +
                         "++) {");
        block(indent + 2, depth + 1, in_func, true);
        line(indent, "}");
        break;
      }
      case 8:
        line(indent, std::string("for (const ") + g.pick(kVars) + " of " + expr(0) + ") {");
        block(indent + 2, depth + 1, in_func, true);
        line(indent, "}");
        break;
      case 9:
        line(indent, std::string("function ") + g.pick(kFuncs) + "(" + g.pick(kVars) + ", " +
                         g.pick(kVars) + " = " + expr(1) + ") {");
        block(indent + 2, depth + 1, true, false);
        line(indent, "}");
        break;
      case 10:
        line(indent, "try {");
        block(indent + 2, depth + 1, in_func, in_loop, in_switch);
        line(indent, std::string("} catch (") + g.pick(kVars) + ") {");
        block(indent + 2, depth + 1, in_func, in_loop, in_switch);
        if (g.chance(30)) {
          line(indent, "} finally {");
          block(indent + 2, depth + 1, in_func, in_loop, in_switch);
        }
        line(indent, "}");
        break;
      case 11:
        line(indent, "switch (" + expr(0) + ") {");
        for (std::uint32_t i = 0, n = 1 + g.below(3); i < n; ++i) {
          line(indent + 2, "case " + std::to_string(i) + ":");
          block(indent + 4, depth + 1, in_func, in_loop, true);
        }
        if (g.chance(50)) {
          line(indent + 2, "default:");
          block(indent + 4, depth + 1, in_func, in_loop, true);
        }
        line(indent, "}");
        break;
      case 12:
        line(indent, "do {");
        block(indent + 2, depth + 1, in_func, true);
        line(indent, "} while (" + expr(0) + ");");
        break;
      default:
        line(indent, "// note " + std::string(g.pick(kStrings)));
        line(indent, std::string(g.pick(kVars)) + "++;");
        break;
    }
  }
};

// Java --------------------------------------------------------------------

struct JavaGen {
  Gen& g;
  std::string out;

  std::string expr(int depth) {
    switch (depth > 2 ? g.below(3) : g.below(7)) {
      case 0: return g.pick(kVars);
      case 1: return std::to_string(g.below(1000));
      case 2: return std::string("\"") + g.pick(kStrings) + "\"";
      case 3: return expr(depth + 1) + " " + g.pick(kOps) + " " + expr(depth + 1);
      case 4: return std::string(g.pick(kFuncs)) + "(" + expr(depth + 1) + ")";
      case 5: return std::string(g.pick(kVars)) + "[" + expr(depth + 1) + "]";
      default: return std::string(g.pick(kVars)) + ".length";
    }
  }

  void line(int indent, const std::string& text) { out += pad(indent) + text + "\n"; }

  void block(int indent, int depth, bool in_loop, bool in_switch = false) {
    const auto n = 1 + g.below(3);
    for (std::uint32_t i = 0; i < n; ++i) stmt(indent, depth, in_loop, in_switch);
  }

  void stmt(int indent, int depth, bool in_loop, bool in_switch) {
    const auto k = depth > 2 ? g.below(4) : g.below(13);
    switch (k) {
      case 0: line(indent, std::string("int ") + g.pick(kVars) + " = " + expr(0) + ";"); break;
      case 1: line(indent, std::string(g.pick(kVars)) + " += " + expr(0) + ";"); break;
      case 2: line(indent, std::string(g.pick(kFuncs)) + "(" + expr(0) + ");"); break;
      case 3:
        if (in_loop || in_switch) {
          line(indent, in_loop && g.chance(50) ? "continue;" : "break;");
        } else {
          line(indent, "return " + expr(0) + ";");
        }
        break;
      case 4:
      case 5:
        line(indent, "if (" + expr(0) + ") {");
        block(indent + 2, depth + 1, in_loop, in_switch);
        if (g.chance(50)) {
          line(indent, "} else {");
          block(indent + 2, depth + 1, in_loop, in_switch);
        }
        line(indent, "}");
        break;
      case 6:
        line(indent, "while (" + expr(0) + ") {");
        block(indent + 2, depth + 1, true);
        line(indent, "}");
        break;
      case 7: {
        const char* v = g.pick(kVars);
        line(indent, std::string("for (int ") + v + " = 0; " + v + " < " + expr(1) + "; " + v +
                         "++) {");
        block(indent + 2, depth + 1, true);
        line(indent, "}");
        break;
      }
      case 8:
        line(indent, std::string("for (int ") + g.pick(kVars) + " : " + g.pick(kVars) + ") {");
        block(indent + 2, depth + 1, true);
        line(indent, "}");
        break;
      case 9:
        line(indent, "try {");
        block(indent + 2, depth + 1, in_loop, in_switch);
        line(indent, std::string("} catch (RuntimeException ") + g.pick(kVars) + ") {");
        block(indent + 2, depth + 1, in_loop, in_switch);
        if (g.chance(30)) {
          line(indent, "} finally {");
          block(indent + 2, depth + 1, in_loop, in_switch);
        }
        line(indent, "}");
        break;
      case 10:
        line(indent, "switch (" + expr(0) + ") {");
        for (std::uint32_t i = 0, n = 1 + g.below(3); i < n; ++i) {
          line(indent + 2, "case " + std::to_string(i) + ":");
          block(indent + 4, depth + 1, in_loop, true);
        }
        if (g.chance(50)) {
          line(indent + 2, "default:");
          block(indent + 4, depth + 1, in_loop, true);
        }
        line(indent, "}");
        break;
      case 11:
        line(indent, "do {");
        block(indent + 2, depth + 1, true);
        line(indent, "} while (" + expr(0) + ");");
        break;
      default:
        line(indent, "// note " + std::string(g.pick(kStrings)));
        line(indent, std::string(g.pick(kVars)) + "++;");
        break;
    }
  }

  void program(std::size_t index) {
    line(0, "class Gen" + std::to_string(index) + " {");
    for (std::uint32_t m = 0, n = 1 + g.below(3); m < n; ++m) {
      line(2, std::string("int ") + g.pick(kFuncs) + std::to_string(m) + "(int " +
                  g.pick(kVars) + ", int[] " + g.pick(kVars) + ") {");
      block(4, 0, false);
      line(4, "return 0;");
      line(2, "}");
    }
    line(0, "}");
  }
};

}  // namespace

std::vector<std::string> generate_snippets(Language language, std::size_t count,
                                           std::uint32_t seed) {
  std::vector<std::string> out;
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    switch (language) {
      case Language::kPython: {
        PyGen p{g, {}};
        p.block(0, 0, false, false);
        out.push_back(std::move(p.out));
        break;
      }
      case Language::kJavaScript: {
        JsGen j{g, {}};
        j.block(0, 0, false, false);
        out.push_back(std::move(j.out));
        break;
      }
      case Language::kJava: {
        JavaGen j{g, {}};
        j.program(i);
        out.push_back(std::move(j.out));
        break;
      }
    }
  }
  return out;
}

}  // namespace codelens::testing
