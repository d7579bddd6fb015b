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

#include "support.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>

#ifndef CODELENS_SOURCE_DIR
#error "CODELENS_SOURCE_DIR must be defined"
#endif

namespace codelens::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return CODELENS_SOURCE_DIR; }
fs::path fixture_dir() { return source_dir() / "tests" / "fixtures"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Language language_of_extension(const fs::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".py") return Language::kPython;
  if (ext == ".js") return Language::kJavaScript;
  if (ext == ".java") return Language::kJava;
  throw std::runtime_error("unknown extension " + ext);
}

std::string extension_of(Language language) {
  switch (language) {
    case Language::kPython: return ".py";
    case Language::kJavaScript: return ".js";
    case Language::kJava: return ".java";
  }
  return "";
}

std::vector<Fixture> fixtures(const std::string& kind, Language language) {
  std::vector<Fixture> out;
  const auto dir = fixture_dir() / kind / std::string(to_string(language));
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != extension_of(language)) continue;
    auto expected = entry.path();
    expected.replace_extension(".expected");
    out.push_back({entry.path(), expected, language});
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture& a, const Fixture& b) { return a.source < b.source; });
  return out;
}

std::vector<std::string> expected_lines(const fs::path& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

namespace {

std::string pos(const Span& span) {
  return std::to_string(span.start_line + 1) + ":" + std::to_string(span.start_col + 1);
}

}  // namespace

std::vector<std::string> render_dfg(const dataflow::Dfg& dfg) {
  std::vector<std::string> out;
  for (const auto& n : dfg.nodes) {
    out.push_back(std::string(n.role == dataflow::Role::kDefinition ? "def " : "use ") + n.name +
                  " " + pos(n.span));
  }
  for (const auto& e : dfg.edges) {
    out.push_back(pos(dfg.nodes[e.src].span) + " -> " + pos(dfg.nodes[e.dst].span) + " " +
                  std::string(dataflow::to_string(e.kind)));
  }
  return out;
}

std::vector<std::string> render_cfg(const controlflow::CfgSet& cfgs) {
  using controlflow::BlockKind;
  std::vector<std::string> out;
  for (const auto& g : cfgs.graphs) {
    out.push_back("graph " + g.function_name);
    for (const auto& b : g.blocks) {
      std::string line = "B" + std::to_string(b.id) + " ";
      switch (b.kind) {
        case BlockKind::kEntry: line += "entry"; break;
        case BlockKind::kExit: line += "exit"; break;
        case BlockKind::kBody: line += "body"; break;
        case BlockKind::kCondition: line += "cond"; break;
      }
      for (const auto& s : b.statements) line += " " + pos(s.span);
      if (b.unreachable) line += " unreachable";
      if (b.approximate) line += " approximate";
      out.push_back(line);
    }
    for (const auto& e : g.edges) {
      std::string line = "B" + std::to_string(e.src) + " -> B" + std::to_string(e.dst);
      if (e.label != controlflow::EdgeLabel::kUnconditional) {
        line += " " + std::string(controlflow::to_string(e.label));
      }
      out.push_back(line);
    }
  }
  return out;
}

std::string LineDiff::describe() const {
  std::string out;
  for (const auto& m : missing) out += "  missing: " + m + "\n";
  for (const auto& e : extra) out += "  extra:   " + e + "\n";
  return out;
}

LineDiff diff_unordered(std::vector<std::string> expected, std::vector<std::string> actual) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  LineDiff d;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(d.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(d.extra));
  return d;
}

LineDiff diff_ordered(const std::vector<std::string>& expected,
                      const std::vector<std::string>& actual) {
  LineDiff d;
  const auto n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string* e = i < expected.size() ? &expected[i] : nullptr;
    const std::string* a = i < actual.size() ? &actual[i] : nullptr;
    if (e && a && *e == *a) continue;
    if (e) d.missing.push_back("#" + std::to_string(i) + " " + *e);
    if (a) d.extra.push_back("#" + std::to_string(i) + " " + *a);
  }
  return d;
}

namespace {

// UTF-8 code points, invalid bytes split off one at a time.
std::vector<std::string> split_code_points(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    bool ok = i + len <= s.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      ok = (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    }
    if (!ok) len = 1;
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::vector<tokenizer::Merge> naive_bpe(const std::vector<std::string>& corpus,
                                        std::size_t num_merges) {
  // Every word occurrence is kept separately; nothing is cached across rounds.
  std::vector<std::vector<std::string>> words;
  for (const auto& text : corpus) {
    for (const auto& w : split_words(text)) words.push_back(split_code_points(w));
  }
  std::vector<tokenizer::Merge> merges;
  while (merges.size() < num_merges) {
    std::vector<std::pair<tokenizer::Merge, std::size_t>> counts;
    for (const auto& w : words) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        tokenizer::Merge pair{w[i], w[i + 1]};
        bool found = false;
        for (auto& [p, c] : counts) {
          if (p == pair) {
            ++c;
            found = true;
            break;
          }
        }
        if (!found) counts.push_back({pair, 1});
      }
    }
    if (counts.empty()) break;
    const tokenizer::Merge* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& [p, c] : counts) {
      if (c > best_count || (c == best_count && p < *best)) {
        best = &p;
        best_count = c;
      }
    }
    const auto merge = *best;
    merges.push_back(merge);
    for (auto& w : words) {
      std::vector<std::string> next;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i] == merge.first && w[i + 1] == merge.second) {
          next.push_back(w[i] + w[i + 1]);
          ++i;
        } else {
          next.push_back(w[i]);
        }
      }
      w = std::move(next);
    }
  }
  return merges;
}

std::vector<std::string> naive_encode_chunk(const std::string& chunk,
                                            const std::vector<std::string>& chars,
                                            const std::vector<tokenizer::Merge>& merges) {
  struct Sym {
    std::string text;
    bool mergeable;
  };
  std::vector<Sym> syms;
  for (const auto& cp : split_code_points(chunk)) {
    if (std::find(chars.begin(), chars.end(), cp) != chars.end()) {
      syms.push_back({cp, true});
    } else {
      for (char b : cp) syms.push_back({std::string(1, b), false});
    }
  }
  for (const auto& m : merges) {
    std::vector<Sym> next;
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (i + 1 < syms.size() && syms[i].mergeable && syms[i + 1].mergeable &&
          syms[i].text == m.first && syms[i + 1].text == m.second) {
        next.push_back({syms[i].text + syms[i + 1].text, true});
        ++i;
      } else {
        next.push_back(syms[i]);
      }
    }
    syms = std::move(next);
  }
  std::vector<std::string> out;
  for (auto& s : syms) out.push_back(std::move(s.text));
  return out;
}

DotStats dot_stats(const std::string& dot) {
  DotStats st;
  st.is_digraph = dot.rfind("digraph ", 0) == 0;
  int depth = 0;
  bool ok = true;
  std::set<std::string> attrs;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    // Drop quoted strings so label text cannot be mistaken for syntax.
    std::string bare;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '\\') {
          ++i;
        } else if (c == '"') {
          quoted = false;
          bare += "\"\"";
        }
        continue;
      }
      if (c == '"') {
        quoted = true;
        continue;
      }
      bare += c;
    }
    ok = ok && !quoted;
    for (char c : bare) {
      if (c == '{') ++depth;
      if (c == '}') ok = ok && --depth >= 0;
    }
    const auto open = bare.find('[');
    const bool edge = bare.find(" -> ") != std::string::npos;
    const bool node = !edge && open != std::string::npos;
    st.edges += edge;
    st.nodes += node;
    if (open != std::string::npos) {
      const auto attr_text = bare.substr(open);
      if (node && attr_text.find("shape=diamond") != std::string::npos) ++st.diamonds;
      if (node && attr_text.find("shape=doublecircle") != std::string::npos) ++st.doublecircles;
      if (edge && attr_text.find("style=dashed") != std::string::npos) ++st.dashed_edges;
    }
    // Attribute names: identifiers directly followed by '='.
    for (std::size_t i = 0; i < bare.size(); ++i) {
      if (bare[i] != '=') continue;
      std::size_t j = i;
      while (j > 0 && (std::isalnum(static_cast<unsigned char>(bare[j - 1])) || bare[j - 1] == '_')) --j;
      if (j < i) attrs.insert(bare.substr(j, i - j));
    }
  }
  st.attributes.assign(attrs.begin(), attrs.end());
  st.balanced = ok && depth == 0;
  return st;
}

CommandResult run_command(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace codelens::testing
