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

#include "codelens/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "codelens/simd/scan.hpp"

namespace codelens::tokenizer {
namespace {

constexpr std::string_view kHeader = "bpe-vocab v1";

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kMalformedVocabulary,
              "malformed vocabulary, line " + std::to_string(line) + ": " + what);
}

std::string escape(std::string_view s) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (c < 0x20 || c == 0x7f) {
          out += "\\x";
          out += kHex[c >> 4];
          out += kHex[c & 15];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string unescape(std::string_view s, std::size_t line) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i >= s.size()) malformed(line, "dangling escape");
    switch (s[i]) {
      case '\\':
        out += '\\';
        break;
      case 't':
        out += '\t';
        break;
      case 'n':
        out += '\n';
        break;
      case 'r':
        out += '\r';
        break;
      case 'x': {
        auto hex = [&](char h) -> int {
          if (h >= '0' && h <= '9') return h - '0';
          if (h >= 'a' && h <= 'f') return h - 'a' + 10;
          if (h >= 'A' && h <= 'F') return h - 'A' + 10;
          malformed(line, "bad hex digit in escape");
        };
        if (i + 2 >= s.size()) malformed(line, "short \\x escape");
        out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
        i += 2;
        break;
      }
      default:
        malformed(line, "unknown escape");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string_view> code_points(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t n = sequence_length(static_cast<unsigned char>(text[i]));
    bool ok = n > 0 && i + n <= text.size();
    for (std::size_t k = 1; ok && k < n; ++k) {
      ok = (static_cast<unsigned char>(text[i + k]) & 0xC0) == 0x80;
    }
    if (!ok) n = 1;
    out.push_back(text.substr(i, n));
    i += n;
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> chars, std::vector<Merge> merges)
    : chars_(std::move(chars)), merges_(std::move(merges)) {
  for (const auto& c : chars_) {
    if (c.empty()) throw Error(ErrorCode::kMalformedVocabulary, "empty character entry");
    auto [it, inserted] =
        index_.try_emplace(c, static_cast<std::uint32_t>(kByteEntries + texts_.size()));
    if (!inserted) throw Error(ErrorCode::kMalformedVocabulary, "duplicate character entry");
    texts_.push_back(c);
  }
  for (std::size_t r = 0; r < merges_.size(); ++r) {
    const auto& [left, right] = merges_[r];
    auto l = index_.find(left);
    auto rt = index_.find(right);
    if (l == index_.end() || rt == index_.end()) {
      throw Error(ErrorCode::kMalformedVocabulary,
                  "merge " + std::to_string(r + 1) + " joins unknown entries");
    }
    auto joined = left + right;
    auto [it, inserted] =
        index_.try_emplace(joined, static_cast<std::uint32_t>(kByteEntries + texts_.size()));
    if (inserted) texts_.push_back(joined);
    auto [rule, fresh] = rules_.try_emplace(pair_key(l->second, rt->second),
                                            Rule{static_cast<std::uint32_t>(r), it->second});
    if (!fresh) {
      throw Error(ErrorCode::kMalformedVocabulary,
                  "merge " + std::to_string(r + 1) + " repeats an earlier merge");
    }
  }
}

std::optional<std::uint32_t> Vocabulary::id_of(std::string_view text) const {
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Vocabulary::display(std::uint32_t id) const {
  if (is_byte_id(id)) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    return std::string("<0x") + kHex[id >> 4] + kHex[id & 15] + ">";
  }
  return bytes_of(id);
}

std::string Vocabulary::bytes_of(std::uint32_t id) const {
  if (is_byte_id(id)) return std::string(1, static_cast<char>(id));
  if (id >= size()) {
    throw Error(ErrorCode::kUnknownId, "token id " + std::to_string(id) +
                                           " is outside the vocabulary of size " +
                                           std::to_string(size()));
  }
  return texts_[id - kByteEntries];
}

std::optional<Vocabulary::Rule> Vocabulary::rule(std::uint32_t left, std::uint32_t right) const {
  auto it = rules_.find(pair_key(left, right));
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

std::vector<Piece> pre_tokenize(std::string_view code) {
  LineIndex lines(code);
  std::vector<Piece> out;
  for (auto run : simd::non_whitespace_runs(code)) {
    out.push_back({std::string(code.substr(run.begin, run.end - run.begin)),
                   lines.span(run.begin, run.end)});
  }
  return out;
}

Vocabulary train_bpe(std::span<const std::string> corpus, std::size_t num_merges) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& text : corpus) {
    for (auto run : simd::non_whitespace_runs(text)) {
      ++counts[text.substr(run.begin, run.end - run.begin)];
    }
  }
  if (counts.empty()) throw Error(ErrorCode::kEmptyCorpus, "training corpus has no pieces");

  std::vector<std::string> symbols;
  std::unordered_map<std::string, std::uint32_t> symbol_ids;
  auto intern = [&](std::string s) {
    auto [it, inserted] = symbol_ids.try_emplace(s, static_cast<std::uint32_t>(symbols.size()));
    if (inserted) symbols.push_back(std::move(s));
    return it->second;
  };

  struct Word {
    std::vector<std::uint32_t> syms;
    std::int64_t freq;
  };
  std::vector<Word> words;
  std::set<std::string> chars;
  for (const auto& [text, freq] : counts) {
    Word w{{}, static_cast<std::int64_t>(freq)};
    for (auto cp : code_points(text)) {
      chars.emplace(cp);
      w.syms.push_back(intern(std::string(cp)));
    }
    words.push_back(std::move(w));
  }

  std::unordered_map<std::uint64_t, std::int64_t> pair_counts;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> where;
  auto better = [&](std::uint64_t x, std::uint64_t y) {
    auto cx = pair_counts.at(x), cy = pair_counts.at(y);
    if (cx != cy) return cx > cy;
    const auto& xl = symbols[x >> 32];
    const auto& yl = symbols[y >> 32];
    if (xl != yl) return xl < yl;
    return symbols[x & 0xffffffffu] < symbols[y & 0xffffffffu];
  };
  std::set<std::uint64_t, decltype(better)> ranked(better);
  auto adjust = [&](std::uint64_t key, std::int64_t delta) {
    auto it = pair_counts.find(key);
    if (it == pair_counts.end()) it = pair_counts.emplace(key, 0).first;
    if (it->second > 0) ranked.erase(key);
    it->second += delta;
    if (it->second > 0) {
      ranked.insert(key);
    } else {
      pair_counts.erase(it);
    }
  };
  for (std::uint32_t w = 0; w < words.size(); ++w) {
    const auto& syms = words[w].syms;
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      auto key = pair_key(syms[i], syms[i + 1]);
      adjust(key, words[w].freq);
      where[key].push_back(w);
    }
  }

  std::vector<Merge> merges;
  while (merges.size() < num_merges && !ranked.empty()) {
    const auto best = *ranked.begin();
    const auto a = static_cast<std::uint32_t>(best >> 32);
    const auto b = static_cast<std::uint32_t>(best & 0xffffffffu);
    merges.emplace_back(symbols[a], symbols[b]);
    const auto c = intern(symbols[a] + symbols[b]);
    auto affected = std::move(where[best]);
    where.erase(best);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (auto w : affected) {
      auto& syms = words[w].syms;
      const auto freq = words[w].freq;
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) adjust(pair_key(syms[i], syms[i + 1]), -freq);
      std::vector<std::uint32_t> merged;
      merged.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size();) {
        if (i + 1 < syms.size() && syms[i] == a && syms[i + 1] == b) {
          merged.push_back(c);
          i += 2;
        } else {
          merged.push_back(syms[i]);
          ++i;
        }
      }
      syms = std::move(merged);
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
        auto key = pair_key(syms[i], syms[i + 1]);
        adjust(key, freq);
        if (key != best) where[key].push_back(w);
      }
    }
  }
  return Vocabulary(std::vector<std::string>(chars.begin(), chars.end()), std::move(merges));
}

TokenSequence encode(std::string_view code, const Vocabulary& vocab) {
  LineIndex lines(code);
  TokenSequence out;
  struct Sym {
    std::uint32_t id;
    std::uint32_t begin;
    std::uint32_t end;
    std::int32_t prev;
    std::int32_t next;
    bool alive;
  };
  using Entry = std::pair<std::uint32_t, std::int32_t>;  // (rank, position)
  std::vector<Sym> syms;
  for (auto run : simd::non_whitespace_runs(code)) {
    syms.clear();
    auto chunk = code.substr(run.begin, run.end - run.begin);
    std::uint32_t offset = run.begin;
    for (auto cp : code_points(chunk)) {
      if (auto id = vocab.id_of(cp)) {
        syms.push_back({*id, offset, offset + static_cast<std::uint32_t>(cp.size()), 0, 0, true});
      } else {
        for (std::size_t k = 0; k < cp.size(); ++k) {
          auto byte = static_cast<unsigned char>(cp[k]);
          auto at = offset + static_cast<std::uint32_t>(k);
          syms.push_back({byte, at, at + 1, 0, 0, true});
        }
      }
      offset += static_cast<std::uint32_t>(cp.size());
    }
    const auto n = static_cast<std::int32_t>(syms.size());
    for (std::int32_t i = 0; i < n; ++i) {
      syms[i].prev = i - 1;
      syms[i].next = i + 1 < n ? i + 1 : -1;
    }
    // Lowest rank first, leftmost first within a rank: the same result as
    // applying the merge list in order, each merge left to right.
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::int32_t i = 0; i + 1 < n; ++i) {
      if (auto r = vocab.rule(syms[i].id, syms[i + 1].id)) heap.push({r->rank, i});
    }
    while (!heap.empty()) {
      auto [rank, i] = heap.top();
      heap.pop();
      auto& s = syms[i];
      if (!s.alive || s.next < 0) continue;
      auto& t = syms[s.next];
      auto r = vocab.rule(s.id, t.id);
      if (!r || r->rank != rank) continue;
      s.id = r->result;
      s.end = t.end;
      t.alive = false;
      s.next = t.next;
      if (s.next >= 0) syms[s.next].prev = i;
      if (s.prev >= 0) {
        if (auto left = vocab.rule(syms[s.prev].id, s.id); left && left->rank > rank) {
          heap.push({left->rank, s.prev});
        }
      }
      if (s.next >= 0) {
        if (auto right = vocab.rule(s.id, syms[s.next].id); right && right->rank > rank) {
          heap.push({right->rank, i});
        }
      }
    }
    for (std::int32_t i = 0; i >= 0 && i < n; i = syms[i].next) {
      const auto& s = syms[i];
      out.pieces.push_back({std::string(code.substr(s.begin, s.end - s.begin)),
                            lines.span(s.begin, s.end)});
      out.ids.push_back(s.id);
    }
  }
  return out;
}

std::vector<std::string> decode(std::span<const std::uint32_t> ids, const Vocabulary& vocab) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(vocab.bytes_of(id));
  return out;
}

std::string serialize_vocab(const Vocabulary& vocab) {
  std::string out(kHeader);
  out += "\nchars:\n";
  for (const auto& c : vocab.chars()) {
    out += escape(c);
    out += '\n';
  }
  out += "merges:\n";
  for (const auto& [left, right] : vocab.merges()) {
    out += escape(left);
    out += '\t';
    out += escape(right);
    out += '\n';
  }
  return out;
}

Vocabulary parse_vocab(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kMalformedVocabulary, "empty vocabulary file");
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines[0] != kHeader) malformed(1, "expected header \"bpe-vocab v1\"");
  if (lines.size() < 2 || lines[1] != "chars:") malformed(2, "expected \"chars:\"");
  std::vector<std::string> chars;
  std::size_t i = 2;
  for (; i < lines.size() && lines[i] != "merges:"; ++i) {
    if (lines[i].empty()) malformed(i + 1, "empty character line");
    chars.push_back(unescape(lines[i], i + 1));
  }
  if (i == lines.size()) malformed(i, "missing \"merges:\" section (truncated file?)");
  std::vector<Merge> merges;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty() && i + 1 == lines.size()) break;
    auto tab = lines[i].find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == lines[i].size()) {
      malformed(i + 1, "expected \"left<TAB>right\"");
    }
    merges.emplace_back(unescape(lines[i].substr(0, tab), i + 1),
                        unescape(lines[i].substr(tab + 1), i + 1));
  }
  if (text.back() != '\n') malformed(lines.size(), "missing final newline (truncated file?)");
  try {
    return Vocabulary(std::move(chars), std::move(merges));
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedVocabulary, std::string("malformed vocabulary: ") + e.what());
  }
}

void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << serialize_vocab(vocab);
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

Vocabulary load_vocab(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return parse_vocab(buffer.str());
}

}  // namespace codelens::tokenizer
