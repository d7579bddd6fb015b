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

// Whitespace pre-tokenization and byte-pair encoding.
//
// Vocabulary ids 0..255 are byte-fallback entries, one per byte value. Text
// entries follow: the character inventory in byte order, then one entry per
// distinct merge result in training order.

#ifndef CODELENS_TOKENIZER_HPP_
#define CODELENS_TOKENIZER_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codelens/core.hpp"

namespace codelens::tokenizer {

inline constexpr std::uint32_t kByteEntries = 256;

struct Piece {
  // Source bytes covered by the piece (a single byte for fallback pieces).
  std::string text;
  Span span;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct TokenSequence {
  std::vector<Piece> pieces;
  std::vector<std::uint32_t> ids;
};

using Merge = std::pair<std::string, std::string>;

class Vocabulary {
 public:
  Vocabulary() = default;
  // Throws Error{kMalformedVocabulary} on duplicate characters or a merge
  // whose halves are not entries at that point.
  Vocabulary(std::vector<std::string> chars, std::vector<Merge> merges);

  std::size_t size() const { return kByteEntries + texts_.size(); }
  const std::vector<std::string>& chars() const { return chars_; }
  const std::vector<Merge>& merges() const { return merges_; }

  std::optional<std::uint32_t> id_of(std::string_view text) const;
  static bool is_byte_id(std::uint32_t id) { return id < kByteEntries; }
  // Entry text; byte entries render as "<0xNN>".
  std::string display(std::uint32_t id) const;
  // Bytes the entry stands for. Throws Error{kUnknownId} when out of range.
  std::string bytes_of(std::uint32_t id) const;

  struct Rule {
    std::uint32_t rank;
    std::uint32_t result;
  };
  // Merge rule joining two entries, if any.
  std::optional<Rule> rule(std::uint32_t left, std::uint32_t right) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.chars_ == b.chars_ && a.merges_ == b.merges_;
  }

 private:
  std::vector<std::string> chars_;
  std::vector<Merge> merges_;
  // Text of entry kByteEntries + i.
  std::vector<std::string> texts_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::unordered_map<std::uint64_t, Rule> rules_;
};

// Splits on runs of ' ', '\t', '\n', '\r', '\v', '\f'.
std::vector<Piece> pre_tokenize(std::string_view code);

// Greedy BPE: each round merges the most frequent adjacent pair (ties go to
// the lexicographically smallest (left, right)); stops early when no pair
// is left. Throws Error{kEmptyCorpus} when the corpus has no pieces.
Vocabulary train_bpe(std::span<const std::string> corpus, std::size_t num_merges);

TokenSequence encode(std::string_view code, const Vocabulary& vocab);

// Byte strings of each id, in order. Throws Error{kUnknownId}.
std::vector<std::string> decode(std::span<const std::uint32_t> ids, const Vocabulary& vocab);

// Text format: "bpe-vocab v1", "chars:" block, "merges:" block.
std::string serialize_vocab(const Vocabulary& vocab);
// Throws Error{kMalformedVocabulary} with the offending line number.
Vocabulary parse_vocab(std::string_view text);

// Throw Error{kIo} on file failures.
void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary load_vocab(const std::filesystem::path& path);

// Splits text into UTF-8 code points; an invalid byte becomes its own unit.
std::vector<std::string_view> code_points(std::string_view text);

}  // namespace codelens::tokenizer

#endif  // CODELENS_TOKENIZER_HPP_
