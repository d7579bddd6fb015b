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

#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "codelens/corpus.hpp"
#include "codelens/tokenizer.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::tokenizer;
using namespace codelens::testing;

namespace {

std::vector<std::string> texts(const std::vector<Piece>& pieces) {
  std::vector<std::string> out;
  for (const auto& p : pieces) out.push_back(p.text);
  return out;
}

// Micro-corpus over a small alphabet so that pairs repeat.
std::string micro_corpus(std::mt19937& rng) {
  static const char* kUnits[] = {"a", "b", "c", "ab", " ", " ", "\n", "\xC3\xA9", "x"};
  std::string s;
  const auto target = 20 + rng() % 181;
  while (s.size() < target) {
    std::string unit = kUnits[rng() % 9];
    if (s.size() + unit.size() > 200) break;
    s += unit;
  }
  return s;
}

}  // namespace

TEST_SUITE("tokenizer") {

TEST_CASE("pre_tokenize splits on whitespace runs") {
  const auto pieces = pre_tokenize("x = 1");
  REQUIRE(pieces.size() == 3);
  CHECK(texts(pieces) == std::vector<std::string>{"x", "=", "1"});
  CHECK(pieces[1].span.start_byte == 2);
  CHECK(pieces[2].span.start_col == 4);
  CHECK(pre_tokenize(" \t\n\r\v\f").empty());
  CHECK(texts(pre_tokenize("a\vb\fc")) == std::vector<std::string>{"a", "b", "c"});
  // Non-breaking space is not a separator.
  CHECK(pre_tokenize("a\xC2\xA0"
                     "b")
            .size() == 1);
}

TEST_CASE("training examples") {
  const std::vector<std::string> aaaa{"aaaa"};
  const auto v = train_bpe(aaaa, 2);
  CHECK(v.merges() == std::vector<Merge>{{"a", "a"}, {"aa", "aa"}});

  const std::vector<std::string> ab{"ab abc"};
  const auto w = train_bpe(ab, 1);
  CHECK(w.merges() == std::vector<Merge>{{"a", "b"}});
  CHECK(serialize_vocab(w).find("a\tb\n") != std::string::npos);

  const auto none = train_bpe(ab, 0);
  CHECK(none.merges().empty());
  CHECK(none.chars() == std::vector<std::string>{"a", "b", "c"});
  CHECK(serialize_vocab(none) == "bpe-vocab v1\nchars:\na\nb\nc\nmerges:\n");
}

TEST_CASE("training stops when no pair is left") {
  const std::vector<std::string> corpus{"ab"};
  const auto v = train_bpe(corpus, 50);
  CHECK(v.merges().size() == 1);
}

TEST_CASE("empty corpus") {
  const std::vector<std::string> empty;
  CHECK_THROWS_AS(train_bpe(empty, 3), Error);
  const std::vector<std::string> blank{"  \n\t"};
  try {
    train_bpe(blank, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyCorpus);
  }
}

TEST_CASE("train_bpe equals the brute-force oracle") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> corpus{micro_corpus(rng), micro_corpus(rng)};
    const auto merges = 1 + rng() % 30;
    CAPTURE(corpus[0]);
    CHECK(train_bpe(corpus, merges).merges() == naive_bpe(corpus, merges));
  }
}

TEST_CASE("encode equals in-order merge application") {
  std::mt19937 rng(77);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> corpus{micro_corpus(rng)};
    const auto vocab = train_bpe(corpus, 1 + rng() % 25);
    const auto probe = micro_corpus(rng) + " zz\xE2\x9C\x93";
    const auto seq = encode(probe, vocab);
    std::vector<std::string> expected;
    for (const auto& p : pre_tokenize(probe)) {
      for (auto& t : naive_encode_chunk(p.text, vocab.chars(), vocab.merges())) {
        expected.push_back(std::move(t));
      }
    }
    CHECK(texts(seq.pieces) == expected);
  }
}

TEST_CASE("decode of encode reproduces pre_tokenize") {
  const auto& vocab = corpus::default_vocabulary();
  for (auto language : kAllLanguages) {
    for (const auto& code : generate_snippets(language, 100, 3)) {
      const auto seq = encode(code, vocab);
      REQUIRE(seq.ids.size() == seq.pieces.size());
      for (auto id : seq.ids) CHECK(id < vocab.size());
      const auto bytes = decode(seq.ids, vocab);
      // Pieces never straddle chunks, so concatenating within each chunk
      // must give the chunk back.
      const auto chunks = pre_tokenize(code);
      std::size_t k = 0;
      for (const auto& chunk : chunks) {
        std::string joined;
        while (k < seq.pieces.size() && seq.pieces[k].span.end_byte <= chunk.span.end_byte) {
          CHECK(bytes[k] == seq.pieces[k].text);
          joined += bytes[k++];
        }
        CHECK(joined == chunk.text);
      }
      CHECK(k == seq.pieces.size());
    }
  }
}

TEST_CASE("double training is byte-identical") {
  std::vector<std::string> corpus;
  for (const auto& ex : corpus::all_examples()) corpus.emplace_back(ex.code);
  const auto a = serialize_vocab(train_bpe(corpus, 300));
  const auto b = serialize_vocab(train_bpe(corpus, 300));
  CHECK(a == b);
}

TEST_CASE("byte fallback") {
  const std::vector<std::string> corpus{"ab"};
  const auto vocab = train_bpe(corpus, 1);
  const auto seq = encode("ab \xE2\x9C\x93", vocab);
  REQUIRE(seq.ids.size() == 4);
  CHECK(vocab.display(seq.ids[0]) == "ab");
  CHECK(seq.ids[1] == 0xE2);
  CHECK(vocab.display(seq.ids[1]) == "<0xE2>");
  CHECK(Vocabulary::is_byte_id(seq.ids[3]));
  CHECK(seq.pieces[1].span.size() == 1);
  const auto bytes = decode(seq.ids, vocab);
  CHECK(bytes[1] + bytes[2] + bytes[3] == "\xE2\x9C\x93");
}

TEST_CASE("unknown ids") {
  const auto vocab = train_bpe(std::vector<std::string>{"ab"}, 1);
  const std::vector<std::uint32_t> ids{static_cast<std::uint32_t>(vocab.size())};
  try {
    decode(ids, vocab);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownId);
  }
}

TEST_CASE("ids are assigned bytes, then chars, then merge results") {
  const auto vocab = train_bpe(std::vector<std::string>{"ab ab"}, 1);
  CHECK(vocab.size() == 256 + 3);
  CHECK(vocab.id_of("a") == 256u);
  CHECK(vocab.id_of("b") == 257u);
  CHECK(vocab.id_of("ab") == 258u);
  CHECK_FALSE(vocab.id_of("zz"));
}

TEST_CASE("vocabulary text format round-trips") {
  Vocabulary v({"a", "\\", "\t", "\x01", "\xC3\xA9", "\x7F"},
               {{"a", "\\"}, {"a\\", "\t"}, {"\xC3\xA9", "\x01"}});
  const auto text = serialize_vocab(v);
  CHECK(text.find("\\\\") != std::string::npos);
  CHECK(text.find("\\x01") != std::string::npos);
  CHECK(text.find("\\x7f") != std::string::npos);
  CHECK(parse_vocab(text) == v);
  CHECK(serialize_vocab(parse_vocab(text)) == text);
}

TEST_CASE("malformed vocabularies name the line") {
  auto code_of = [](const std::string& text) {
    try {
      parse_vocab(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMalformedVocabulary);
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(code_of("") != "accepted");
  CHECK(code_of("bpe-vocab v2\nchars:\nmerges:\n").find("line 1") != std::string::npos);
  CHECK(code_of("bpe-vocab v1\nchars:\na\n").find("merges") != std::string::npos);
  CHECK(code_of("bpe-vocab v1\nchars:\na\nmerges:\na\ta").find("final newline") !=
        std::string::npos);
  CHECK(code_of("bpe-vocab v1\nchars:\na\nmerges:\naa\n").find("line 5") != std::string::npos);
  CHECK(code_of("bpe-vocab v1\nchars:\n\\q\nmerges:\n").find("line 3") != std::string::npos);
  CHECK(code_of("bpe-vocab v1\nchars:\na\na\nmerges:\n") != "accepted");
  CHECK(code_of("bpe-vocab v1\nchars:\na\nmerges:\na\tb\n") != "accepted");
  CHECK(code_of("bpe-vocab v1\nchars:\na\nmerges:\na\ta\n") == "accepted");
}

TEST_CASE("save and load") {
  const auto dir = std::filesystem::temp_directory_path() / "codelens-tokenizer-test";
  std::filesystem::create_directories(dir);
  const auto vocab = train_bpe(std::vector<std::string>{"hello world"}, 4);
  save_vocab(vocab, dir / "v.vocab");
  CHECK(load_vocab(dir / "v.vocab") == vocab);
  try {
    load_vocab(dir / "missing.vocab");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("default vocabulary") {
  const auto& vocab = corpus::default_vocabulary();
  CHECK(vocab.size() > 256);
  CHECK(vocab.merges().size() > 0);
  CHECK(encode("x = 1", vocab).ids.size() == 3);
  CHECK(parse_vocab(corpus::default_vocab_text()) == vocab);
}

}
