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

#include <random>
#include <string>
#include <vector>

#include "codelens/simd/scan.hpp"

using namespace codelens::simd;

namespace {

std::vector<std::uint64_t> bitmap(BitmapFn fn, const std::string& s) {
  std::vector<std::uint64_t> bits(bitmap_words(s.size()) + 1, 0xDEADBEEF);
  fn(reinterpret_cast<const std::uint8_t*>(s.data()), s.size(), bits.data());
  bits.pop_back();
  return bits;
}

// Inputs biased towards the bytes the kernels classify.
std::string random_text(std::mt19937& rng, std::size_t size) {
  static const char kAlphabet[] = " \t\n\r\v\fab{}\x80\xC3\xFF";
  std::string s(size, 'x');
  for (auto& c : s) c = kAlphabet[rng() % (sizeof(kAlphabet) - 1)];
  return s;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar is first and every level is distinct") {
  const auto kernels = available_kernels();
  REQUIRE(!kernels.empty());
  CHECK(kernels[0].level == Level::kScalar);
  for (std::size_t i = 1; i < kernels.size(); ++i) CHECK(kernels[i].level != Level::kScalar);
  MESSAGE("active kernels: " << to_string(active_kernels().level));
}

TEST_CASE("scalar kernels against a per-byte reference") {
  const std::string s = "a b\tc\nd\re\vf\fg";
  const auto bits = bitmap(detail::whitespace_bitmap_scalar, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(((bits[0] >> i) & 1) == (is_whitespace_byte(static_cast<std::uint8_t>(s[i])) ? 1u : 0u));
  }
  const auto nl = bitmap(detail::newline_bitmap_scalar, s);
  CHECK(nl[0] == (1ull << 5));
  CHECK(detail::ascii_prefix_scalar(reinterpret_cast<const std::uint8_t*>("ab\xC3"), 3) == 2);
}

TEST_CASE("vector kernels equal scalar on random inputs") {
  std::mt19937 rng(1234);
  const auto kernels = available_kernels();
  const auto& ref = kernels[0];
  for (int round = 0; round < 400; ++round) {
    const auto size = static_cast<std::size_t>(rng() % 300);
    auto text = random_text(rng, size);
    if (round % 3 == 0) {
      // Long ASCII stretches with a single high byte somewhere.
      for (auto& c : text) c = 'a';
      if (size > 0) text[rng() % size] = '\x90';
    }
    const auto* data = reinterpret_cast<const std::uint8_t*>(text.data());
    for (const auto& k : kernels) {
      CAPTURE(to_string(k.level));
      CAPTURE(size);
      CHECK(bitmap(k.whitespace_bitmap, text) == bitmap(ref.whitespace_bitmap, text));
      CHECK(bitmap(k.newline_bitmap, text) == bitmap(ref.newline_bitmap, text));
      CHECK(k.ascii_prefix(data, size) == ref.ascii_prefix(data, size));
      CHECK(non_whitespace_runs(text, k) == non_whitespace_runs(text, ref));
      CHECK(newline_offsets(text, k) == newline_offsets(text, ref));
    }
  }
}

TEST_CASE("unaligned starts") {
  std::mt19937 rng(99);
  const auto base = random_text(rng, 512);
  for (const auto& k : available_kernels()) {
    for (std::size_t off = 0; off < 40; ++off) {
      const auto view = std::string_view(base).substr(off, 200 + off);
      CHECK(non_whitespace_runs(view, k) == non_whitespace_runs(view, available_kernels()[0]));
    }
  }
}

TEST_CASE("runs and offsets") {
  const auto runs = non_whitespace_runs("  ab  c\n");
  REQUIRE(runs.size() == 2);
  CHECK(runs[0] == ByteRange{2, 4});
  CHECK(runs[1] == ByteRange{6, 7});
  CHECK(newline_offsets("a\nb\n") == std::vector<std::uint32_t>{1, 3});
  CHECK(non_whitespace_runs("").empty());
}

}
