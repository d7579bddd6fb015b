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

#include <cstdlib>
#include <string>

#include "codelens/simd/scan.hpp"

namespace codelens::simd {
namespace {

std::vector<Kernels> probe() {
  std::vector<Kernels> out;
  out.push_back({Level::kScalar, &detail::whitespace_bitmap_scalar,
                 &detail::newline_bitmap_scalar, &detail::ascii_prefix_scalar});
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("sse2")) {
    out.push_back({Level::kSse2, &detail::whitespace_bitmap_sse2,
                   &detail::newline_bitmap_sse2, &detail::ascii_prefix_sse2});
  }
  if (__builtin_cpu_supports("avx2")) {
    out.push_back({Level::kAvx2, &detail::whitespace_bitmap_avx2,
                   &detail::newline_bitmap_avx2, &detail::ascii_prefix_avx2});
  }
#endif
#if defined(__aarch64__)
  out.push_back({Level::kNeon, &detail::whitespace_bitmap_neon,
                 &detail::newline_bitmap_neon, &detail::ascii_prefix_neon});
#endif
  return out;
}

const Kernels& select() {
  const auto kernels = available_kernels();
  if (const char* pinned = std::getenv("CODELENS_SIMD")) {
    for (const auto& k : kernels) {
      if (to_string(k.level) == pinned) return k;
    }
  }
  return kernels.back();
}

// Invokes fn(offset) for every set bit, in increasing order.
template <typename Fn>
void for_each_bit(const std::vector<std::uint64_t>& bits, Fn fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word != 0) {
      fn(static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(word)));
      word &= word - 1;
    }
  }
}

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::kScalar: return "scalar";
    case Level::kSse2: return "sse2";
    case Level::kAvx2: return "avx2";
    case Level::kNeon: return "neon";
  }
  return "scalar";
}

std::span<const Kernels> available_kernels() {
  static const std::vector<Kernels> kernels = probe();
  return kernels;
}

const Kernels& active_kernels() {
  static const Kernels& active = select();
  return active;
}

std::vector<ByteRange> non_whitespace_runs(std::string_view text,
                                           const Kernels& kernels) {
  std::vector<ByteRange> runs;
  const auto size = text.size();
  if (size == 0) return runs;
  std::vector<std::uint64_t> bits(bitmap_words(size));
  kernels.whitespace_bitmap(reinterpret_cast<const std::uint8_t*>(text.data()),
                            size, bits.data());
  // Walk transitions between whitespace and non-whitespace one word at a time.
  std::size_t pos = 0;
  while (pos < size) {
    // Skip whitespace: find the next clear bit at or after pos.
    while (pos < size) {
      const std::uint64_t inverted = ~bits[pos / 64] >> (pos % 64);
      if (inverted != 0) {
        pos += static_cast<std::size_t>(__builtin_ctzll(inverted));
        break;
      }
      pos = (pos / 64 + 1) * 64;
    }
    if (pos >= size) break;
    const auto begin = pos;
    // Find the next set bit after begin.
    while (pos < size) {
      const std::uint64_t word = bits[pos / 64] >> (pos % 64);
      if (word != 0) {
        pos += static_cast<std::size_t>(__builtin_ctzll(word));
        break;
      }
      pos = (pos / 64 + 1) * 64;
    }
    if (pos > size) pos = size;
    runs.push_back({static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(pos)});
  }
  return runs;
}

std::vector<std::uint32_t> newline_offsets(std::string_view text,
                                           const Kernels& kernels) {
  std::vector<std::uint32_t> offsets;
  if (text.empty()) return offsets;
  std::vector<std::uint64_t> bits(bitmap_words(text.size()));
  kernels.newline_bitmap(reinterpret_cast<const std::uint8_t*>(text.data()),
                         text.size(), bits.data());
  for_each_bit(bits, [&](std::uint32_t offset) { offsets.push_back(offset); });
  return offsets;
}

}  // namespace codelens::simd
