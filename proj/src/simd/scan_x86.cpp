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

// x86-64 kernels. Functions carry target attributes instead of relying on
// per-file -m flags so no inline code from shared headers is compiled with
// instructions the host may lack.

#include "codelens/simd/scan.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace codelens::simd::detail {
namespace {

// Tail handling shared by all widths: classify the remaining bytes one at a
// time into the already-zeroed bitmap.
template <typename Pred>
void scalar_tail(const std::uint8_t* data, std::size_t from, std::size_t size,
                 std::uint64_t* bits, Pred pred) {
  for (std::size_t i = from; i < size; ++i) {
    if (pred(data[i])) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

__attribute__((target("sse2"))) inline std::uint32_t ws_mask16(__m128i v) {
  // '\t'..'\r' is the contiguous range 0x09..0x0d; ' ' is separate.
  const __m128i space = _mm_cmpeq_epi8(v, _mm_set1_epi8(' '));
  // Signed compare works because the range sits well below 0x80.
  const __m128i ge_tab = _mm_cmpgt_epi8(v, _mm_set1_epi8(0x08));
  const __m128i le_cr = _mm_cmplt_epi8(v, _mm_set1_epi8(0x0e));
  const __m128i ctrl = _mm_and_si128(ge_tab, le_cr);
  return static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_or_si128(space, ctrl)));
}

__attribute__((target("avx2"))) inline std::uint32_t ws_mask32(__m256i v) {
  const __m256i space = _mm256_cmpeq_epi8(v, _mm256_set1_epi8(' '));
  const __m256i ge_tab = _mm256_cmpgt_epi8(v, _mm256_set1_epi8(0x08));
  const __m256i le_cr = _mm256_cmpgt_epi8(_mm256_set1_epi8(0x0e), v);
  const __m256i ctrl = _mm256_and_si256(ge_tab, le_cr);
  return static_cast<std::uint32_t>(
      _mm256_movemask_epi8(_mm256_or_si256(space, ctrl)));
}

}  // namespace

__attribute__((target("sse2"))) void whitespace_bitmap_sse2(
    const std::uint8_t* data, std::size_t size, std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(data + i));
    bits[i / 64] |= std::uint64_t{ws_mask16(v)} << (i % 64);
  }
  scalar_tail(data, i, size, bits, is_whitespace_byte);
}

__attribute__((target("sse2"))) void newline_bitmap_sse2(
    const std::uint8_t* data, std::size_t size, std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  const __m128i nl = _mm_set1_epi8('\n');
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(data + i));
    const auto m = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(v, nl)));
    bits[i / 64] |= std::uint64_t{m} << (i % 64);
  }
  scalar_tail(data, i, size, bits, [](std::uint8_t c) { return c == '\n'; });
}

__attribute__((target("sse2"))) std::size_t ascii_prefix_sse2(
    const std::uint8_t* data, std::size_t size) {
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(data + i));
    const int m = _mm_movemask_epi8(v);
    if (m != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m)));
  }
  return i + ascii_prefix_scalar(data + i, size - i);
}

__attribute__((target("avx2"))) void whitespace_bitmap_avx2(
    const std::uint8_t* data, std::size_t size, std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  std::size_t i = 0;
  for (; i + 64 <= size; i += 64) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i hi =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 32));
    bits[i / 64] = std::uint64_t{ws_mask32(lo)} | (std::uint64_t{ws_mask32(hi)} << 32);
  }
  scalar_tail(data, i, size, bits, is_whitespace_byte);
}

__attribute__((target("avx2"))) void newline_bitmap_avx2(
    const std::uint8_t* data, std::size_t size, std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  const __m256i nl = _mm256_set1_epi8('\n');
  std::size_t i = 0;
  for (; i + 64 <= size; i += 64) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i hi =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 32));
    const auto mlo = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lo, nl)));
    const auto mhi = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(hi, nl)));
    bits[i / 64] = std::uint64_t{mlo} | (std::uint64_t{mhi} << 32);
  }
  scalar_tail(data, i, size, bits, [](std::uint8_t c) { return c == '\n'; });
}

__attribute__((target("avx2"))) std::size_t ascii_prefix_avx2(
    const std::uint8_t* data, std::size_t size) {
  std::size_t i = 0;
  for (; i + 32 <= size; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const auto m = static_cast<std::uint32_t>(_mm256_movemask_epi8(v));
    if (m != 0) return i + static_cast<std::size_t>(__builtin_ctz(m));
  }
  return i + ascii_prefix_scalar(data + i, size - i);
}

}  // namespace codelens::simd::detail

#endif
