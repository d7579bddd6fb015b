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

// Byte-classification kernels used by the tokenizer and the line index.
//
// Every kernel has a scalar reference implementation. Vector variants
// (SSE2, AVX2 on x86-64; NEON on AArch64) must produce bit-identical
// results and are selected once at startup from CPU feature probes. The
// CODELENS_SIMD environment variable ("scalar", "sse2", "avx2", "neon")
// pins the choice when the requested level is available.

#ifndef CODELENS_SIMD_SCAN_HPP_
#define CODELENS_SIMD_SCAN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace codelens::simd {

enum class Level { kScalar, kSse2, kAvx2, kNeon };

std::string_view to_string(Level level);

// Bitmaps hold one bit per input byte, LSB-first within each 64-bit word.
// Bits past the end of the input are zero.
using BitmapFn = void (*)(const std::uint8_t* data, std::size_t size,
                          std::uint64_t* bits);
// Length of the longest prefix whose bytes are all < 0x80.
using PrefixFn = std::size_t (*)(const std::uint8_t* data, std::size_t size);

struct Kernels {
  Level level;
  // ' ', '\t', '\n', '\r', '\v', '\f'
  BitmapFn whitespace_bitmap;
  BitmapFn newline_bitmap;
  PrefixFn ascii_prefix;
};

// Kernels compiled into this binary and runnable on this CPU, scalar first.
std::span<const Kernels> available_kernels();

// The kernel table in effect for this process.
const Kernels& active_kernels();

inline std::size_t bitmap_words(std::size_t size) { return (size + 63) / 64; }

inline bool is_whitespace_byte(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Half-open byte ranges of maximal non-whitespace runs, in order.
struct ByteRange {
  std::uint32_t begin;
  std::uint32_t end;
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};
std::vector<ByteRange> non_whitespace_runs(std::string_view text,
                                           const Kernels& kernels = active_kernels());

// Offsets of every '\n' byte, in order.
std::vector<std::uint32_t> newline_offsets(std::string_view text,
                                           const Kernels& kernels = active_kernels());

namespace detail {
void whitespace_bitmap_scalar(const std::uint8_t* data, std::size_t size,
                              std::uint64_t* bits);
void newline_bitmap_scalar(const std::uint8_t* data, std::size_t size,
                           std::uint64_t* bits);
std::size_t ascii_prefix_scalar(const std::uint8_t* data, std::size_t size);

#if defined(__x86_64__) || defined(_M_X64)
void whitespace_bitmap_sse2(const std::uint8_t* data, std::size_t size,
                            std::uint64_t* bits);
void newline_bitmap_sse2(const std::uint8_t* data, std::size_t size,
                         std::uint64_t* bits);
std::size_t ascii_prefix_sse2(const std::uint8_t* data, std::size_t size);

void whitespace_bitmap_avx2(const std::uint8_t* data, std::size_t size,
                            std::uint64_t* bits);
void newline_bitmap_avx2(const std::uint8_t* data, std::size_t size,
                         std::uint64_t* bits);
std::size_t ascii_prefix_avx2(const std::uint8_t* data, std::size_t size);
#endif

#if defined(__aarch64__)
void whitespace_bitmap_neon(const std::uint8_t* data, std::size_t size,
                            std::uint64_t* bits);
void newline_bitmap_neon(const std::uint8_t* data, std::size_t size,
                         std::uint64_t* bits);
std::size_t ascii_prefix_neon(const std::uint8_t* data, std::size_t size);
#endif
}  // namespace detail

}  // namespace codelens::simd

#endif  // CODELENS_SIMD_SCAN_HPP_
