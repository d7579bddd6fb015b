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

#include "codelens/simd/scan.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

namespace codelens::simd::detail {
namespace {

// Packs the high bit of each byte lane into a 16-bit mask.
inline std::uint32_t movemask(uint8x16_t v) {
  static const uint8_t kWeights[16] = {1, 2, 4, 8, 16, 32, 64, 128,
                                       1, 2, 4, 8, 16, 32, 64, 128};
  const uint8x16_t masked = vandq_u8(vshrq_n_u8(v, 7), vdupq_n_u8(1));
  const uint8x16_t weighted = vmulq_u8(masked, vld1q_u8(kWeights));
  const std::uint32_t lo = vaddv_u8(vget_low_u8(weighted));
  const std::uint32_t hi = vaddv_u8(vget_high_u8(weighted));
  return lo | (hi << 8);
}

inline std::uint32_t ws_mask16(uint8x16_t v) {
  const uint8x16_t space = vceqq_u8(v, vdupq_n_u8(' '));
  const uint8x16_t ctrl =
      vandq_u8(vcgeq_u8(v, vdupq_n_u8(0x09)), vcleq_u8(v, vdupq_n_u8(0x0d)));
  return movemask(vorrq_u8(space, ctrl));
}

}  // namespace

void whitespace_bitmap_neon(const std::uint8_t* data, std::size_t size,
                            std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    bits[i / 64] |= std::uint64_t{ws_mask16(vld1q_u8(data + i))} << (i % 64);
  }
  for (; i < size; ++i) {
    if (is_whitespace_byte(data[i])) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

void newline_bitmap_neon(const std::uint8_t* data, std::size_t size,
                         std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    const uint8x16_t eq = vceqq_u8(vld1q_u8(data + i), vdupq_n_u8('\n'));
    bits[i / 64] |= std::uint64_t{movemask(eq)} << (i % 64);
  }
  for (; i < size; ++i) {
    if (data[i] == '\n') bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t ascii_prefix_neon(const std::uint8_t* data, std::size_t size) {
  std::size_t i = 0;
  for (; i + 16 <= size; i += 16) {
    if (vmaxvq_u8(vld1q_u8(data + i)) >= 0x80) break;
  }
  return i + ascii_prefix_scalar(data + i, size - i);
}

}  // namespace codelens::simd::detail

#endif
