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

// Reference kernels. Every vector variant is tested against these.

#include "codelens/simd/scan.hpp"

#include <cstring>

namespace codelens::simd::detail {

void whitespace_bitmap_scalar(const std::uint8_t* data, std::size_t size,
                              std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < size; ++i) {
    if (is_whitespace_byte(data[i])) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

void newline_bitmap_scalar(const std::uint8_t* data, std::size_t size,
                           std::uint64_t* bits) {
  std::memset(bits, 0, bitmap_words(size) * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < size; ++i) {
    if (data[i] == '\n') bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t ascii_prefix_scalar(const std::uint8_t* data, std::size_t size) {
  std::size_t i = 0;
  while (i < size && data[i] < 0x80) ++i;
  return i;
}

}  // namespace codelens::simd::detail
