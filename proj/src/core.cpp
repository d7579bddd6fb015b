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

#include "codelens/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "codelens/simd/scan.hpp"

namespace codelens {

std::string_view to_string(Language language) {
  switch (language) {
    case Language::kJava: return "java";
    case Language::kPython: return "python";
    case Language::kJavaScript: return "javascript";
  }
  return "python";
}

std::string_view to_string(RepresentationKind kind) {
  switch (kind) {
    case RepresentationKind::kTokens: return "tokens";
    case RepresentationKind::kAst: return "ast";
    case RepresentationKind::kDfg: return "dfg";
    case RepresentationKind::kCfg: return "cfg";
  }
  return "tokens";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

namespace {

bool equals_ignore_case(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char c = a[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != b[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<Language> parse_language(std::string_view name) {
  for (auto language : kAllLanguages) {
    if (equals_ignore_case(name, to_string(language))) return language;
  }
  return std::nullopt;
}

std::optional<RepresentationKind> parse_representation(std::string_view name) {
  for (auto kind : kAllRepresentations) {
    if (equals_ignore_case(name, to_string(kind))) return kind;
  }
  return std::nullopt;
}

LineIndex::LineIndex(std::string_view text)
    : size_(static_cast<std::uint32_t>(text.size())) {
  line_starts_.push_back(0);
  for (auto nl : simd::newline_offsets(text)) line_starts_.push_back(nl + 1);
}

std::uint32_t LineIndex::line_of(std::uint32_t byte) const {
  const auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), byte);
  return static_cast<std::uint32_t>(it - line_starts_.begin() - 1);
}

Span LineIndex::span(std::uint32_t start_byte, std::uint32_t end_byte) const {
  Span s;
  s.start_byte = start_byte;
  s.end_byte = end_byte;
  s.start_line = line_of(start_byte);
  s.start_col = start_byte - line_starts_[s.start_line];
  s.end_line = line_of(end_byte);
  s.end_col = end_byte - line_starts_[s.end_line];
  return s;
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* v = std::getenv("CODELENS_MAX_BYTES")) {
    limits.max_source_bytes = std::strtoull(v, nullptr, 10);
  }
  if (const char* v = std::getenv("CODELENS_PARSE_TIMEOUT_MS")) {
    limits.parse_timeout = std::chrono::milliseconds(std::strtoll(v, nullptr, 10));
  }
  return limits;
}

namespace {

// Returns the offset of the first malformed sequence, or npos.
std::size_t first_invalid_utf8(std::string_view text) {
  const auto* data = reinterpret_cast<const std::uint8_t*>(text.data());
  const std::size_t size = text.size();
  const auto& kernels = simd::active_kernels();
  std::size_t i = 0;
  while (i < size) {
    i += kernels.ascii_prefix(data + i, size - i);
    if (i >= size) break;
    const std::uint8_t lead = data[i];
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (lead >= 0xc2 && lead <= 0xdf) {
      len = 2;
      cp = lead & 0x1f;
    } else if (lead >= 0xe0 && lead <= 0xef) {
      len = 3;
      cp = lead & 0x0f;
    } else if (lead >= 0xf0 && lead <= 0xf4) {
      len = 4;
      cp = lead & 0x07;
    } else {
      return i;
    }
    if (i + len > size) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((data[i + k] & 0xc0) != 0x80) return i;
      cp = (cp << 6) | (data[i + k] & 0x3f);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    if ((len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xd800 && cp <= 0xdfff) || cp > 0x10ffff) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  return first_invalid_utf8(text) == std::string_view::npos;
}

std::vector<Diagnostic> validate_source(const SourceUnit& unit, const Limits& limits) {
  std::vector<Diagnostic> out;
  if (unit.code.size() > limits.max_source_bytes) {
    Diagnostic d;
    d.message = "source exceeds size limit of " +
                std::to_string(limits.max_source_bytes) + " bytes";
    out.push_back(std::move(d));
    // Oversized inputs are not scanned further.
    return out;
  }
  const auto bad = first_invalid_utf8(unit.code);
  if (bad != std::string_view::npos) {
    const LineIndex index(unit.code);
    const auto at = static_cast<std::uint32_t>(bad);
    const auto size = static_cast<std::uint32_t>(unit.code.size());
    out.push_back({Severity::kError, "source is not valid UTF-8",
                   index.span(at, std::min(at + 1, size))});
  }
  return out;
}

}  // namespace codelens
