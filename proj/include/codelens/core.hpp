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

#ifndef CODELENS_CORE_HPP_
#define CODELENS_CORE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codelens {

// Version of the JSON interchange envelope. Any payload-shape change bumps it.
inline constexpr std::string_view kSchemaVersion = "1.0.0";

enum class Language { kJava, kPython, kJavaScript };

enum class RepresentationKind { kTokens, kAst, kDfg, kCfg };

inline constexpr Language kAllLanguages[] = {Language::kJava, Language::kPython,
                                             Language::kJavaScript};
inline constexpr RepresentationKind kAllRepresentations[] = {
    RepresentationKind::kTokens, RepresentationKind::kAst,
    RepresentationKind::kDfg, RepresentationKind::kCfg};

// Lower-case wire names: "java", "python", "javascript".
std::string_view to_string(Language language);
// Wire names: "tokens", "ast", "dfg", "cfg".
std::string_view to_string(RepresentationKind kind);

// Case-insensitive ("Python" is accepted).
std::optional<Language> parse_language(std::string_view name);
std::optional<RepresentationKind> parse_representation(std::string_view name);

// Byte range into the UTF-8 source with derived 0-based line/column.
// Columns count bytes from the start of the line.
struct Span {
  std::uint32_t start_byte = 0;
  std::uint32_t end_byte = 0;
  std::uint32_t start_line = 0;
  std::uint32_t start_col = 0;
  std::uint32_t end_line = 0;
  std::uint32_t end_col = 0;

  std::uint32_t size() const { return end_byte - start_byte; }
  bool contains(const Span& other) const {
    return start_byte <= other.start_byte && other.end_byte <= end_byte;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

// Maps byte offsets to line/column pairs. Built once per source.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text);

  std::uint32_t line_of(std::uint32_t byte) const;
  Span span(std::uint32_t start_byte, std::uint32_t end_byte) const;
  std::size_t line_count() const { return line_starts_.size(); }
  std::uint32_t text_size() const { return size_; }

 private:
  std::vector<std::uint32_t> line_starts_;
  std::uint32_t size_ = 0;
};

enum class Severity { kError, kWarning };
std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string message;
  Span span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct Limits {
  std::size_t max_source_bytes = 1u << 20;
  std::chrono::milliseconds parse_timeout{5000};

  // Reads CODELENS_MAX_BYTES and CODELENS_PARSE_TIMEOUT_MS when set.
  static Limits from_environment();
};

struct SourceUnit {
  std::string code;
  Language language = Language::kPython;
  std::string origin = "inline";
};

// Checks UTF-8 well-formedness and the size limit. Never throws.
std::vector<Diagnostic> validate_source(const SourceUnit& unit,
                                        const Limits& limits = {});

bool is_valid_utf8(std::string_view text);

enum class ErrorCode {
  kUnsupportedLanguage,
  kUnknownRepresentation,
  kInvalidSource,
  kSourceTooLarge,
  kTimeout,
  kStrictModeSyntaxError,
  kEmptyCorpus,
  kUnknownId,
  kMalformedVocabulary,
  kIo,
  kBadRequest,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Diagnostic> diagnostics = {})
      : std::runtime_error(message),
        code_(code),
        diagnostics_(std::move(diagnostics)) {}

  ErrorCode code() const { return code_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  ErrorCode code_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace codelens

#endif  // CODELENS_CORE_HPP_
