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

// One conversion pipeline shared by the CLI and the HTTP service, so both
// produce the same bytes for the same request.

#ifndef CODELENS_ENGINE_HPP_
#define CODELENS_ENGINE_HPP_

#include <optional>
#include <string>

#include "codelens/core.hpp"
#include "codelens/tokenizer.hpp"

namespace codelens::engine {

struct ConvertRequest {
  Language language = Language::kPython;
  RepresentationKind representation = RepresentationKind::kTokens;
  std::string code;
  bool strict = false;
  bool pretty = false;
  // Null means the bundled default vocabulary.
  const tokenizer::Vocabulary* vocab = nullptr;
  Limits limits;
};

struct ConvertResult {
  std::string envelope;
  // Absent for tokens.
  std::optional<std::string> dot;
};

// Throws Error: kSourceTooLarge, kInvalidSource, kTimeout,
// kStrictModeSyntaxError (carrying the syntax diagnostics).
// The token representation does not parse, so strict has no effect on it.
ConvertResult convert(const ConvertRequest& request);

}  // namespace codelens::engine

#endif  // CODELENS_ENGINE_HPP_
