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

// Data compiled into the library: the bundled example programs and the
// default BPE vocabulary.

#ifndef CODELENS_CORPUS_HPP_
#define CODELENS_CORPUS_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "codelens/core.hpp"
#include "codelens/tokenizer.hpp"

namespace codelens::corpus {

struct Example {
  // "<language>/<slug>", e.g. "python/fibonacci".
  std::string_view id;
  std::string_view title;
  Language language;
  // Path under data/examples/.
  std::string_view path;
  std::string_view code;
};

// All 15 examples, grouped by language, stable order.
std::span<const Example> all_examples();
// The five examples of one language.
std::vector<Example> examples(Language language);

std::string_view default_vocab_text();
const tokenizer::Vocabulary& default_vocabulary();

// Vocabularies addressable by name over the API ("default").
const tokenizer::Vocabulary* named_vocabulary(std::string_view name);

}  // namespace codelens::corpus

#endif  // CODELENS_CORPUS_HPP_
