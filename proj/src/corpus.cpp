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

#include "codelens/corpus.hpp"

#include <cstddef>
#include <string>

namespace codelens::corpus {
namespace detail {
struct EmbeddedFile {
  const char* path;
  const unsigned char* data;
  std::size_t size;
};
extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace detail

namespace {

std::string_view embedded(std::string_view path) {
  for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
    const auto& f = detail::kEmbeddedFiles[i];
    if (path == f.path) return {reinterpret_cast<const char*>(f.data), f.size};
  }
  throw Error(ErrorCode::kIo, "missing embedded file " + std::string(path));
}

struct Entry {
  std::string_view id;
  std::string_view title;
  Language language;
  std::string_view path;
};

constexpr Entry kEntries[] = {
    {"python/fibonacci", "Fibonacci numbers", Language::kPython, "examples/python/01-fibonacci.py"},
    {"python/binary-search", "Binary search", Language::kPython,
     "examples/python/02-binary-search.py"},
    {"python/word-count", "Word frequency count", Language::kPython,
     "examples/python/03-word-count.py"},
    {"python/bank-account", "Bank account with exceptions", Language::kPython,
     "examples/python/04-bank-account.py"},
    {"python/prime-sieve", "Prime sieve", Language::kPython, "examples/python/05-prime-sieve.py"},
    {"javascript/fibonacci", "Fibonacci numbers", Language::kJavaScript,
     "examples/javascript/01-fibonacci.js"},
    {"javascript/binary-search", "Binary search", Language::kJavaScript,
     "examples/javascript/02-binary-search.js"},
    {"javascript/fizzbuzz", "FizzBuzz with switch", Language::kJavaScript,
     "examples/javascript/03-fizzbuzz.js"},
    {"javascript/stack", "Stack class and bracket matching", Language::kJavaScript,
     "examples/javascript/04-stack.js"},
    {"javascript/debounce", "Debounce with closures", Language::kJavaScript,
     "examples/javascript/05-debounce.js"},
    {"java/fibonacci", "Fibonacci numbers", Language::kJava, "examples/java/01-Fibonacci.java"},
    {"java/binary-search", "Binary search", Language::kJava, "examples/java/02-BinarySearch.java"},
    {"java/fizzbuzz", "FizzBuzz with switch", Language::kJava, "examples/java/03-FizzBuzz.java"},
    {"java/word-count", "Word count with collections", Language::kJava,
     "examples/java/04-WordCount.java"},
    {"java/account", "Account with exceptions", Language::kJava, "examples/java/05-Account.java"},
};

std::vector<Example> build() {
  std::vector<Example> out;
  for (const auto& e : kEntries) {
    out.push_back({e.id, e.title, e.language, e.path, embedded(e.path)});
  }
  return out;
}

}  // namespace

std::span<const Example> all_examples() {
  static const std::vector<Example> all = build();
  return all;
}

std::vector<Example> examples(Language language) {
  std::vector<Example> out;
  for (const auto& e : all_examples()) {
    if (e.language == language) out.push_back(e);
  }
  return out;
}

std::string_view default_vocab_text() { return embedded("vocab/default.vocab"); }

const tokenizer::Vocabulary& default_vocabulary() {
  static const tokenizer::Vocabulary vocab = tokenizer::parse_vocab(default_vocab_text());
  return vocab;
}

const tokenizer::Vocabulary* named_vocabulary(std::string_view name) {
  if (name == "default") return &default_vocabulary();
  return nullptr;
}

}  // namespace codelens::corpus
