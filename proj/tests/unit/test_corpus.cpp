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

#include <doctest.h>

#include <set>
#include <string>

#include "codelens/corpus.hpp"
#include "codelens/syntax.hpp"
#include "support.hpp"

using namespace codelens;

TEST_SUITE("corpus") {

TEST_CASE("five examples per language") {
  CHECK(corpus::all_examples().size() == 15);
  std::set<std::string_view> ids;
  for (auto language : kAllLanguages) {
    const auto list = corpus::examples(language);
    CHECK(list.size() == 5);
    for (const auto& ex : list) {
      CHECK(ex.language == language);
      CHECK(ex.id.substr(0, ex.id.find('/')) == to_string(language));
      CHECK_FALSE(ex.title.empty());
      CHECK_FALSE(ex.code.empty());
      ids.insert(ex.id);
    }
  }
  CHECK(ids.size() == 15);
  CHECK(corpus::all_examples()[0].id == "python/fibonacci");
}

TEST_CASE("embedded code matches the data directory") {
  for (const auto& ex : corpus::all_examples()) {
    CAPTURE(ex.id);
    const auto on_disk =
        testing::read_file(testing::source_dir() / "data" / std::string(ex.path));
    CHECK(on_disk == ex.code);
  }
}

TEST_CASE("examples parse cleanly") {
  for (const auto& ex : corpus::all_examples()) {
    CAPTURE(ex.id);
    const auto ast = syntax::parse({std::string(ex.code), ex.language});
    CHECK(ast.diagnostics.empty());
  }
}

TEST_CASE("default vocabulary") {
  const auto& vocab = corpus::default_vocabulary();
  CHECK(&vocab == &corpus::default_vocabulary());
  CHECK(corpus::named_vocabulary("default") == &vocab);
  CHECK(corpus::named_vocabulary("nope") == nullptr);
  CHECK(corpus::named_vocabulary("") == nullptr);
  CHECK(vocab.size() > 256);
  const auto on_disk = testing::read_file(testing::source_dir() / "data/vocab/default.vocab");
  CHECK(on_disk == corpus::default_vocab_text());
}

}
