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

// Shared test helpers: fixture rendering, independent oracles and the
// procedural snippet corpus.

#ifndef CODELENS_TESTS_SUPPORT_HPP_
#define CODELENS_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "codelens/controlflow.hpp"
#include "codelens/core.hpp"
#include "codelens/dataflow.hpp"
#include "codelens/tokenizer.hpp"

namespace codelens::testing {

std::filesystem::path source_dir();
std::filesystem::path fixture_dir();
std::string read_file(const std::filesystem::path& path);

Language language_of_extension(const std::filesystem::path& path);
std::string extension_of(Language language);

// Fixture files: "<name>.<ext>" with a sibling "<name>.expected".
struct Fixture {
  std::filesystem::path source;
  std::filesystem::path expected;
  Language language;
};
std::vector<Fixture> fixtures(const std::string& kind, Language language);

// Expected-file lines with blanks and '#' comments removed.
std::vector<std::string> expected_lines(const std::filesystem::path& path);

// "def a 1:1", "use a 2:5", "2:1 -> 2:5 computedFrom"; 1-based positions.
std::vector<std::string> render_dfg(const dataflow::Dfg& dfg);
// "graph f", "B0 entry", "B1 cond 2:4", "B2 body 3:5 4:5", "B0 -> B1",
// "B1 -> B2 true"; blocks and edges in id order.
std::vector<std::string> render_cfg(const controlflow::CfgSet& cfgs);

struct LineDiff {
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  bool empty() const { return missing.empty() && extra.empty(); }
  std::string describe() const;
};
// Multiset difference, order ignored.
LineDiff diff_unordered(std::vector<std::string> expected, std::vector<std::string> actual);
// Position-sensitive: any line mismatch is reported.
LineDiff diff_ordered(const std::vector<std::string>& expected,
                      const std::vector<std::string>& actual);

// Brute-force BPE: rescans the whole corpus for every merge.
std::vector<tokenizer::Merge> naive_bpe(const std::vector<std::string>& corpus,
                                        std::size_t num_merges);
// Encodes a chunk by repeatedly applying the lowest-ranked merge anywhere.
// Code points missing from `chars` fall back to single bytes that never merge.
std::vector<std::string> naive_encode_chunk(const std::string& chunk,
                                            const std::vector<std::string>& chars,
                                            const std::vector<tokenizer::Merge>& merges);

// Deterministic snippets (mt19937) that parse without errors.
std::vector<std::string> generate_snippets(Language language, std::size_t count,
                                           std::uint32_t seed);

// Shallow reading of the DOT text the exporter writes: one statement per
// line, quoted strings never span lines.
struct DotStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t diamonds = 0;
  std::size_t doublecircles = 0;
  std::size_t dashed_edges = 0;
  // Attribute names used anywhere.
  std::vector<std::string> attributes;
  bool is_digraph = false;
  bool balanced = false;
};
DotStats dot_stats(const std::string& dot);

// Runs a command through the shell; returns exit status and stdout.
struct CommandResult {
  int status = -1;
  std::string out;
};
CommandResult run_command(const std::string& command);

}  // namespace codelens::testing

#endif  // CODELENS_TESTS_SUPPORT_HPP_
