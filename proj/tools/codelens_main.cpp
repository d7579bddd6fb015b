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

// codelens: command-line front end.
//
//   codelens convert --lang L --repr R [--format json|dot] [--strict]
//                    [--pretty] [--vocab FILE] [--out FILE] INPUT|-
//   codelens train-vocab --merges N --out FILE PATH...
//   codelens examples --lang L
//
// Exit codes: 0 ok, 1 usage or input error, 2 strict-mode syntax error,
// 3 parse timeout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codelens/corpus.hpp"
#include "codelens/engine.hpp"
#include "codelens/tokenizer.hpp"

namespace {

using namespace codelens;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStrict = 2;
constexpr int kExitTimeout = 3;

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  return buf.str();
}

bool write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return std::fflush(stdout) == 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return static_cast<bool>(out);
}

struct ConvertArgs {
  std::string lang;
  std::string repr;
  std::string format = "json";
  bool strict = false;
  bool pretty = false;
  std::string vocab;
  std::string out;
  std::string input;
};

int run_convert(const ConvertArgs& a) {
  const auto language = parse_language(a.lang);
  if (!language) {
    std::cerr << "codelens: unknown language '" << a.lang << "' (java, python, javascript)\n";
    return kExitUsage;
  }
  const auto repr = parse_representation(a.repr);
  if (!repr) {
    std::cerr << "codelens: unknown representation '" << a.repr << "' (tokens, ast, dfg, cfg)\n";
    return kExitUsage;
  }
  const bool dot = a.format == "dot";
  if (dot && *repr == RepresentationKind::kTokens) {
    std::cerr << "codelens: dot output is not available for tokens\n";
    return kExitUsage;
  }
  auto code = read_input(a.input);
  if (!code) {
    std::cerr << "codelens: cannot read " << a.input << "\n";
    return kExitUsage;
  }

  std::optional<tokenizer::Vocabulary> vocab;
  engine::ConvertRequest req;
  req.language = *language;
  req.representation = *repr;
  req.code = std::move(*code);
  req.strict = a.strict;
  req.pretty = a.pretty;
  req.limits = Limits::from_environment();
  const std::string origin = a.input == "-" ? "<stdin>" : a.input;
  try {
    if (!a.vocab.empty()) {
      vocab = tokenizer::load_vocab(a.vocab);
      req.vocab = &*vocab;
    }
    const auto result = engine::convert(req);
    if (!write_output(a.out, dot ? *result.dot : result.envelope)) {
      std::cerr << "codelens: cannot write " << (a.out.empty() ? "<stdout>" : a.out) << "\n";
      return kExitUsage;
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << origin;
    if (!e.diagnostics().empty()) {
      const auto& s = e.diagnostics().front().span;
      std::cerr << ":" << s.start_line + 1 << ":" << s.start_col + 1;
    }
    std::cerr << ": error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kStrictModeSyntaxError: return kExitStrict;
      case ErrorCode::kTimeout: return kExitTimeout;
      default: return kExitUsage;
    }
  }
}

int run_train(std::size_t merges, const std::string& out, const std::vector<std::string>& paths) {
  if (paths.empty()) {
    std::cerr << "codelens: train-vocab needs at least one input path\n";
    return kExitUsage;
  }
  std::vector<std::string> corpus;
  for (const auto& p : paths) {
    auto text = read_input(p);
    if (!text) {
      std::cerr << "codelens: cannot read " << p << "\n";
      return kExitUsage;
    }
    corpus.push_back(std::move(*text));
  }
  try {
    const auto vocab = tokenizer::train_bpe(corpus, merges);
    tokenizer::save_vocab(vocab, out);
    std::cerr << "learned " << vocab.merges().size() << " merges (requested " << merges
              << "), " << vocab.size() << " entries\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "codelens: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_examples(const std::string& lang) {
  const auto language = parse_language(lang);
  if (!language) {
    std::cerr << "codelens: unknown language '" << lang << "' (java, python, javascript)\n";
    return kExitUsage;
  }
  for (const auto& ex : corpus::examples(*language)) {
    std::cout << ex.id << '\t' << ex.path << '\t' << ex.title << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code representations: tokens, AST, data flow and control flow graphs."};
  app.name("codelens");
  app.require_subcommand(1);

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "Convert one source file");
  convert->add_option("--lang", conv.lang, "java, python or javascript")->required();
  convert->add_option("--repr", conv.repr, "tokens, ast, dfg or cfg")->required();
  convert->add_option("--format", conv.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  convert->add_flag("--strict", conv.strict, "Fail on syntax errors");
  convert->add_flag("--pretty", conv.pretty, "Indent JSON output");
  convert->add_option("--vocab", conv.vocab, "Vocabulary file for tokens")
      ->envname("CODELENS_VOCAB");
  convert->add_option("--out", conv.out, "Output file (default standard output)");
  convert->add_option("input", conv.input, "Source file, or - for standard input")->required();

  std::size_t merges = 0;
  std::string train_out;
  std::vector<std::string> train_paths;
  auto* train = app.add_subcommand("train-vocab", "Train a BPE vocabulary");
  train->add_option("--merges", merges, "Number of merges")->required();
  train->add_option("--out", train_out, "Vocabulary file to write")->required();
  train->add_option("paths", train_paths, "Corpus files");

  std::string examples_lang;
  auto* examples = app.add_subcommand("examples", "List bundled examples");
  examples->add_option("--lang", examples_lang, "java, python or javascript")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (convert->parsed()) return run_convert(conv);
  if (train->parsed()) return run_train(merges, train_out, train_paths);
  if (examples->parsed()) return run_examples(examples_lang);
  return kExitUsage;
}
