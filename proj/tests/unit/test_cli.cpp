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

#include <filesystem>
#include <fstream>
#include <string>

#include "codelens/engine.hpp"
#include "codelens/tokenizer.hpp"
#include "support.hpp"

using namespace codelens;
using namespace codelens::testing;

namespace {

const std::string kCli = CODELENS_CLI;

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "codelens_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

CommandResult cli(const std::string& args) { return run_command(kCli + " " + args + " 2>&1"); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("convert matches the engine") {
  const std::string code = "def f(a):\n    return a + 1\n";
  const auto file = write_temp("f.py", code);
  for (auto repr : kAllRepresentations) {
    engine::ConvertRequest req;
    req.language = Language::kPython;
    req.representation = repr;
    req.code = code;
    const auto expect = engine::convert(req);
    const std::string r(to_string(repr));
    const auto json = run_command(kCli + " convert --lang python --repr " + r + " " + file);
    CHECK(json.status == 0);
    CHECK(json.out == expect.envelope);
    if (expect.dot) {
      const auto dot =
          run_command(kCli + " convert --lang python --repr " + r + " --format dot " + file);
      CHECK(dot.status == 0);
      CHECK(dot.out == *expect.dot);
    }
  }
  const auto piped = run_command("printf 'x = 1' | " + kCli + " convert --lang python --repr tokens -");
  CHECK(piped.status == 0);
  CHECK(piped.out.find("\"tokens\":[") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto ok = write_temp("ok.js", "let x = 1;\n");
  const auto bad = write_temp("bad.java", "class {");
  const auto binary = write_temp("bin.py", "x = '\xff'\n");

  CHECK(cli("convert --lang cobol --repr ast " + ok).status == 1);
  CHECK(cli("convert --lang javascript --repr graph " + ok).status == 1);
  CHECK(cli("convert --lang javascript --repr tokens --format dot " + ok).status == 1);
  CHECK(cli("convert --lang javascript --repr ast /nonexistent/file.js").status == 1);
  CHECK(cli("convert --lang javascript").status == 1);
  CHECK(cli("").status == 1);
  CHECK(cli("--help").status == 0);

  CHECK(cli("convert --lang java --repr ast " + bad).status == 0);
  const auto strict = cli("convert --lang java --repr ast --strict " + bad);
  CHECK(strict.status == 2);
  CHECK(strict.out.find(bad + ":1:") != std::string::npos);
  CHECK(strict.out.find("error:") != std::string::npos);

  const auto utf8 = cli("convert --lang python --repr tokens " + binary);
  CHECK(utf8.status == 1);
  CHECK(utf8.out.find(":1:6: error:") != std::string::npos);
}

TEST_CASE("timeout exit code") {
  std::string big;
  for (int i = 0; i < 2000; ++i) big += "x = " + std::to_string(i) + "\n";
  const auto file = write_temp("big.py", big);
  const auto r =
      run_command("CODELENS_PARSE_TIMEOUT_MS=0 " + kCli + " convert --lang python --repr ast " +
                  file + " 2>&1");
  CHECK(r.status == 3);
}

TEST_CASE("output file and pretty") {
  const auto in = write_temp("p.py", "x = 1\n");
  const auto out = (scratch() / "p.json").string();
  std::filesystem::remove(out);
  CHECK(cli("convert --lang python --repr ast --pretty --out " + out + " " + in).status == 0);
  const auto text = read_file(out);
  CHECK(text.rfind("{\n  \"schema_version\": \"1.0.0\",", 0) == 0);
}

TEST_CASE("train-vocab") {
  const auto corpus = write_temp("ab.txt", "ab abc");
  const auto out = (scratch() / "ab.vocab").string();
  auto r = cli("train-vocab --merges 1 --out " + out + " " + corpus);
  CHECK(r.status == 0);
  CHECK(r.out.find("learned 1 merges (requested 1)") != std::string::npos);
  const auto vocab = tokenizer::parse_vocab(read_file(out));
  REQUIRE(vocab.merges().size() == 1);
  CHECK(vocab.merges()[0].first == "a");
  CHECK(vocab.merges()[0].second == "b");
  CHECK(read_file(out).find("a\tb") != std::string::npos);

  r = cli("train-vocab --merges 0 --out " + out + " " + corpus);
  CHECK(r.status == 0);
  CHECK(tokenizer::parse_vocab(read_file(out)).merges().empty());

  CHECK(cli("train-vocab --merges 5 --out " + out).status == 1);
  CHECK(cli("train-vocab --merges 5 --out " + out + " /nonexistent").status == 1);

  // The trained file works as --vocab and through the environment.
  const auto in = write_temp("abc.txt", "abc");
  r = cli("train-vocab --merges 2 --out " + out + " " + corpus);
  const auto flag = run_command(kCli + " convert --lang python --repr tokens --vocab " + out + " " + in);
  const auto env = run_command("CODELENS_VOCAB=" + out + " " + kCli +
                               " convert --lang python --repr tokens " + in);
  CHECK(flag.status == 0);
  CHECK(flag.out == env.out);
  CHECK(flag.out.find("\"text\":\"abc\"") != std::string::npos);
}

TEST_CASE("examples command") {
  for (const char* lang : {"python", "java", "javascript"}) {
    const auto r = run_command(kCli + " examples --lang " + lang);
    CHECK(r.status == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 5);
    CHECK(r.out.rfind(std::string(lang) + "/fibonacci\t", 0) == 0);
  }
  CHECK(cli("examples --lang fortran").status == 1);
}

}
