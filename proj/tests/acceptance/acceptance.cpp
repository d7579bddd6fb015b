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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "codelens/controlflow.hpp"
#include "codelens/corpus.hpp"
#include "codelens/dataflow.hpp"
#include "codelens/engine.hpp"
#include "codelens/export.hpp"
#include "codelens/service.hpp"
#include "codelens/syntax.hpp"
#include "codelens/tokenizer.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace codelens;
using namespace codelens::testing;
using exporter::Json;

namespace {

const std::string kCli = CODELENS_CLI;

// Collects failures for one criterion; only the first few are printed.
struct Report {
  std::vector<std::string> failures;
  std::string detail;

  void fail(std::string what) { failures.push_back(std::move(what)); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int g_failed = 0;

void criterion(const std::string& name, const std::function<void(Report&)>& body) {
  Report r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  const bool ok = r.failures.empty();
  g_failed += !ok;
  std::printf("%s %s", ok ? "PASS" : "FAIL", name.c_str());
  if (!r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) {
    std::printf("    %s\n", r.failures[i].c_str());
  }
  if (r.failures.size() > 10) std::printf("    ... %zu more\n", r.failures.size() - 10);
  std::fflush(stdout);
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

struct Input {
  std::string name;
  Language language;
  std::string code;
  fs::path path;
};

std::vector<Input> example_inputs() {
  std::vector<Input> out;
  for (const auto& ex : corpus::all_examples()) {
    out.push_back({std::string(ex.id), ex.language, std::string(ex.code),
                   source_dir() / "data" / std::string(ex.path)});
  }
  return out;
}

std::vector<Input> fixture_inputs(const std::string& kind) {
  std::vector<Input> out;
  for (auto language : kAllLanguages) {
    for (const auto& f : fixtures(kind, language)) {
      out.push_back({kind + "/" + f.source.filename().string(), language, read_file(f.source),
                     f.source});
    }
  }
  return out;
}

// Every source file the suite knows: examples and graph fixtures.
std::vector<Input> corpus_inputs() {
  auto all = example_inputs();
  for (const char* kind : {"dfg", "cfg"}) {
    for (auto& in : fixture_inputs(kind)) all.push_back(std::move(in));
  }
  return all;
}

std::string cli_convert(const fs::path& file, Language language, RepresentationKind repr,
                        bool dot, int* status = nullptr) {
  std::string cmd = kCli + " convert --lang " + std::string(to_string(language)) + " --repr " +
                    std::string(to_string(repr)) + (dot ? " --format dot " : " ") +
                    shell_quote(file.string());
  const auto r = run_command(cmd);
  if (status) *status = r.status;
  return r.out;
}

// ---------------------------------------------------------------------------
// Feature matrix

void feature_matrix(Report& r) {
  const auto start = Clock::now();
  const fs::path golden = source_dir() / "tests" / "golden";
  std::size_t files = 0;
  for (const auto& in : example_inputs()) {
    const auto slug = in.name.substr(in.name.find('/') + 1);
    const auto dir = golden / std::string(to_string(in.language));
    for (auto repr : kAllRepresentations) {
      for (bool dot : {false, true}) {
        if (dot && repr == RepresentationKind::kTokens) continue;
        const auto expected_path =
            dir / (slug + "." + std::string(to_string(repr)) + (dot ? ".dot" : ".json"));
        int s1 = -1, s2 = -1;
        const auto first = cli_convert(in.path, in.language, repr, dot, &s1);
        const auto second = cli_convert(in.path, in.language, repr, dot, &s2);
        ++files;
        const auto label = expected_path.filename().string() + " [" + in.name + "]";
        if (s1 != 0 || s2 != 0) {
          r.fail(label + ": exit status " + std::to_string(s1));
          continue;
        }
        r.expect(first == second, label + ": output differs between runs");
        if (!fs::exists(expected_path)) {
          r.fail(label + ": golden file missing");
          continue;
        }
        r.expect(read_file(expected_path) == first, label + ": differs from golden file");
        if (dot) {
          const auto st = dot_stats(first);
          r.expect(st.is_digraph && st.balanced && st.nodes > 0, label + ": malformed DOT");
        } else {
          const auto j = Json::parse(first);
          r.expect(j["schema_version"] == "1.0.0" && j["diagnostics"].empty(),
                   label + ": bad envelope");
        }
      }
    }
  }
  const auto secs = seconds_since(start);
  r.expect(files == 105, "expected 105 outputs, produced " + std::to_string(files));
  r.expect(secs < 30.0, "took " + std::to_string(secs) + " s, limit 30 s");
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << files << " outputs x 2 runs, " << secs << " s";
  r.detail = d.str();
}

// ---------------------------------------------------------------------------
// Tokenizer properties

// Splits a token stream back into the pre-tokenizer's chunks and compares.
void round_trip(Report& r, const std::string& label, const std::string& code,
                const tokenizer::Vocabulary& vocab) {
  const auto chunks = tokenizer::pre_tokenize(code);
  const auto seq = tokenizer::encode(code, vocab);
  if (seq.ids.size() != seq.pieces.size()) {
    r.fail(label + ": ids and pieces differ in length");
    return;
  }
  for (auto id : seq.ids) {
    if (id >= vocab.size()) {
      r.fail(label + ": id " + std::to_string(id) + " >= vocab size");
      return;
    }
  }
  const auto bytes = tokenizer::decode(seq.ids, vocab);
  std::size_t t = 0;
  for (const auto& chunk : chunks) {
    std::string rebuilt;
    while (t < bytes.size() && rebuilt.size() < chunk.text.size()) {
      if (seq.pieces[t].span.start_byte < chunk.span.start_byte ||
          seq.pieces[t].span.end_byte > chunk.span.end_byte) {
        r.fail(label + ": token crosses a chunk boundary");
        return;
      }
      rebuilt += bytes[t++];
    }
    if (rebuilt != chunk.text) {
      r.fail(label + ": decode(encode) gives \"" + rebuilt + "\" for chunk \"" + chunk.text + "\"");
      return;
    }
  }
  if (t != bytes.size()) r.fail(label + ": tokens left over after the last chunk");
}

void tokenizer_properties(Report& r) {
  const auto start = Clock::now();
  std::vector<std::string> all;
  std::size_t checked = 0;
  for (auto language : kAllLanguages) {
    const auto snippets = generate_snippets(language, 100, 2026);
    r.expect(snippets.size() >= 100, "fewer than 100 snippets");
    std::vector<std::string> mine(snippets.begin(), snippets.end());
    const auto local = tokenizer::train_bpe(mine, 300);
    for (std::size_t i = 0; i < snippets.size(); ++i) {
      const auto label = std::string(to_string(language)) + " snippet " + std::to_string(i);
      round_trip(r, label + " (default vocab)", snippets[i], corpus::default_vocabulary());
      round_trip(r, label + " (trained vocab)", snippets[i], local);
      ++checked;
    }
    all.insert(all.end(), snippets.begin(), snippets.end());
  }
  // Non-ASCII input exercises the byte fallback.
  round_trip(r, "non-ASCII", "s = \"h\xC3\xA9llo \xE2\x82\xAC \xF0\x9F\x98\x80\"\n",
             corpus::default_vocabulary());

  const auto dir = fs::temp_directory_path() / "codelens_acceptance";
  fs::create_directories(dir);
  const auto a = tokenizer::train_bpe(all, 1000);
  const auto b = tokenizer::train_bpe(all, 1000);
  tokenizer::save_vocab(a, dir / "a.vocab");
  tokenizer::save_vocab(b, dir / "b.vocab");
  r.expect(read_file(dir / "a.vocab") == read_file(dir / "b.vocab"),
           "two trainings on the same corpus differ");
  r.expect(tokenizer::load_vocab(dir / "a.vocab") == a, "saved vocabulary does not load back");

  // The same through the CLI.
  std::string files;
  for (std::size_t i = 0; i < all.size(); i += 10) {
    const auto p = dir / ("s" + std::to_string(i) + ".txt");
    std::ofstream(p, std::ios::binary) << all[i];
    files += " " + shell_quote(p.string());
  }
  const auto c1 = run_command(kCli + " train-vocab --merges 200 --out " +
                              shell_quote((dir / "c1.vocab").string()) + files + " 2>/dev/null");
  const auto c2 = run_command(kCli + " train-vocab --merges 200 --out " +
                              shell_quote((dir / "c2.vocab").string()) + files + " 2>/dev/null");
  r.expect(c1.status == 0 && c2.status == 0, "train-vocab failed");
  r.expect(read_file(dir / "c1.vocab") == read_file(dir / "c2.vocab"),
           "train-vocab output differs between runs");

  const auto secs = seconds_since(start);
  r.expect(secs < 60.0, "took " + std::to_string(secs) + " s, limit 60 s");
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << checked << " snippets x 2 vocabularies, " << secs << " s";
  r.detail = d.str();
}

// ---------------------------------------------------------------------------
// BPE oracle

void bpe_oracle(Report& r) {
  std::mt19937 rng(7);
  const std::string alphabet = "aab bc\ncd_=(";
  std::size_t merges_checked = 0;
  for (int round = 0; round < 20; ++round) {
    std::vector<std::string> corpus;
    const std::size_t docs = 1 + rng() % 4;
    const std::size_t budget = 200 / docs;
    for (std::size_t d = 0; d < docs; ++d) {
      std::string doc;
      const std::size_t len = 1 + rng() % budget;
      for (std::size_t i = 0; i < len; ++i) doc += alphabet[rng() % alphabet.size()];
      doc[0] = 'a';
      corpus.push_back(doc);
    }
    const std::size_t n = 1 + rng() % 40;
    const auto expected = naive_bpe(corpus, n);
    const auto vocab = tokenizer::train_bpe(corpus, n);
    merges_checked += expected.size();
    if (vocab.merges() != expected) {
      r.fail("corpus " + std::to_string(round) + ": merges differ (" +
             std::to_string(vocab.merges().size()) + " vs " + std::to_string(expected.size()) +
             ")");
    }
  }
  r.detail = "20 corpora, " + std::to_string(merges_checked) + " merges";
}

// ---------------------------------------------------------------------------
// AST well-formedness, checked on the exported JSON

std::vector<std::string> check_exported_tree(const Json& payload, std::size_t size) {
  std::vector<std::string> out;
  const auto& nodes = payload.at("nodes");
  const std::size_t n = nodes.size();
  std::vector<int> parents(n, -1);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = nodes[i];
    if (node.at("id").get<std::size_t>() != i) out.push_back("ids are not dense");
    const auto& span = node.at("span");
    const auto sb = span.at("start_byte").get<std::size_t>();
    const auto eb = span.at("end_byte").get<std::size_t>();
    if (sb > eb || eb > size) out.push_back("node " + std::to_string(i) + ": bad span");
    std::size_t prev_end = sb;
    for (const auto& c : node.at("children")) {
      const auto ci = c.get<std::size_t>();
      ++edges;
      if (ci >= n) {
        out.push_back("dangling child");
        continue;
      }
      if (parents[ci] != -1) out.push_back("node " + std::to_string(ci) + " has two parents");
      parents[ci] = static_cast<int>(i);
      const auto& cs = nodes[ci].at("span");
      const auto csb = cs.at("start_byte").get<std::size_t>();
      const auto ceb = cs.at("end_byte").get<std::size_t>();
      if (csb < sb || ceb > eb) out.push_back("node " + std::to_string(ci) + " escapes its parent");
      if (csb < prev_end) out.push_back("children of " + std::to_string(i) + " out of order");
      prev_end = std::max(prev_end, ceb);
    }
  }
  if (n == 0) out.push_back("empty tree");
  if (edges + 1 != n) out.push_back("edges != nodes - 1");
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i] == -1) {
      ++roots;
      if (payload.at("root").get<std::size_t>() != i) out.push_back("root mismatch");
    }
  }
  if (roots != 1) out.push_back(std::to_string(roots) + " roots");
  return out;
}

void ast_wellformed(Report& r) {
  auto inputs = corpus_inputs();
  for (auto language : kAllLanguages) {
    std::size_t i = 0;
    for (auto& code : generate_snippets(language, 100, 99)) {
      inputs.push_back({"snippet " + std::to_string(i++), language, code, {}});
    }
  }
  std::size_t nodes = 0;
  for (const auto& in : inputs) {
    engine::ConvertRequest req;
    req.language = in.language;
    req.representation = RepresentationKind::kAst;
    req.code = in.code;
    const auto j = Json::parse(engine::convert(req).envelope);
    nodes += j["payload"]["nodes"].size();
    for (const auto& v : check_exported_tree(j["payload"], in.code.size())) {
      r.fail(in.name + ": " + v);
    }
    for (const auto& v : syntax::check_tree(syntax::parse({in.code, in.language}), in.code)) {
      r.fail(in.name + ": " + v);
    }
  }
  r.detail = std::to_string(inputs.size()) + " files, " + std::to_string(nodes) + " nodes";
}

// ---------------------------------------------------------------------------
// Graph fixtures

void dfg_oracle(Report& r) {
  std::map<Language, std::size_t> counts;
  for (auto language : kAllLanguages) {
    for (const auto& f : fixtures("dfg", language)) {
      ++counts[language];
      const auto ast = syntax::parse({read_file(f.source), language});
      const auto d = diff_unordered(expected_lines(f.expected), render_dfg(dataflow::extract_dfg(ast)));
      if (!d.empty()) r.fail(f.source.filename().string() + ": " + d.describe());
    }
    r.expect(counts[language] >= 15,
             std::string(to_string(language)) + ": only " + std::to_string(counts[language]) +
                 " fixtures");
  }
  r.detail = std::to_string(counts[Language::kJava]) + " java, " +
             std::to_string(counts[Language::kPython]) + " python, " +
             std::to_string(counts[Language::kJavaScript]) + " javascript";
}

// Invariants read off the exported CFG payload.
std::vector<std::string> check_exported_cfg(const Json& g) {
  std::vector<std::string> out;
  const auto& blocks = g.at("blocks");
  const std::size_t n = blocks.size();
  const auto entry = g.at("entry").get<std::size_t>();
  const auto exit = g.at("exit").get<std::size_t>();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<std::vector<std::string>> labels(n);
  for (const auto& e : g.at("edges")) {
    const auto s = e.at("src").get<std::size_t>();
    const auto d = e.at("dst").get<std::size_t>();
    if (s >= n || d >= n) {
      out.push_back("dangling edge");
      continue;
    }
    succ[s].push_back(d);
    ++in_degree[d];
    labels[s].push_back(e.contains("label") ? e["label"].get<std::string>() : "");
  }
  if (entry >= n || exit >= n) return {"entry or exit out of range"};
  if (in_degree[entry] != 0) out.push_back("entry has predecessors");
  if (!succ[exit].empty()) out.push_back("exit has successors");
  for (std::size_t b = 0; b < n; ++b) {
    const auto kind = blocks[b].at("kind").get<std::string>();
    auto l = labels[b];
    std::sort(l.begin(), l.end());
    if (kind == "condition") {
      if (l != std::vector<std::string>{"false", "true"}) {
        out.push_back("condition block " + std::to_string(b) + " lacks a true/false pair");
      }
    } else {
      for (const auto& x : l) {
        if (x == "true" || x == "false") out.push_back("non-condition block with a branch label");
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{entry};
  seen[entry] = true;
  while (!stack.empty()) {
    const auto b = stack.back();
    stack.pop_back();
    for (auto s : succ[b]) {
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    const bool flagged = blocks[b].value("unreachable", false);
    if (seen[b] == flagged) {
      out.push_back("block " + std::to_string(b) + (flagged ? " flagged unreachable but reached"
                                                            : " unreachable but not flagged"));
    }
  }
  return out;
}

void cfg_oracle(Report& r) {
  std::map<Language, std::size_t> counts;
  for (auto language : kAllLanguages) {
    for (const auto& f : fixtures("cfg", language)) {
      ++counts[language];
      const auto ast = syntax::parse({read_file(f.source), language});
      const auto d = diff_ordered(expected_lines(f.expected), render_cfg(controlflow::extract_cfg(ast)));
      if (!d.empty()) r.fail(f.source.filename().string() + ": " + d.describe());
    }
    r.expect(counts[language] >= 15,
             std::string(to_string(language)) + ": only " + std::to_string(counts[language]) +
                 " fixtures");
  }
  std::size_t graphs = 0;
  auto inputs = corpus_inputs();
  for (auto language : kAllLanguages) {
    std::size_t i = 0;
    for (auto& code : generate_snippets(language, 100, 123)) {
      inputs.push_back({"snippet " + std::to_string(i++), language, code, {}});
    }
  }
  for (const auto& in : inputs) {
    engine::ConvertRequest req;
    req.language = in.language;
    req.representation = RepresentationKind::kCfg;
    req.code = in.code;
    const auto j = Json::parse(engine::convert(req).envelope);
    for (const auto& g : j["payload"]["graphs"]) {
      ++graphs;
      for (const auto& v : check_exported_cfg(g)) {
        r.fail(in.name + " " + g["function"].get<std::string>() + ": " + v);
      }
    }
    for (const auto& g : controlflow::extract_cfg(syntax::parse({in.code, in.language})).graphs) {
      for (const auto& v : controlflow::check_cfg(g)) r.fail(in.name + " " + g.function_name + ": " + v);
    }
  }
  r.detail = std::to_string(counts[Language::kJava] + counts[Language::kPython] +
                            counts[Language::kJavaScript]) +
             " fixtures, invariants on " + std::to_string(graphs) + " graphs from " +
             std::to_string(inputs.size()) + " files";
}

// ---------------------------------------------------------------------------
// Service

struct LiveServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit LiveServer(const service::Config& config) {
    service::install_routes(server, config);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
};

std::string convert_body(Language language, RepresentationKind repr, const std::string& code,
                         const Json& options = Json::object()) {
  Json j = Json::object();
  j["language"] = to_string(language);
  j["representation"] = to_string(repr);
  j["code"] = code;
  if (!options.empty()) j["options"] = options;
  return j.dump();
}

// The raw envelope bytes inside a 200 response body.
std::optional<std::string> envelope_bytes(const std::string& body, std::size_t expected_size) {
  const std::string prefix = "{\"envelope\":";
  if (body.rfind(prefix, 0) != 0 || body.size() < prefix.size() + expected_size + 1) {
    return std::nullopt;
  }
  const char next = body[prefix.size() + expected_size];
  if (next != ',' && next != '}') return std::nullopt;
  return body.substr(prefix.size(), expected_size);
}

void parity(Report& r) {
  LiveServer live(service::Config{});
  httplib::Client client("127.0.0.1", live.port);
  client.set_read_timeout(30, 0);

  std::vector<std::pair<Input, RepresentationKind>> cases;
  for (const auto& in : example_inputs()) {
    for (auto repr : kAllRepresentations) cases.emplace_back(in, repr);
  }
  for (const auto& in : fixture_inputs("dfg")) cases.emplace_back(in, RepresentationKind::kDfg);
  for (const auto& in : fixture_inputs("cfg")) cases.emplace_back(in, RepresentationKind::kCfg);

  for (const auto& [in, repr] : cases) {
    const auto label = in.name + " " + std::string(to_string(repr));
    int status = -1;
    const auto cli = cli_convert(in.path, in.language, repr, false, &status);
    const auto res = client.Post("/api/convert", convert_body(in.language, repr, in.code),
                                 "application/json");
    if (!res || res->status != 200 || status != 0) {
      r.fail(label + ": request or CLI failed");
      continue;
    }
    const auto env = envelope_bytes(res->body, cli.size());
    r.expect(env && *env == cli, label + ": HTTP envelope differs from CLI output");
    if (repr != RepresentationKind::kTokens) {
      const auto dot = cli_convert(in.path, in.language, repr, true);
      r.expect(Json::parse(res->body).value("dot", std::string()) == dot,
               label + ": HTTP dot differs from CLI output");
    }
  }

  // Concurrent identical requests.
  const auto& big = corpus::all_examples().back();
  const auto body = convert_body(big.language, RepresentationKind::kCfg, std::string(big.code));
  const auto reference = service::handle_convert(body, Limits{}).body;
  std::vector<std::string> bodies(50);
  std::vector<int> statuses(50, 0);
  std::vector<std::thread> threads;
  for (int i = 0; i < 50; ++i) {
    threads.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", live.port);
      c.set_read_timeout(30, 0);
      if (auto res = c.Post("/api/convert", body, "application/json")) {
        statuses[i] = res->status;
        bodies[i] = res->body;
      } else {
        bodies[i] = httplib::to_string(res.error());
      }
    });
  }
  for (auto& t : threads) t.join();
  std::size_t same = 0;
  std::map<int, int> by_status;
  for (int i = 0; i < 50; ++i) {
    same += statuses[i] == 200 && bodies[i] == reference;
    ++by_status[statuses[i]];
  }
  for (const auto& [st, count] : by_status) {
    if (st != 200) r.fail(std::to_string(count) + " responses with status " + std::to_string(st));
  }
  for (int i = 0; i < 50; ++i) {
    if (statuses[i] == 0) {
      r.fail("transport error: " + bodies[i]);
      break;
    }
  }
  r.expect(same == 50, std::to_string(50 - same) + " of 50 concurrent responses differ");
  r.detail = std::to_string(cases.size()) + " fixtures, 50 concurrent requests";
}

// A diagnostic span must point inside the source with line/col agreeing
// with the byte offsets.
bool span_valid(const Json& span, const std::string& code) {
  const auto sb = span.at("start_byte").get<std::size_t>();
  const auto eb = span.at("end_byte").get<std::size_t>();
  if (sb > eb || eb > code.size()) return false;
  auto position = [&](std::size_t byte) {
    std::size_t line = 0, col = 0;
    for (std::size_t i = 0; i < byte; ++i) {
      if (code[i] == '\n') {
        ++line;
        col = 0;
      } else {
        ++col;
      }
    }
    return std::pair{line, col};
  };
  return position(sb) == std::pair{span.at("start_line").get<std::size_t>(),
                                   span.at("start_col").get<std::size_t>()} &&
         position(eb) == std::pair{span.at("end_line").get<std::size_t>(),
                                   span.at("end_col").get<std::size_t>()};
}

void error_paths(Report& r) {
  service::Config config;
  LiveServer live(config);
  httplib::Client client("127.0.0.1", live.port);
  client.set_read_timeout(30, 0);
  auto status_of = [&](const std::string& body) {
    auto res = client.Post("/api/convert", body, "application/json");
    return res ? res->status : -1;
  };

  const std::string huge(config.limits.max_source_bytes + 1, 'x');
  r.expect(status_of(convert_body(Language::kPython, RepresentationKind::kTokens, huge)) == 413,
           "oversize source is not 413");
  r.expect(status_of(convert_body(Language::kPython, RepresentationKind::kAst, huge)) == 413,
           "oversize source (ast) is not 413");
  const std::string way_too_big(config.limits.max_source_bytes * 8, 'x');
  r.expect(status_of(convert_body(Language::kPython, RepresentationKind::kTokens, way_too_big)) ==
               413,
           "oversize request body is not 413");

  Json bad = Json::parse(convert_body(Language::kPython, RepresentationKind::kAst, "x = 1"));
  bad["language"] = "cobol";
  r.expect(status_of(bad.dump()) == 400, "unknown language is not 400");
  const auto dir = fs::temp_directory_path() / "codelens_acceptance";
  fs::create_directories(dir);
  const auto ok_file = dir / "ok.py";
  std::ofstream(ok_file) << "x = 1\n";
  const auto cobol =
      run_command(kCli + " convert --lang cobol --repr ast " + shell_quote(ok_file.string()) +
                  " 2>/dev/null");
  r.expect(cobol.status == 1, "CLI unknown language exit " + std::to_string(cobol.status));

  struct Broken {
    Language language;
    std::string code;
  };
  const std::vector<Broken> broken = {
      {Language::kJava, "class A {\n  void f() {\n    int x = ;\n  }\n}\n"},
      {Language::kPython, "def f(:\n    return 1\n"},
      {Language::kJavaScript, "function f() {\n  let x = (1 + ;\n}\n"},
  };
  std::size_t diagnostics = 0;
  for (const auto& b : broken) {
    const auto label = std::string(to_string(b.language));
    for (auto repr : {RepresentationKind::kAst, RepresentationKind::kDfg, RepresentationKind::kCfg}) {
      auto res = client.Post("/api/convert",
                             convert_body(b.language, repr, b.code, Json{{"strict", true}}),
                             "application/json");
      if (!res || res->status != 422) {
        r.fail(label + ": strict syntax error is not 422");
        continue;
      }
      const auto err = Json::parse(res->body)["error"];
      r.expect(err["code"] == "strict_mode_syntax_error", label + ": wrong error code");
      const auto& diags = err["diagnostics"];
      r.expect(!diags.empty(), label + ": no diagnostics");
      for (const auto& d : diags) {
        ++diagnostics;
        r.expect(span_valid(d["span"], b.code), label + ": diagnostic span invalid");
      }
    }
    const auto file = dir / ("broken." + extension_of(b.language));
    std::ofstream(file, std::ios::binary) << b.code;
    const auto cli = run_command(kCli + " convert --strict --lang " + label +
                                 " --repr ast " + shell_quote(file.string()) + " 2>&1");
    r.expect(cli.status == 2, label + ": CLI strict exit " + std::to_string(cli.status));
    r.expect(cli.out.find(file.string() + ":") != std::string::npos &&
                 cli.out.find("error:") != std::string::npos,
             label + ": CLI diagnostic not printed");
  }
  r.detail = "413, 400/exit 1, 422/exit 2 with " + std::to_string(diagnostics) + " diagnostics";
}

}  // namespace

int main() {
  criterion("feature-matrix: 15 examples x 4 representations, golden and byte-stable",
            feature_matrix);
  criterion("tokenizer-properties: round trip, id range, deterministic training",
            tokenizer_properties);
  criterion("bpe-oracle: brute-force trainer agrees on 20 micro-corpora", bpe_oracle);
  criterion("ast-wellformed: tree shape, span nesting, sibling order", ast_wellformed);
  criterion("dfg-oracle: hand-traced fixtures", dfg_oracle);
  criterion("cfg-oracle: hand-built fixtures and structural invariants", cfg_oracle);
  criterion("parity: HTTP envelope equals CLI output, 50 concurrent requests", parity);
  criterion("error-paths: 413, 400 / exit 1, 422 / exit 2", error_paths);
  std::printf("%d of 8 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
