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

// JSON envelope and DOT serialization.
//
// JSON output is canonical: keys in schema order, arrays in source order,
// compact separators (or 2-space indentation when pretty). Parsing the
// output and serializing it again gives the same bytes.

#ifndef CODELENS_EXPORT_HPP_
#define CODELENS_EXPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "codelens/controlflow.hpp"
#include "codelens/core.hpp"
#include "codelens/dataflow.hpp"
#include "codelens/syntax.hpp"
#include "codelens/tokenizer.hpp"

namespace codelens::exporter {

using Json = nlohmann::ordered_json;

struct Envelope {
  Language language = Language::kPython;
  RepresentationKind representation = RepresentationKind::kTokens;
  Json payload;
  std::vector<Diagnostic> diagnostics;
};

Json span_json(const Span& span);
Json diagnostics_json(const std::vector<Diagnostic>& diagnostics);

Json tokens_payload(const tokenizer::TokenSequence& tokens, const tokenizer::Vocabulary& vocab);
Json ast_payload(const syntax::Ast& ast);
Json dfg_payload(const dataflow::Dfg& dfg);
Json cfg_payload(const controlflow::CfgSet& cfgs);

Json envelope_json(const Envelope& envelope);
std::string to_json(const Envelope& envelope, bool pretty = false);
// Canonical text of any JSON value.
std::string serialize(const Json& value, bool pretty = false);

std::string to_dot(const syntax::Ast& ast);
std::string to_dot(const dataflow::Dfg& dfg);
// All graphs, one cluster each.
std::string to_dot(const controlflow::CfgSet& cfgs);
std::string to_dot(const controlflow::Cfg& cfg);

}  // namespace codelens::exporter

#endif  // CODELENS_EXPORT_HPP_
