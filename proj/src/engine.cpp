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

#include "codelens/engine.hpp"

#include "codelens/controlflow.hpp"
#include "codelens/corpus.hpp"
#include "codelens/dataflow.hpp"
#include "codelens/export.hpp"
#include "codelens/syntax.hpp"

namespace codelens::engine {

ConvertResult convert(const ConvertRequest& request) {
  SourceUnit unit{request.code, request.language, "inline"};
  exporter::Envelope env;
  env.language = request.language;
  env.representation = request.representation;
  ConvertResult result;

  if (request.representation == RepresentationKind::kTokens) {
    auto problems = validate_source(unit, request.limits);
    if (!problems.empty()) {
      const auto code = unit.code.size() > request.limits.max_source_bytes
                            ? ErrorCode::kSourceTooLarge
                            : ErrorCode::kInvalidSource;
      const auto message = problems.front().message;
      throw Error(code, message, std::move(problems));
    }
    const auto& vocab = request.vocab ? *request.vocab : corpus::default_vocabulary();
    env.payload = exporter::tokens_payload(tokenizer::encode(unit.code, vocab), vocab);
    result.envelope = exporter::to_json(env, request.pretty);
    return result;
  }

  syntax::ParseOptions options;
  options.limits = request.limits;
  options.strict = request.strict;
  const auto ast = syntax::parse(unit, options);
  env.diagnostics = ast.diagnostics;
  switch (request.representation) {
    case RepresentationKind::kAst:
      env.payload = exporter::ast_payload(ast);
      result.dot = exporter::to_dot(ast);
      break;
    case RepresentationKind::kDfg: {
      const auto dfg = dataflow::extract_dfg(ast, request.strict);
      env.payload = exporter::dfg_payload(dfg);
      result.dot = exporter::to_dot(dfg);
      break;
    }
    case RepresentationKind::kCfg: {
      const auto cfg = controlflow::extract_cfg(ast, request.strict);
      env.payload = exporter::cfg_payload(cfg);
      result.dot = exporter::to_dot(cfg);
      break;
    }
    case RepresentationKind::kTokens:
      break;
  }
  result.envelope = exporter::to_json(env, request.pretty);
  return result;
}

}  // namespace codelens::engine
