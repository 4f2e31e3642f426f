// Copyright 2026 The CommentEval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMMENTEVAL_SCORER_BACKEND_H_
#define COMMENTEVAL_SCORER_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/http.h"
#include "commenteval/retry.h"
#include "commenteval/tokenizer.h"

namespace commenteval {

// Half-open token index range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end > begin ? end - begin : 0; }
  bool empty() const { return end <= begin; }
  bool operator==(const TokenSpan&) const = default;
};

struct BackendInfo {
  std::string backend_id;
  std::string model;
  std::size_t context_window = 0;
  std::size_t vocab_size = 0;
};

struct TokenizeResult {
  std::vector<std::string> tokens;
  // Byte offsets into the input; special tokens carry zero-width ranges.
  std::vector<std::pair<std::size_t, std::size_t>> offsets;
};

struct EmbeddingMatrix {
  std::size_t dimension = 0;
  std::vector<std::vector<double>> vectors;  // one per input token
};

struct LikelihoodTrace {
  std::vector<double> logprobs;  // per target token, all <= 0
  TokenSpan span;                // positions that belong to the comment
};

// Inference behind the neural metrics. Implementations must be
// deterministic for fixed inputs and safe to call from several threads.
class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;

  virtual BackendInfo Info() = 0;
  virtual TokenizeResult Tokenize(std::string_view text) = 0;
  virtual EmbeddingMatrix Embed(std::string_view text, TokenSpan span) = 0;
  virtual LikelihoodTrace LogLik(std::string_view source,
                                 std::string_view target,
                                 TokenSpan target_span) = 0;
};

// Client for the scorer wire protocol:
//   GET  /info      -> {backend_id, model, context_window, vocab_size}
//   POST /tokenize  {text} -> {tokens, offsets}
//   POST /embed     {text, span} -> {dimension, vectors}
//   POST /loglik    {source, target, target_span} -> {logprobs}
// A 4xx reply {"error": "context_overflow", "limit": n, "tokens": m} is
// raised as ContextOverflowError; 408/425/429/5xx and connection failures
// are retried.
class HttpScorerBackend final : public ScorerBackend {
 public:
  explicit HttpScorerBackend(std::string base_url, RetryPolicy retry = {},
                             Sleeper sleeper = RealSleeper());

  BackendInfo Info() override;
  TokenizeResult Tokenize(std::string_view text) override;
  EmbeddingMatrix Embed(std::string_view text, TokenSpan span) override;
  LikelihoodTrace LogLik(std::string_view source, std::string_view target,
                         TokenSpan target_span) override;

 private:
  nlohmann::json Call(const std::string& method, const std::string& path,
                      const nlohmann::json& body);

  HttpClient http_;
  RetryPolicy retry_;
  Sleeper sleeper_;
  std::mutex info_mu_;
  std::optional<BackendInfo> info_;
};

// Exposes a backend's tokenizer through the local Tokenizer interface, e.g.
// for the corpus budget filter.
class BackendTokenizer final : public Tokenizer {
 public:
  explicit BackendTokenizer(ScorerBackend& backend);

  std::string name() const override { return name_; }
  std::vector<Token> Tokenize(std::string_view text) const override;

 private:
  ScorerBackend& backend_;
  std::string name_;
};

}  // namespace commenteval

#endif  // COMMENTEVAL_SCORER_BACKEND_H_
