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

#include "commenteval/scorer_backend.h"

#include <cmath>

#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

HttpScorerBackend::HttpScorerBackend(std::string base_url, RetryPolicy retry,
                                     Sleeper sleeper)
    : http_(std::move(base_url)),
      retry_(retry),
      sleeper_(std::move(sleeper)) {}

json HttpScorerBackend::Call(const std::string& method, const std::string& path,
                             const json& body) {
  HttpRequest request;
  request.method = method;
  request.path = path;
  if (method != "GET") {
    request.body = body.dump(-1, ' ', false, json::error_handler_t::replace);
  }
  for (int attempt = 1;; ++attempt) {
    bool retryable = false;
    std::string failure;
    int status = 0;
    try {
      const HttpResponse response = http_.Send(request);
      status = response.status;
      if (status == 200) {
        try {
          return json::parse(response.body);
        } catch (const json::parse_error& e) {
          throw TransportError(path + ": malformed reply: " + e.what(), status,
                               false);
        }
      }
      json error_body = json::parse(response.body, nullptr, false);
      if (error_body.is_object() &&
          error_body.value("error", std::string()) == "context_overflow") {
        throw ContextOverflowError(error_body.value("tokens", std::size_t{0}),
                                   error_body.value("limit", std::size_t{0}));
      }
      retryable = IsRetryableStatus(status);
      failure = path + ": HTTP " + std::to_string(status);
    } catch (const TransportError& e) {
      if (!e.retryable()) throw;
      retryable = true;
      failure = e.what();
      status = e.http_status();
    }
    if (!retryable || attempt >= retry_.max_attempts) {
      throw TransportError(failure, status, retryable);
    }
    if (sleeper_) sleeper_(BackoffDelay(retry_, attempt));
  }
}

BackendInfo HttpScorerBackend::Info() {
  std::lock_guard<std::mutex> lock(info_mu_);
  if (!info_) {
    const json reply = Call("GET", "/info", json());
    BackendInfo info;
    try {
      info.backend_id = reply.at("backend_id").get<std::string>();
      info.model = reply.value("model", std::string());
      info.context_window = reply.at("context_window").get<std::size_t>();
      info.vocab_size = reply.value("vocab_size", std::size_t{0});
    } catch (const json::exception& e) {
      throw TransportError(std::string("/info: ") + e.what(), 200, false);
    }
    info_ = info;
  }
  return *info_;
}

TokenizeResult HttpScorerBackend::Tokenize(std::string_view text) {
  const json reply = Call("POST", "/tokenize", {{"text", text}});
  TokenizeResult result;
  try {
    result.tokens = reply.at("tokens").get<std::vector<std::string>>();
    for (const auto& pair : reply.at("offsets")) {
      result.offsets.emplace_back(pair.at(0).get<std::size_t>(),
                                  pair.at(1).get<std::size_t>());
    }
  } catch (const json::exception& e) {
    throw TransportError(std::string("/tokenize: ") + e.what(), 200, false);
  }
  if (result.tokens.size() != result.offsets.size()) {
    throw TransportError("/tokenize: tokens and offsets differ in length", 200,
                         false);
  }
  return result;
}

EmbeddingMatrix HttpScorerBackend::Embed(std::string_view text,
                                         TokenSpan span) {
  const json reply = Call("POST", "/embed",
                          {{"text", text}, {"span", {span.begin, span.end}}});
  EmbeddingMatrix matrix;
  try {
    matrix.dimension = reply.at("dimension").get<std::size_t>();
    matrix.vectors = reply.at("vectors").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("/embed: ") + e.what(), 200, false);
  }
  for (const auto& v : matrix.vectors) {
    if (v.size() != matrix.dimension) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "/embed: vector of size " + std::to_string(v.size()) +
                      " in a matrix of dimension " +
                      std::to_string(matrix.dimension));
    }
    for (double x : v) {
      if (!std::isfinite(x)) {
        throw TransportError("/embed: non-finite vector value", 200, false);
      }
    }
  }
  return matrix;
}

LikelihoodTrace HttpScorerBackend::LogLik(std::string_view source,
                                          std::string_view target,
                                          TokenSpan target_span) {
  const json reply = Call(
      "POST", "/loglik",
      {{"source", source},
       {"target", target},
       {"target_span", {target_span.begin, target_span.end}}});
  LikelihoodTrace trace;
  try {
    trace.logprobs = reply.at("logprobs").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("/loglik: ") + e.what(), 200, false);
  }
  // Servers reply with span-length values; a full-length trace is accepted
  // and masked here instead.
  if (trace.logprobs.size() == target_span.size()) {
    trace.span = {0, trace.logprobs.size()};
  } else if (trace.logprobs.size() >= target_span.end) {
    trace.span = target_span;
  } else {
    throw TransportError("/loglik: reply has " +
                             std::to_string(trace.logprobs.size()) +
                             " values for a span of " +
                             std::to_string(target_span.size()),
                         200, false);
  }
  for (double x : trace.logprobs) {
    if (!std::isfinite(x) || x > 0.0) {
      throw TransportError("/loglik: log-probability out of range", 200, false);
    }
  }
  return trace;
}

BackendTokenizer::BackendTokenizer(ScorerBackend& backend)
    : backend_(backend), name_(backend.Info().backend_id) {}

std::vector<Token> BackendTokenizer::Tokenize(std::string_view text) const {
  const TokenizeResult result = backend_.Tokenize(text);
  std::vector<Token> tokens;
  tokens.reserve(result.tokens.size());
  for (std::size_t i = 0; i < result.tokens.size(); ++i) {
    tokens.push_back(
        {result.tokens[i], result.offsets[i].first, result.offsets[i].second});
  }
  return tokens;
}

}  // namespace commenteval
