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

#include "commenteval/error.h"

#include <string>
#include <utility>

namespace commenteval {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kUnsupportedLanguage: return "unsupported_language";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kMissingTranslation: return "missing_translation";
    case ErrorKind::kPrimeTooLong: return "prime_too_long";
    case ErrorKind::kContextOverflow: return "context_overflow";
    case ErrorKind::kInsufficientSupport: return "insufficient_class_support";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kEmptyInput: return "empty_input";
    case ErrorKind::kTransport: return "transport";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

namespace {

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> violations)
    : Error(ErrorKind::kSchema, JoinViolations(violations)),
      violations_(std::move(violations)) {}

ContextOverflowError::ContextOverflowError(std::size_t tokens,
                                           std::size_t limit)
    : Error(ErrorKind::kContextOverflow,
            std::to_string(tokens) + " tokens exceed the context window of " +
                std::to_string(limit)),
      tokens_(tokens),
      limit_(limit) {}

TransportError::TransportError(const std::string& message, int http_status,
                               bool retryable)
    : Error(ErrorKind::kTransport, message),
      http_status_(http_status),
      retryable_(retryable) {}

}  // namespace commenteval
