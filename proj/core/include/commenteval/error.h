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

#ifndef COMMENTEVAL_ERROR_H_
#define COMMENTEVAL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace commenteval {

enum class ErrorKind {
  kInvalidArgument,
  kUnsupportedLanguage,
  kSchema,
  kMissingTranslation,
  kPrimeTooLong,
  kContextOverflow,
  kInsufficientSupport,
  kDimensionMismatch,
  kEmptyInput,
  kTransport,
  kIo,
};

const char* ErrorKindName(ErrorKind kind);

// Base exception for every failure raised by the library. Operations whose
// contract defines a value-level outcome (reject, drop, parse failure) return
// that outcome instead of throwing.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a taxonomy document or cluster assignment violates its schema.
// All violations are collected before throwing.
class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ContextOverflowError : public Error {
 public:
  ContextOverflowError(std::size_t tokens, std::size_t limit);

  std::size_t tokens() const { return tokens_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t tokens_;
  std::size_t limit_;
};

// Network or HTTP-level failure. http_status is 0 when no response arrived.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, int http_status, bool retryable);

  int http_status() const { return http_status_; }
  bool retryable() const { return retryable_; }

 private:
  int http_status_;
  bool retryable_;
};

}  // namespace commenteval

#endif  // COMMENTEVAL_ERROR_H_
