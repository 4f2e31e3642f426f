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

#include "commenteval/tokenizer.h"

#include "commenteval/error.h"
#include "commenteval/text.h"

namespace commenteval {
namespace {

Token Slice(std::string_view text, std::size_t begin, std::size_t end) {
  return Token{std::string(text.substr(begin, end - begin)), begin, end};
}

}  // namespace

std::vector<Token> WhitespaceTokenizer::Tokenize(std::string_view text) const {
  std::vector<Token> out;
  std::size_t start = std::string_view::npos;
  for (const auto& cp : SplitCodePoints(text)) {
    if (IsSpace(cp.value)) {
      if (start != std::string_view::npos) {
        out.push_back(Slice(text, start, cp.begin));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = cp.begin;
    }
  }
  if (start != std::string_view::npos) {
    out.push_back(Slice(text, start, text.size()));
  }
  return out;
}

std::vector<Token> PunctuationTokenizer::Tokenize(std::string_view text) const {
  std::vector<Token> out;
  std::size_t start = std::string_view::npos;
  auto flush = [&](std::size_t end) {
    if (start != std::string_view::npos) {
      out.push_back(Slice(text, start, end));
      start = std::string_view::npos;
    }
  };
  for (const auto& cp : SplitCodePoints(text)) {
    if (IsSpace(cp.value)) {
      flush(cp.begin);
    } else if (IsPunctuation(cp.value) || IsCjk(cp.value)) {
      flush(cp.begin);
      out.push_back(Slice(text, cp.begin, cp.end));
    } else if (start == std::string_view::npos) {
      start = cp.begin;
    }
  }
  flush(text.size());
  return out;
}

std::vector<Token> CharacterTokenizer::Tokenize(std::string_view text) const {
  std::vector<Token> out;
  for (const auto& cp : SplitCodePoints(text)) {
    if (!IsSpace(cp.value)) out.push_back(Slice(text, cp.begin, cp.end));
  }
  return out;
}

std::unique_ptr<Tokenizer> MakeLocalTokenizer(std::string_view name) {
  if (name == "whitespace") return std::make_unique<WhitespaceTokenizer>();
  if (name == "whitespace_punct") {
    return std::make_unique<PunctuationTokenizer>();
  }
  if (name == "per_character") return std::make_unique<CharacterTokenizer>();
  throw Error(ErrorKind::kInvalidArgument,
              "unknown tokenizer '" + std::string(name) + "'");
}

std::vector<std::string> TokenTexts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace commenteval
