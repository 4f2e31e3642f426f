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

#ifndef COMMENTEVAL_TOKENIZER_H_
#define COMMENTEVAL_TOKENIZER_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace commenteval {

// A token with the byte range it covers in the tokenized text. Special tokens
// that cover no text use begin == end.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  virtual std::string name() const = 0;
  virtual std::vector<Token> Tokenize(std::string_view text) const = 0;
};

// Splits on Unicode whitespace only.
class WhitespaceTokenizer final : public Tokenizer {
 public:
  std::string name() const override { return "whitespace"; }
  std::vector<Token> Tokenize(std::string_view text) const override;
};

// Splits on whitespace and emits every punctuation code point as its own
// token. CJK ideographs are emitted one per token so mixed-script text stays
// comparable.
class PunctuationTokenizer final : public Tokenizer {
 public:
  std::string name() const override { return "whitespace_punct"; }
  std::vector<Token> Tokenize(std::string_view text) const override;
};

// One token per non-whitespace code point.
class CharacterTokenizer final : public Tokenizer {
 public:
  std::string name() const override { return "per_character"; }
  std::vector<Token> Tokenize(std::string_view text) const override;
};

// "whitespace", "whitespace_punct" or "per_character".
std::unique_ptr<Tokenizer> MakeLocalTokenizer(std::string_view name);

std::vector<std::string> TokenTexts(const std::vector<Token>& tokens);

}  // namespace commenteval

#endif  // COMMENTEVAL_TOKENIZER_H_
