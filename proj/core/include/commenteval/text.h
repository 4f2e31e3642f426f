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

#ifndef COMMENTEVAL_TEXT_H_
#define COMMENTEVAL_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace commenteval {

struct CodePoint {
  char32_t value = 0;
  std::size_t begin = 0;  // byte offset
  std::size_t end = 0;
};

// Decodes UTF-8. Invalid sequences decode to U+FFFD covering one byte, so
// offsets always tile the input.
std::vector<CodePoint> SplitCodePoints(std::string_view text);

std::string EncodeUtf8(char32_t cp);

bool IsSpace(char32_t cp);
bool IsPunctuation(char32_t cp);
// Han ideographs, kana, hangul and CJK symbols.
bool IsCjk(char32_t cp);
bool IsGreek(char32_t cp);

// Simple lowercase mapping for Latin (incl. Latin-1 and Extended-A), Greek
// and Cyrillic. Other scripts pass through unchanged.
char32_t ToLower(char32_t cp);
std::string CaseFold(std::string_view text);

std::string_view Trim(std::string_view text);
// Collapses every whitespace run to one ASCII space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

bool StartsWith(std::string_view text, std::string_view prefix);

}  // namespace commenteval

#endif  // COMMENTEVAL_TEXT_H_
