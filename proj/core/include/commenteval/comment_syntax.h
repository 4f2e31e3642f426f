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
#ifndef COMMENTEVAL_COMMENT_SYNTAX_H_
#define COMMENTEVAL_COMMENT_SYNTAX_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/corpus.h"

namespace commenteval {

struct DelimiterPair {
  std::string open;
  std::string close;
};

struct StringRule {
  std::string open;
  std::string close;
  std::string escape;  // empty: no escape character (raw strings)
};

struct CommentSyntax {
  std::vector<std::string> extensions;
  std::vector<std::string> line;
  std::vector<DelimiterPair> block;
  std::vector<StringRule> strings;
};

class SyntaxTable {
 public:
  static SyntaxTable FromJson(const nlohmann::json& doc);
  static SyntaxTable Load(const std::filesystem::path& path);
  // The table shipped in the data directory.
  static SyntaxTable LoadDefault();

  const CommentSyntax* Find(std::string_view pl_tag) const;
  // Programming language for a file name, by extension.
  std::optional<std::string> LanguageForPath(std::string_view path) const;
  std::vector<std::string> Languages() const;

  void Add(std::string pl_tag, CommentSyntax syntax);

 private:
  std::map<std::string, CommentSyntax, std::less<>> languages_;
};

// Scans the file once, skipping string literals, and returns every non-empty
// comment body in byte order. Block comments end at the first closer.
// Throws Error(kUnsupportedLanguage) for unknown pl tags.
std::vector<CommentSpan> ExtractComments(const SourceFile& file,
                                         const SyntaxTable& table);

}  // namespace commenteval

#endif  // COMMENTEVAL_COMMENT_SYNTAX_H_
