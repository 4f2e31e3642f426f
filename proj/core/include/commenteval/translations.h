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

#ifndef COMMENTEVAL_TRANSLATIONS_H_
#define COMMENTEVAL_TRANSLATIONS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/labels.h"

namespace commenteval {

// Fixed prompt and rubric vocabulary per natural language. Lookups of missing
// entries throw Error(kMissingTranslation) naming the language and key.
class TranslationTable {
 public:
  static TranslationTable FromJson(const nlohmann::json& doc);
  static TranslationTable Load(const std::filesystem::path& path);
  static TranslationTable LoadDefault();

  bool HasLanguage(std::string_view lang) const;
  std::vector<std::string> Languages() const;

  const std::string& Text(std::string_view lang, std::string_view key) const;
  std::vector<std::string> List(std::string_view lang,
                                std::string_view key) const;

  // Output-schema field names ("predictions", "errors", ...) and label values
  // as the judge is asked to write them.
  const std::string& Field(std::string_view lang,
                           std::string_view english_name) const;
  const std::string& Label(std::string_view lang, OrdinalLabel label) const;

  // Inverse maps, used when parsing judge output.
  std::optional<std::string> EnglishField(std::string_view lang,
                                          std::string_view name) const;
  std::optional<OrdinalLabel> LabelFromText(std::string_view lang,
                                            std::string_view text) const;

  // Replaces or adds one entry; mostly for tests.
  void Set(std::string_view lang, std::string_view key, nlohmann::json value);

 private:
  const nlohmann::json& Entry(std::string_view lang,
                              std::string_view key) const;

  std::map<std::string, nlohmann::json, std::less<>> languages_;
};

}  // namespace commenteval

#endif  // COMMENTEVAL_TRANSLATIONS_H_
