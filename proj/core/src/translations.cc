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

#include "commenteval/translations.h"

#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/text.h"

namespace commenteval {

using nlohmann::json;

TranslationTable TranslationTable::FromJson(const json& doc) {
  if (!doc.is_object() || doc.empty()) {
    throw SchemaError({"translation table is empty"});
  }
  TranslationTable table;
  for (const auto& [lang, entries] : doc.items()) {
    if (!entries.is_object()) {
      throw SchemaError({"translations for '" + lang + "' are not an object"});
    }
    table.languages_[lang] = entries;
  }
  return table;
}

TranslationTable TranslationTable::Load(const std::filesystem::path& path) {
  return FromJson(json::parse(ReadFile(path)));
}

TranslationTable TranslationTable::LoadDefault() {
  return Load(DataFile("translations.json"));
}

bool TranslationTable::HasLanguage(std::string_view lang) const {
  return languages_.find(lang) != languages_.end();
}

std::vector<std::string> TranslationTable::Languages() const {
  std::vector<std::string> out;
  for (const auto& [lang, entries] : languages_) out.push_back(lang);
  return out;
}

const json& TranslationTable::Entry(std::string_view lang,
                                    std::string_view key) const {
  auto it = languages_.find(lang);
  if (it == languages_.end()) {
    throw Error(ErrorKind::kMissingTranslation,
                "no translations for language '" + std::string(lang) + "'");
  }
  const json* node = &it->second;
  // Dotted keys address nested objects, e.g. "fields.errors".
  std::string_view rest = key;
  while (!rest.empty()) {
    const std::size_t dot = rest.find('.');
    const std::string part(rest.substr(0, dot));
    if (!node->is_object() || !node->contains(part)) {
      throw Error(ErrorKind::kMissingTranslation,
                  "missing translation '" + std::string(key) +
                      "' for language '" + std::string(lang) + "'");
    }
    node = &(*node)[part];
    rest = dot == std::string_view::npos ? std::string_view()
                                         : rest.substr(dot + 1);
  }
  return *node;
}

const std::string& TranslationTable::Text(std::string_view lang,
                                          std::string_view key) const {
  const json& node = Entry(lang, key);
  if (!node.is_string() || node.get_ref<const std::string&>().empty()) {
    throw Error(ErrorKind::kMissingTranslation,
                "translation '" + std::string(key) + "' for language '" +
                    std::string(lang) + "' is not a non-empty string");
  }
  return node.get_ref<const std::string&>();
}

std::vector<std::string> TranslationTable::List(std::string_view lang,
                                                std::string_view key) const {
  const json& node = Entry(lang, key);
  if (!node.is_array() || node.empty()) {
    throw Error(ErrorKind::kMissingTranslation,
                "translation '" + std::string(key) + "' for language '" +
                    std::string(lang) + "' is not a non-empty list");
  }
  return node.get<std::vector<std::string>>();
}

const std::string& TranslationTable::Field(
    std::string_view lang, std::string_view english_name) const {
  return Text(lang, "fields." + std::string(english_name));
}

const std::string& TranslationTable::Label(std::string_view lang,
                                           OrdinalLabel label) const {
  return Text(lang, "labels." + std::string(LabelName(label)));
}

std::optional<std::string> TranslationTable::EnglishField(
    std::string_view lang, std::string_view name) const {
  auto it = languages_.find(lang);
  if (it == languages_.end() || !it->second.contains("fields")) {
    return std::nullopt;
  }
  const std::string folded = CaseFold(Trim(name));
  for (const auto& [english, translated] : it->second["fields"].items()) {
    if (translated.is_string() &&
        CaseFold(translated.get<std::string>()) == folded) {
      return english;
    }
  }
  return std::nullopt;
}

std::optional<OrdinalLabel> TranslationTable::LabelFromText(
    std::string_view lang, std::string_view text) const {
  auto it = languages_.find(lang);
  if (it == languages_.end() || !it->second.contains("labels")) {
    return std::nullopt;
  }
  const std::string folded = CaseFold(Trim(text));
  for (const auto& [english, translated] : it->second["labels"].items()) {
    if (translated.is_string() &&
        CaseFold(translated.get<std::string>()) == folded) {
      return ParseLabel(english);
    }
  }
  return std::nullopt;
}

void TranslationTable::Set(std::string_view lang, std::string_view key,
                           json value) {
  json& node = languages_[std::string(lang)];
  if (!node.is_object()) node = json::object();
  json* target = &node;
  std::string_view rest = key;
  while (true) {
    const std::size_t dot = rest.find('.');
    const std::string part(rest.substr(0, dot));
    if (dot == std::string_view::npos) {
      if (value.is_null()) {
        target->erase(part);
      } else {
        (*target)[part] = std::move(value);
      }
      return;
    }
    target = &(*target)[part];
    rest = rest.substr(dot + 1);
  }
}

}  // namespace commenteval
