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

#ifndef COMMENTEVAL_TAXONOMY_H_
#define COMMENTEVAL_TAXONOMY_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/translations.h"

namespace commenteval {

// kGroup codes only aggregate their children (e.g. LG-GR over LG-GR1..5).
// kMeta codes are the judge's "no error" and catch-all answers; they belong
// to no category.
enum class CodeKind { kLeaf, kGroup, kMeta };

const char* CodeKindName(CodeKind kind);

// Per-language strings keyed by language tag; "en" is the fallback.
using LocalizedText = std::map<std::string, std::string, std::less<>>;
using LocalizedList = std::map<std::string, std::vector<std::string>, std::less<>>;

struct ErrorCode {
  std::string id;
  CodeKind kind = CodeKind::kLeaf;
  std::string category;  // MS, LG, SE, ST; empty for meta codes
  std::optional<std::string> parent;
  LocalizedText name;
  LocalizedList inclusion;
  LocalizedList exclusion;

  bool judge_assignable() const { return kind != CodeKind::kGroup; }

  const std::string& Name(std::string_view lang) const;
  const std::vector<std::string>& Inclusion(std::string_view lang) const;
  const std::vector<std::string>& Exclusion(std::string_view lang) const;

  bool operator==(const ErrorCode&) const = default;
};

struct Category {
  std::string id;
  LocalizedText name;

  bool operator==(const Category&) const = default;
};

// Cluster name -> member codes, as stored in the definition file.
using ClusterAssignment = std::map<std::string, std::vector<std::string>>;

class Taxonomy {
 public:
  // Validates the whole document and throws SchemaError listing every
  // violation found.
  static Taxonomy FromJson(const nlohmann::json& doc);
  static Taxonomy Load(const std::filesystem::path& path);
  static Taxonomy LoadDefault();

  nlohmann::json ToJson() const;

  const std::string& version() const { return version_; }
  const std::vector<Category>& categories() const { return categories_; }
  // In definition order, which follows the category order of the table.
  const std::vector<ErrorCode>& codes() const { return codes_; }
  const ClusterAssignment& cluster_assignment() const { return clusters_; }

  const ErrorCode* Find(std::string_view id) const;
  std::vector<std::string> LeafIds() const;
  std::vector<std::string> JudgeAssignableIds() const;
  std::vector<std::string> Children(std::string_view id) const;
  // Parent chain, nearest first.
  std::vector<std::string> Ancestors(std::string_view id) const;

  // Keeps the listed codes in definition order; clusters are dropped.
  Taxonomy Subset(const std::vector<std::string>& ids) const;

  bool operator==(const Taxonomy&) const = default;

 private:
  std::string version_;
  std::vector<Category> categories_;
  std::vector<ErrorCode> codes_;
  ClusterAssignment clusters_;
};

inline constexpr std::array<std::string_view, 7> kClusterNames = {
    "linguistic_grammar", "linguistic_language", "semantic_accuracy",
    "semantic_code",      "model_behavior",      "syntax_format",
    "meta"};
inline constexpr std::string_view kMetaCluster = "meta";
inline constexpr std::size_t kMaxClusterSize = 9;

struct ClusterPartition {
  // Always the seven names of kClusterNames, in that order.
  std::vector<std::pair<std::string, std::vector<std::string>>> clusters;

  const std::vector<std::string>& Codes(std::string_view cluster) const;
  std::optional<std::string> ClusterOf(std::string_view code) const;
};

// Throws SchemaError listing unassigned codes, unknown clusters, unknown or
// group codes, codes placed twice and clusters above kMaxClusterSize.
ClusterPartition BuildClusterPartition(const Taxonomy& taxonomy,
                                       const ClusterAssignment& assignment);

struct RubricEntry {
  std::string code;
  std::string header;  // "### [SE-MD] Missing details"
  std::vector<std::string> present;
  std::vector<std::string> absent;

  bool operator==(const RubricEntry&) const = default;
};

struct Rubric {
  std::string language;
  std::string present_heading;
  std::string absent_heading;
  std::vector<RubricEntry> entries;

  std::string Render() const;
  bool operator==(const Rubric&) const = default;
};

// Entries for the judge-assignable codes, or for |codes| when given.
// Criteria fall back to English when untranslated; the fixed headings do
// not.
Rubric FormatRubric(const Taxonomy& taxonomy, std::string_view lang,
                    const TranslationTable& translations,
                    const std::vector<std::string>* codes = nullptr);

}  // namespace commenteval

#endif  // COMMENTEVAL_TAXONOMY_H_
