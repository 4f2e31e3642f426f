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

#include "commenteval/taxonomy.h"

#include <algorithm>
#include <set>

#include "commenteval/data_paths.h"
#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

const char* CodeKindName(CodeKind kind) {
  switch (kind) {
    case CodeKind::kLeaf: return "leaf";
    case CodeKind::kGroup: return "group";
    case CodeKind::kMeta: return "meta";
  }
  return "leaf";
}

namespace {

template <typename Map>
const typename Map::mapped_type& Localized(const Map& map,
                                           std::string_view lang) {
  static const typename Map::mapped_type kEmpty{};
  auto it = map.find(lang);
  if (it != map.end() && !it->second.empty()) return it->second;
  it = map.find("en");
  return it == map.end() ? kEmpty : it->second;
}

}  // namespace

const std::string& ErrorCode::Name(std::string_view lang) const {
  return Localized(name, lang);
}
const std::vector<std::string>& ErrorCode::Inclusion(
    std::string_view lang) const {
  return Localized(inclusion, lang);
}
const std::vector<std::string>& ErrorCode::Exclusion(
    std::string_view lang) const {
  return Localized(exclusion, lang);
}

namespace {

// Accepts either {"en": "..."} or a bare string (taken as English).
template <typename T>
std::map<std::string, T, std::less<>> ReadLocalized(
    const json& node, const std::string& where,
    std::vector<std::string>& violations) {
  std::map<std::string, T, std::less<>> out;
  if (node.is_null()) return out;
  try {
    if (node.is_object()) {
      for (const auto& [lang, value] : node.items()) {
        out[lang] = value.template get<T>();
      }
    } else {
      out["en"] = node.template get<T>();
    }
  } catch (const json::exception&) {
    violations.push_back(where + ": malformed value");
  }
  return out;
}

std::optional<CodeKind> ParseKind(const std::string& text) {
  if (text == "leaf") return CodeKind::kLeaf;
  if (text == "group") return CodeKind::kGroup;
  if (text == "meta") return CodeKind::kMeta;
  return std::nullopt;
}

}  // namespace

Taxonomy Taxonomy::FromJson(const json& doc) {
  if (!doc.is_object() || !doc.contains("codes") || !doc["codes"].is_array() ||
      doc["codes"].empty()) {
    throw SchemaError({"empty: taxonomy defines no codes"});
  }
  std::vector<std::string> violations;
  Taxonomy taxonomy;
  taxonomy.version_ = doc.value("version", std::string());

  std::set<std::string> category_ids;
  for (const auto& node : doc.value("categories", json::array())) {
    Category category;
    category.id = node.value("id", std::string());
    if (category.id.empty()) {
      violations.push_back("category without id");
      continue;
    }
    if (!category_ids.insert(category.id).second) {
      violations.push_back("duplicate category " + category.id);
    }
    category.name = ReadLocalized<std::string>(
        node.value("name", json()), "category " + category.id, violations);
    taxonomy.categories_.push_back(std::move(category));
  }

  std::set<std::string> ids;
  for (const auto& node : doc["codes"]) {
    ErrorCode code;
    if (!node.is_object() || !node.contains("id") || !node["id"].is_string()) {
      violations.push_back("code without id");
      continue;
    }
    code.id = node["id"].get<std::string>();
    if (!ids.insert(code.id).second) {
      violations.push_back("duplicate id " + code.id);
    }
    const std::string kind = node.value("kind", std::string("leaf"));
    if (auto parsed = ParseKind(kind)) {
      code.kind = *parsed;
    } else {
      violations.push_back(code.id + ": unknown kind '" + kind + "'");
    }
    if (node.contains("category") && node["category"].is_string()) {
      code.category = node["category"].get<std::string>();
    }
    if (node.contains("parent") && node["parent"].is_string()) {
      code.parent = node["parent"].get<std::string>();
    }
    code.name = ReadLocalized<std::string>(node.value("name", json()),
                                           code.id + " name", violations);
    code.inclusion = ReadLocalized<std::vector<std::string>>(
        node.value("inclusion", json()), code.id + " inclusion", violations);
    code.exclusion = ReadLocalized<std::vector<std::string>>(
        node.value("exclusion", json()), code.id + " exclusion", violations);

    if (code.Name("en").empty()) violations.push_back(code.id + ": missing name");
    if (code.kind == CodeKind::kMeta) {
      if (!code.category.empty()) {
        violations.push_back(code.id + ": meta code with a category");
      }
    } else if (category_ids.count(code.category) == 0) {
      violations.push_back(code.id + ": unknown category '" + code.category +
                           "'");
    }
    if (code.kind != CodeKind::kGroup && code.Inclusion("en").empty()) {
      violations.push_back(code.id + ": missing inclusion criteria");
    }
    taxonomy.codes_.push_back(std::move(code));
  }

  for (const auto& code : taxonomy.codes_) {
    if (!code.parent) continue;
    const ErrorCode* parent = taxonomy.Find(*code.parent);
    if (parent == nullptr) {
      violations.push_back(code.id + ": dangling parent " + *code.parent);
      continue;
    }
    // Walk up; a chain longer than the code count means a cycle.
    std::size_t steps = 0;
    for (const ErrorCode* p = parent; p != nullptr && p->parent;
         p = taxonomy.Find(*p->parent)) {
      if (++steps > taxonomy.codes_.size()) {
        violations.push_back(code.id + ": parent cycle");
        break;
      }
    }
  }

  if (doc.contains("clusters")) {
    try {
      taxonomy.clusters_ = doc["clusters"].get<ClusterAssignment>();
    } catch (const json::exception&) {
      violations.push_back("clusters: malformed assignment");
    }
  }
  if (!violations.empty()) throw SchemaError(std::move(violations));
  return taxonomy;
}

Taxonomy Taxonomy::Load(const std::filesystem::path& path) {
  return FromJson(json::parse(ReadFile(path)));
}

Taxonomy Taxonomy::LoadDefault() { return Load(DataFile("taxonomy.json")); }

json Taxonomy::ToJson() const {
  json doc;
  doc["version"] = version_;
  doc["categories"] = json::array();
  for (const auto& c : categories_) {
    doc["categories"].push_back({{"id", c.id}, {"name", c.name}});
  }
  doc["codes"] = json::array();
  for (const auto& c : codes_) {
    json node;
    node["id"] = c.id;
    node["kind"] = CodeKindName(c.kind);
    node["category"] = c.category.empty() ? json() : json(c.category);
    node["parent"] = c.parent ? json(*c.parent) : json();
    node["name"] = c.name;
    node["inclusion"] = c.inclusion;
    node["exclusion"] = c.exclusion;
    doc["codes"].push_back(std::move(node));
  }
  if (!clusters_.empty()) doc["clusters"] = clusters_;
  return doc;
}

const ErrorCode* Taxonomy::Find(std::string_view id) const {
  for (const auto& c : codes_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> Taxonomy::LeafIds() const {
  std::vector<std::string> out;
  for (const auto& c : codes_) {
    if (c.kind == CodeKind::kLeaf) out.push_back(c.id);
  }
  return out;
}

std::vector<std::string> Taxonomy::JudgeAssignableIds() const {
  std::vector<std::string> out;
  for (const auto& c : codes_) {
    if (c.judge_assignable()) out.push_back(c.id);
  }
  return out;
}

std::vector<std::string> Taxonomy::Children(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& c : codes_) {
    if (c.parent && *c.parent == id) out.push_back(c.id);
  }
  return out;
}

std::vector<std::string> Taxonomy::Ancestors(std::string_view id) const {
  std::vector<std::string> out;
  const ErrorCode* code = Find(id);
  while (code != nullptr && code->parent && out.size() <= codes_.size()) {
    out.push_back(*code->parent);
    code = Find(*code->parent);
  }
  return out;
}

Taxonomy Taxonomy::Subset(const std::vector<std::string>& ids) const {
  Taxonomy out;
  out.version_ = version_;
  out.categories_ = categories_;
  const std::set<std::string> keep(ids.begin(), ids.end());
  for (const auto& c : codes_) {
    if (keep.count(c.id) == 0) continue;
    ErrorCode copy = c;
    if (copy.parent && keep.count(*copy.parent) == 0) copy.parent.reset();
    out.codes_.push_back(std::move(copy));
  }
  return out;
}

const std::vector<std::string>& ClusterPartition::Codes(
    std::string_view cluster) const {
  static const std::vector<std::string> kEmpty;
  for (const auto& [name, codes] : clusters) {
    if (name == cluster) return codes;
  }
  return kEmpty;
}

std::optional<std::string> ClusterPartition::ClusterOf(
    std::string_view code) const {
  for (const auto& [name, codes] : clusters) {
    if (std::find(codes.begin(), codes.end(), code) != codes.end()) return name;
  }
  return std::nullopt;
}

ClusterPartition BuildClusterPartition(const Taxonomy& taxonomy,
                                       const ClusterAssignment& assignment) {
  std::vector<std::string> violations;
  std::map<std::string, std::string> placed;  // code -> cluster
  for (const auto& [cluster, codes] : assignment) {
    if (std::find(kClusterNames.begin(), kClusterNames.end(), cluster) ==
        kClusterNames.end()) {
      violations.push_back("unknown cluster: " + cluster);
    }
    if (codes.size() > kMaxClusterSize) {
      violations.push_back("oversized cluster: " + cluster + " has " +
                           std::to_string(codes.size()) + " codes");
    }
    for (const auto& code : codes) {
      const ErrorCode* def = taxonomy.Find(code);
      if (def == nullptr) {
        violations.push_back("unknown code: " + code);
      } else if (!def->judge_assignable()) {
        violations.push_back("group code in cluster: " + code);
      }
      auto [it, inserted] = placed.emplace(code, cluster);
      if (!inserted) {
        violations.push_back("code in two clusters: " + code + " (" +
                             it->second + ", " + cluster + ")");
      }
    }
  }
  for (const auto& id : taxonomy.JudgeAssignableIds()) {
    if (placed.count(id) == 0) violations.push_back("unassigned: " + id);
  }
  if (!violations.empty()) throw SchemaError(std::move(violations));

  ClusterPartition partition;
  for (const auto name : kClusterNames) {
    std::vector<std::string> codes;
    // Definition order inside each cluster keeps prompts stable.
    for (const auto& c : taxonomy.codes()) {
      auto it = placed.find(c.id);
      if (it != placed.end() && it->second == name) codes.push_back(c.id);
    }
    partition.clusters.emplace_back(std::string(name), std::move(codes));
  }
  return partition;
}

std::string Rubric::Render() const {
  std::string out;
  for (const auto& entry : entries) {
    if (!out.empty()) out += "\n";
    out += entry.header + "\n";
    out += present_heading + "\n";
    for (const auto& line : entry.present) out += "- " + line + "\n";
    out += absent_heading + "\n";
    for (const auto& line : entry.absent) out += "- " + line + "\n";
  }
  return out;
}

Rubric FormatRubric(const Taxonomy& taxonomy, std::string_view lang,
                    const TranslationTable& translations,
                    const std::vector<std::string>* codes) {
  Rubric rubric;
  rubric.language = std::string(lang);
  rubric.present_heading = translations.Text(lang, "present_heading");
  rubric.absent_heading = translations.Text(lang, "absent_heading");
  const std::string& absent_default = translations.Text(lang, "absent_default");

  std::set<std::string, std::less<>> wanted;
  if (codes != nullptr) {
    wanted.insert(codes->begin(), codes->end());
    for (const auto& id : *codes) {
      if (taxonomy.Find(id) == nullptr) {
        throw Error(ErrorKind::kInvalidArgument, "unknown code " + id);
      }
    }
  }
  for (const auto& code : taxonomy.codes()) {
    const bool include = codes != nullptr ? wanted.count(code.id) > 0
                                          : code.judge_assignable();
    if (!include) continue;
    RubricEntry entry;
    entry.code = code.id;
    entry.header = "### [" + code.id + "] " + code.Name(lang);
    entry.present = code.Inclusion(lang);
    entry.absent = code.Exclusion(lang);
    if (entry.present.empty()) entry.present.push_back(code.Name(lang));
    if (entry.absent.empty()) entry.absent.push_back(absent_default);
    rubric.entries.push_back(std::move(entry));
  }
  return rubric;
}

}  // namespace commenteval
