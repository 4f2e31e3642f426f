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

#include "commenteval/corpus_io.h"

#include <fstream>

#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

std::vector<json> ReadJsonLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::kIo, path.string() + ":" +
                                      std::to_string(lineno) + ": " +
                                      e.what());
    }
  }
  return out;
}

void WriteJsonLines(const std::filesystem::path& path,
                    const std::vector<json>& records) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  for (const auto& r : records) out << r.dump() << '\n';
}

json SampleToJson(const CommentSample& sample) {
  json record;
  record["id"] = sample.id;
  record["language"] = sample.file.language_tag;
  record["pl"] = sample.file.pl_tag;
  record["prefix"] = std::string(sample.prefix());
  record["suffix"] = std::string(sample.suffix());
  record["ground_truth"] = sample.ground_truth;
  record["predictions"] = json::object();
  for (const auto& [model, text] : sample.predictions) {
    record["predictions"][model] = text;
  }
  record["label"] = nullptr;
  record["error_codes"] = nullptr;
  bool any_label = false;
  bool any_codes = false;
  json labels = json::object();
  json codes = json::object();
  for (const auto& [model, ann] : sample.annotations) {
    if (ann.label) {
      labels[model] = LabelName(*ann.label);
      any_label = true;
    }
    codes[model] = ann.error_codes;
    any_codes = true;
  }
  if (any_label) record["label"] = labels;
  if (any_codes) record["error_codes"] = codes;
  record["origin"] = sample.file.origin;
  return record;
}

namespace {

// Resolves a label/error_codes field into per-model entries.
template <typename Fn>
void ForEachModelEntry(const json& field, const CommentSample& sample,
                       const char* name, Fn&& fn) {
  if (field.is_null()) return;
  if (field.is_object()) {
    for (const auto& [model, value] : field.items()) fn(model, value);
    return;
  }
  if (sample.predictions.size() != 1) {
    throw Error(ErrorKind::kSchema,
                std::string("sample ") + sample.id + ": bare '" + name +
                    "' needs exactly one prediction");
  }
  fn(sample.predictions.begin()->first, field);
}

}  // namespace

CommentSample SampleFromJson(const json& record) {
  try {
    SourceFile file;
    const auto id = record.at("id").get<std::string>();
    // The record format carries neither the file id nor the span kind.
    file.id = id;
    file.language_tag = record.at("language").get<std::string>();
    file.pl_tag = record.value("pl", std::string());
    file.origin = record.value("origin", std::string());
    const auto prefix = record.at("prefix").get<std::string>();
    const auto truth = record.at("ground_truth").get<std::string>();
    const auto suffix = record.at("suffix").get<std::string>();
    file.content = prefix + truth + suffix;

    CommentSample sample;
    sample.id = id;
    sample.span = {prefix.size(), prefix.size() + truth.size(), truth,
                   CommentSyntaxKind::kLine};
    sample.ground_truth = truth;
    sample.file = std::move(file);
    if (record.contains("predictions") && !record["predictions"].is_null()) {
      for (const auto& [model, text] : record["predictions"].items()) {
        sample.predictions[model] = text.get<std::string>();
      }
    }
    ForEachModelEntry(record.value("label", json()), sample, "label",
                      [&](const std::string& model, const json& value) {
                        if (value.is_null()) return;
                        const auto label = ParseLabel(value.get<std::string>());
                        if (!label) {
                          throw Error(ErrorKind::kSchema,
                                      "sample " + sample.id +
                                          ": unknown label " + value.dump());
                        }
                        sample.annotations[model].label = label;
                      });
    ForEachModelEntry(record.value("error_codes", json()), sample,
                      "error_codes",
                      [&](const std::string& model, const json& value) {
                        if (value.is_null()) return;
                        sample.annotations[model].error_codes =
                            value.get<std::vector<std::string>>();
                      });
    return sample;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema,
                std::string("malformed corpus record: ") + e.what());
  }
}

std::vector<CommentSample> ReadCorpus(const std::filesystem::path& path) {
  std::vector<CommentSample> out;
  for (const auto& record : ReadJsonLines(path)) {
    out.push_back(SampleFromJson(record));
  }
  return out;
}

void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<CommentSample>& samples) {
  std::vector<json> records;
  records.reserve(samples.size());
  for (const auto& s : samples) records.push_back(SampleToJson(s));
  WriteJsonLines(path, records);
}

json SourceFileToJson(const SourceFile& file) {
  return {{"id", file.id},
          {"language", file.language_tag},
          {"pl", file.pl_tag},
          {"content", file.content},
          {"origin", file.origin}};
}

SourceFile SourceFileFromJson(const json& record) {
  SourceFile file;
  file.id = record.at("id").get<std::string>();
  file.language_tag = record.at("language").get<std::string>();
  file.pl_tag = record.at("pl").get<std::string>();
  file.content = record.at("content").get<std::string>();
  file.origin = record.value("origin", std::string());
  return file;
}

}  // namespace commenteval
