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
#ifndef COMMENTEVAL_CORPUS_IO_H_
#define COMMENTEVAL_CORPUS_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/corpus.h"

namespace commenteval {

std::vector<nlohmann::json> ReadJsonLines(const std::filesystem::path& path);
void WriteJsonLines(const std::filesystem::path& path,
                    const std::vector<nlohmann::json>& records);

// Corpus line: id, language, pl, prefix, suffix, ground_truth, predictions,
// label, error_codes, origin. label and error_codes are null when the sample
// is unannotated, otherwise objects keyed by prediction model. A bare label
// string or code array is accepted on read when exactly one prediction exists.
nlohmann::json SampleToJson(const CommentSample& sample);
CommentSample SampleFromJson(const nlohmann::json& record);

std::vector<CommentSample> ReadCorpus(const std::filesystem::path& path);
void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<CommentSample>& samples);

// Harvested source files: id, language, pl, content, origin.
nlohmann::json SourceFileToJson(const SourceFile& file);
SourceFile SourceFileFromJson(const nlohmann::json& record);

}  // namespace commenteval

#endif  // COMMENTEVAL_CORPUS_IO_H_
