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

#include <fstream>

#include "commands.h"
#include "commenteval/corpus_io.h"
#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/text.h"

namespace commenteval::cli {

TokenizerSet::TokenizerSet(const std::vector<std::string>& specs) {
  for (const auto& spec : specs) {
    if (StartsWith(spec, "backend=")) {
      backends_.push_back(
          std::make_unique<HttpScorerBackend>(spec.substr(8)));
      tokenizers_.push_back(
          std::make_unique<BackendTokenizer>(*backends_.back()));
    } else {
      tokenizers_.push_back(MakeLocalTokenizer(spec));
    }
  }
  if (tokenizers_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "at least one tokenizer needed");
  }
}

std::vector<const Tokenizer*> TokenizerSet::pointers() const {
  std::vector<const Tokenizer*> out;
  for (const auto& t : tokenizers_) out.push_back(t.get());
  return out;
}

void WriteJsonFile(const std::string& path, const nlohmann::json& doc) {
  WriteFile(path, doc.dump(2) + "\n");
}

nlohmann::json ReadJsonFile(const std::string& path) {
  return nlohmann::json::parse(ReadFile(path));
}

std::vector<nlohmann::json> ReadAllRecords(
    const std::vector<std::string>& paths) {
  std::vector<nlohmann::json> out;
  for (const auto& p : paths) {
    auto records = ReadJsonLines(p);
    out.insert(out.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  return out;
}

std::string ToolVersion() { return "0.3.0"; }

}  // namespace commenteval::cli
