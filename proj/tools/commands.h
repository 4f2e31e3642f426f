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

#ifndef COMMENTEVAL_TOOLS_COMMANDS_H_
#define COMMENTEVAL_TOOLS_COMMANDS_H_

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/judge.h"
#include "commenteval/scorer_backend.h"
#include "commenteval/tokenizer.h"

namespace CLI {
class App;
}  // namespace CLI

namespace commenteval::cli {

void RegisterCorpusCommands(CLI::App& app);
void RegisterScoreCommands(CLI::App& app);
void RegisterJudgeCommands(CLI::App& app);
void RegisterReportCommands(CLI::App& app);

// Owns tokenizers named on the command line: local names ("whitespace",
// "whitespace_punct", "per_character") or "backend=<url>".
class TokenizerSet {
 public:
  explicit TokenizerSet(const std::vector<std::string>& specs);

  std::vector<const Tokenizer*> pointers() const;
  const Tokenizer& front() const { return *tokenizers_.front(); }

 private:
  std::vector<std::unique_ptr<ScorerBackend>> backends_;
  std::vector<std::unique_ptr<Tokenizer>> tokenizers_;
};

void WriteJsonFile(const std::string& path, const nlohmann::json& doc);
nlohmann::json ReadJsonFile(const std::string& path);

// Records from several JSON-lines files, concatenated.
std::vector<nlohmann::json> ReadAllRecords(const std::vector<std::string>& paths);

std::string ToolVersion();

// Per (judge model, language, strategy) outcome rates as TSV.
void WriteJudgeStats(const std::string& path,
                     const std::vector<TaskOutcome>& outcomes);

}  // namespace commenteval::cli

#endif  // COMMENTEVAL_TOOLS_COMMANDS_H_
