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

#ifndef COMMENTEVAL_TESTS_SUPPORT_JUDGE_FIXTURES_H_
#define COMMENTEVAL_TESTS_SUPPORT_JUDGE_FIXTURES_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/judge.h"
#include "commenteval/labels.h"
#include "commenteval/taxonomy.h"

namespace commenteval::testing {

struct ParseCase {
  std::string name;
  std::string lang;
  std::string raw;
  OutcomeStatus status;
  ParseFailureKind failure = ParseFailureKind::kNone;
};

// Raw judge replies covering valid, fenced, truncated, refusal, empty,
// malformed and translated-key shapes.
const std::vector<ParseCase>& ParseCases();

// Cluster a hierarchical request was built for, found from the taxonomy
// entries listed in its user message. Empty when none matches.
std::string ClusterForRequest(const nlohmann::json& body,
                              const ClusterPartition& partition);

// Reply with one entry per prediction id P1..Pn.
std::string VerdictReply(std::size_t predictions, OrdinalLabel overall,
                         const std::vector<std::string>& codes);

}  // namespace commenteval::testing

#endif  // COMMENTEVAL_TESTS_SUPPORT_JUDGE_FIXTURES_H_
