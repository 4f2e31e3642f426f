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

#ifndef COMMENTEVAL_JUDGE_H_
#define COMMENTEVAL_JUDGE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/chat_client.h"
#include "commenteval/corpus.h"
#include "commenteval/labels.h"
#include "commenteval/retry.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"

namespace commenteval {

enum class Strategy { kStandard, kCot, kRubric, kHierarchical };

const char* StrategyName(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view text);

struct JudgeTask {
  std::string task_id;
  CommentSample sample;
  Strategy strategy = Strategy::kStandard;
  std::string language;
  std::string judge_model;
};

// Model names in the order the judge sees them; prediction i is shown to the
// judge as "P<i+1>" so model identities stay hidden.
std::vector<std::string> PredictionOrder(const CommentSample& sample);
std::string PredictionId(std::size_t index);

// ---------------------------------------------------------------------------
// Prompts

// System and user message for one request. For hierarchical tasks pass the
// cluster's codes; the prompt then lists only those and asks the judge to
// ignore everything else. Throws Error(kMissingTranslation) naming the
// missing string.
std::vector<ChatMessage> BuildPrompt(
    const JudgeTask& task, const Taxonomy& taxonomy,
    const TranslationTable& translations,
    const std::vector<std::string>* cluster_codes = nullptr);

// The output schema shown to the judge, with translated keys.
nlohmann::ordered_json OutputSchema(Strategy strategy, std::string_view lang,
                                    const TranslationTable& translations);

// ---------------------------------------------------------------------------
// Responses

enum class OutcomeStatus { kOk, kParseFailure, kEmptyResponse, kTransportFailure };
enum class ParseFailureKind { kNone, kMalformed, kTruncated, kRefusal };

const char* OutcomeStatusName(OutcomeStatus status);
const char* ParseFailureKindName(ParseFailureKind kind);
std::optional<OutcomeStatus> ParseOutcomeStatus(std::string_view text);
std::optional<ParseFailureKind> ParseParseFailureKind(std::string_view text);

struct ErrorAssignment {
  std::string code;
  std::optional<double> confidence;
  std::optional<std::string> justification;

  bool operator==(const ErrorAssignment&) const = default;
};

struct PredictionVerdict {
  std::string id;     // "P1", ...
  std::string model;  // resolved through the prediction order, may be empty
  OrdinalLabel overall = OrdinalLabel::kIncorrect;
  std::vector<ErrorAssignment> errors;
  std::optional<std::string> reasoning;

  bool operator==(const PredictionVerdict&) const = default;
};

struct JudgeVerdict {
  std::vector<PredictionVerdict> predictions;

  bool operator==(const JudgeVerdict&) const = default;
};

struct JudgeOutcome {
  OutcomeStatus status = OutcomeStatus::kParseFailure;
  ParseFailureKind failure = ParseFailureKind::kNone;
  std::optional<JudgeVerdict> verdict;  // present iff status is kOk
  std::string raw;
  std::vector<std::string> warnings;
  std::string detail;
};

struct ParseOptions {
  Strategy strategy = Strategy::kStandard;
  // Model names indexed like the prompt's P1..Pn ids.
  std::vector<std::string> prediction_models;
};

// Total: every input maps to exactly one status; never throws.
JudgeOutcome ParseResponse(std::string_view raw, std::string_view lang,
                           const TranslationTable& translations,
                           const Taxonomy& taxonomy,
                           const ParseOptions& options = {});

// Extracts the structured part of a response: the whole body, else the first
// fenced block, else the outermost balanced braces.
struct Extraction {
  std::optional<nlohmann::ordered_json> document;
  bool truncated = false;   // unbalanced braces or an unclosed fence
  bool has_structure = false;
};
Extraction ExtractDocument(std::string_view raw);

// ---------------------------------------------------------------------------
// Invocation

struct InvokeResult {
  bool ok = false;
  std::string raw;
  int attempts = 0;
  int http_status = 0;
  std::string error;
  std::string request_hash;
  std::string response_hash;
  std::string started;  // ISO-8601 UTC
  std::string finished;
};

// Retries 408/425/429/5xx and connection failures with exponential backoff.
InvokeResult InvokeJudge(ChatClient& client, const std::string& model,
                         const std::vector<ChatMessage>& messages,
                         const DecodingConfig& decoding,
                         const RetryPolicy& retry = {},
                         const Sleeper& sleeper = RealSleeper());

// ---------------------------------------------------------------------------
// Evaluation

struct CallRecord {
  std::string cluster;  // empty for single-call strategies
  std::string request_hash;
  std::string response_hash;
  int attempts = 0;
  OutcomeStatus status = OutcomeStatus::kOk;
  ParseFailureKind failure = ParseFailureKind::kNone;
  std::string started;
  std::string finished;
};

struct TaskOutcome {
  std::string task_id;
  std::string sample_id;
  std::string language;
  std::string judge_model;
  Strategy strategy = Strategy::kStandard;
  JudgeOutcome outcome;
  std::vector<CallRecord> calls;
};

nlohmann::json TaskOutcomeToJson(const TaskOutcome& outcome);
TaskOutcome TaskOutcomeFromJson(const nlohmann::json& record);

struct JudgeOptions {
  DecodingConfig decoding;
  RetryPolicy retry;
  Sleeper sleeper = RealSleeper();
  // By default the meta cluster only contributes errors, not the overall.
  bool include_meta_in_overall = false;
};

// Union of cluster errors and minimum cluster overall per prediction. The
// first non-ok cluster, in partition order, decides a degraded status.
JudgeOutcome AggregateHierarchical(
    const std::vector<std::pair<std::string, JudgeOutcome>>& cluster_outcomes,
    bool include_meta_in_overall = false);

// One request for single-call strategies, one per cluster for hierarchical.
TaskOutcome EvaluateTask(const JudgeTask& task, const Taxonomy& taxonomy,
                         const ClusterPartition& partition,
                         const TranslationTable& translations,
                         ChatClient& client, const JudgeOptions& options = {});

// Caps tokens per minute across threads; 0 disables.
class TokenBudget {
 public:
  explicit TokenBudget(double tokens_per_minute);
  void Acquire(double tokens);

 private:
  double rate_per_ms_;
  double capacity_;
  double available_;
  std::int64_t last_ms_;
  std::mutex mu_;
};

struct RunOptions {
  JudgeOptions judge;
  std::size_t max_in_flight = 4;
  double tokens_per_minute = 0.0;
};

// Results are index-aligned with |tasks| whatever the completion order.
std::vector<TaskOutcome> RunJudge(const std::vector<JudgeTask>& tasks,
                                  const Taxonomy& taxonomy,
                                  const ClusterPartition& partition,
                                  const TranslationTable& translations,
                                  ChatClient& client,
                                  const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Statistics

struct CellKey {
  std::string judge_model;
  std::string language;
  std::string strategy;

  auto operator<=>(const CellKey&) const = default;
};

struct CellStats {
  std::size_t total = 0;  // excludes transport failures
  std::size_t ok = 0;
  std::size_t parse_failures = 0;
  std::size_t empty_responses = 0;
  std::size_t transport_failures = 0;
  std::map<std::string, std::size_t> failure_kinds;
  std::optional<double> parse_failure_rate;  // undefined for an empty cell
  std::optional<double> empty_response_rate;
};

std::map<CellKey, CellStats> RunStats(const std::vector<TaskOutcome>& outcomes);

}  // namespace commenteval

#endif  // COMMENTEVAL_JUDGE_H_
