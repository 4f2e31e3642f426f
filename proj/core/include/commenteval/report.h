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

#ifndef COMMENTEVAL_REPORT_H_
#define COMMENTEVAL_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/calibration.h"
#include "commenteval/corpus.h"
#include "commenteval/judge.h"
#include "commenteval/labels.h"
#include "commenteval/scores.h"
#include "commenteval/taxonomy.h"

namespace commenteval {

// (sample id, generating model): the unit that carries a label and codes.
using Unit = std::pair<std::string, std::string>;
using CodeSets = std::map<Unit, std::set<std::string>>;

inline constexpr std::size_t kDefaultMinSupport = 10;

struct CodePr {
  std::string code;
  std::size_t judge_count = 0;
  std::size_t human_count = 0;
  std::size_t both = 0;
  std::optional<double> precision;  // undefined when judge_count == 0
  std::optional<double> recall;     // undefined when human_count == 0
  bool low_support = false;  // either count below the minimum support
};

// Units present in both maps only. Codes are compared as given; parents are
// not expanded.
std::vector<CodePr> PerCodePr(const CodeSets& judge, const CodeSets& human,
                              const std::vector<std::string>& codes,
                              std::size_t min_support = kDefaultMinSupport);

struct MacroCodePr {
  std::string code;
  std::optional<double> precision;  // mean over setups where defined
  std::optional<double> recall;
  std::size_t precision_setups = 0;
  std::size_t recall_setups = 0;
  bool low_support = false;  // any contributing setup was low-support
};

struct SetupKey {
  std::string judge_model;
  std::string strategy;

  auto operator<=>(const SetupKey&) const = default;
};

struct PerCodeReport {
  std::map<SetupKey, std::vector<CodePr>> per_setup;  // micro within a setup
  std::vector<MacroCodePr> macro;   // averaged over setups
  std::vector<CodePr> pooled;       // micro over every assignment
};

// Codes reported: every non-meta code of the taxonomy. Outcomes other than
// ok are skipped.
PerCodeReport PerCodePrReport(const std::vector<TaskOutcome>& outcomes,
                              const std::vector<CommentSample>& corpus,
                              const Taxonomy& taxonomy,
                              std::size_t min_support = kDefaultMinSupport);

// Human error codes per unit, for units that carry an annotation.
CodeSets HumanCodeSets(const std::vector<CommentSample>& corpus);
CodeSets JudgeCodeSets(const std::vector<TaskOutcome>& outcomes);

// ---------------------------------------------------------------------------

struct CodeAnnotation {
  std::string language;
  std::vector<std::string> codes;
};

// Counts keyed by code or category id, then language ("" = all languages).
// Every assignment also counts toward all ancestors and the category.
struct TaxonomyCounts {
  std::map<std::string, std::map<std::string, std::size_t>> counts;

  std::size_t Get(const std::string& id, const std::string& language = "") const;
};

// Throws Error(kInvalidArgument) for codes missing from the taxonomy.
TaxonomyCounts CountTaxonomy(const std::vector<CodeAnnotation>& annotations,
                             const Taxonomy& taxonomy);
std::vector<CodeAnnotation> CodeAnnotations(
    const std::vector<CommentSample>& corpus);

// ---------------------------------------------------------------------------

// Min-max normalization; nullopt when the values have fewer than two
// distinct points.
std::optional<std::vector<double>> MinMaxNormalize(
    const std::vector<double>& values);

struct StripRow {
  std::string id;
  std::string model;
  std::string language;
  std::string metric;  // metric name plus setting and backend when present
  std::optional<double> raw;
  std::optional<double> normalized;
  std::optional<OrdinalLabel> label;
};

struct StripExport {
  std::vector<StripRow> rows;
  std::map<std::string, bool> constant;  // per metric
};

std::string StripMetricKey(const MetricScore& score);

StripExport ExportStrip(const std::vector<MetricScore>& scores,
                        const std::map<Unit, OrdinalLabel>& labels);

// ---------------------------------------------------------------------------

// A predicted ordinal label for one unit, produced either by a judge or by a
// calibrated metric.
struct PredictedLabel {
  std::string id;
  std::string model;
  std::string language;
  std::string system;    // judge model, or metric/backend
  std::string strategy;  // judge strategy, or context setting
  OrdinalLabel label = OrdinalLabel::kIncorrect;
};

nlohmann::json PredictedLabelToJson(const PredictedLabel& label);
PredictedLabel PredictedLabelFromJson(const nlohmann::json& record);

std::vector<PredictedLabel> PredictedLabelsFromOutcomes(
    const std::vector<TaskOutcome>& outcomes);
std::map<Unit, OrdinalLabel> HumanLabels(
    const std::vector<CommentSample>& corpus);

struct KappaCell {
  std::string system;
  std::string language;
  std::string strategy;
  KappaResult kappa;
  Confusion confusion;
  std::size_t unmatched = 0;  // predictions without a human label
};

// One cell per (system, language, strategy) over units with a human label.
std::vector<KappaCell> AlignmentCells(
    const std::vector<PredictedLabel>& predicted,
    const std::map<Unit, OrdinalLabel>& human,
    KappaWeighting weighting = KappaWeighting::kQuadratic);

struct GroupSummary {
  std::map<std::string, std::string> group;  // dimension -> value
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

// Groups cells by the listed dimensions ("system", "language", "strategy");
// an empty list yields one overall group.
std::vector<GroupSummary> AlignmentSummary(
    const std::vector<KappaCell>& cells,
    const std::vector<std::string>& dimensions);

// ---------------------------------------------------------------------------

struct AccuracyRow {
  std::string language;
  std::string model;
  std::size_t correct = 0;
  std::size_t partially_correct = 0;
  std::size_t incorrect = 0;
};

// Label counts per (language, model), sorted by language then model.
std::vector<AccuracyRow> ExpertAccuracy(
    const std::vector<CommentSample>& corpus);
std::string RenderAccuracyRow(const AccuracyRow& row);

// ---------------------------------------------------------------------------

// Tab-separated table; nullopt cells are written as "null".
using Cell = std::optional<std::string>;
void WriteTsv(const std::filesystem::path& path,
              const std::vector<std::string>& header,
              const std::vector<std::vector<Cell>>& rows);
Cell FormatNumber(std::optional<double> value);

enum class RecordKind { kUnknown, kCorpus, kScores, kOutcomes, kPredictedLabels };

RecordKind DetectRecordKind(const nlohmann::json& record);

}  // namespace commenteval

#endif  // COMMENTEVAL_REPORT_H_
