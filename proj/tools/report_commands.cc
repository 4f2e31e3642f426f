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

#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "commands.h"
#include "commenteval/corpus_io.h"
#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/hash.h"
#include "commenteval/report.h"
#include "commenteval/taxonomy.h"

namespace commenteval::cli {
namespace {

namespace fs = std::filesystem;

struct ReportArgs {
  std::string what, out, taxonomy, weighting = "quadratic";
  std::vector<std::string> in;
  std::vector<std::string> group_by{"system", "language"};
  std::size_t min_support = kDefaultMinSupport;
};

struct Inputs {
  std::vector<CommentSample> corpus;
  std::vector<TaskOutcome> outcomes;
  std::vector<MetricScore> scores;
  std::vector<PredictedLabel> predicted;
};

Inputs LoadInputs(const std::vector<std::string>& paths) {
  Inputs in;
  for (const auto& r : ReadAllRecords(paths)) {
    switch (DetectRecordKind(r)) {
      case RecordKind::kCorpus:
        in.corpus.push_back(SampleFromJson(r));
        break;
      case RecordKind::kOutcomes:
        in.outcomes.push_back(TaskOutcomeFromJson(r));
        break;
      case RecordKind::kScores:
        in.scores.push_back(ScoreFromJson(r));
        break;
      case RecordKind::kPredictedLabels:
        in.predicted.push_back(PredictedLabelFromJson(r));
        break;
      case RecordKind::kUnknown:
        throw Error(ErrorKind::kInvalidArgument,
                    "unrecognized record: " + r.dump().substr(0, 80));
    }
  }
  return in;
}

void Require(bool present, const std::string& what, const std::string& kind) {
  if (!present) {
    throw Error(ErrorKind::kEmptyInput, what + " needs " + kind + " records");
  }
}

Cell Optional(std::optional<double> v) { return FormatNumber(v); }
Cell Bool(bool v) { return std::string(v ? "true" : "false"); }

std::vector<Cell> PrRow(const CodePr& pr) {
  return {pr.code,
          std::to_string(pr.judge_count),
          std::to_string(pr.human_count),
          std::to_string(pr.both),
          Optional(pr.precision),
          Optional(pr.recall),
          Bool(pr.low_support)};
}

const std::vector<std::string> kPrHeader = {
    "code", "judge_count", "human_count", "both", "precision", "recall",
    "low_support"};

std::vector<std::string> PerCodePrReportFiles(const ReportArgs& args,
                                              const Inputs& in,
                                              const Taxonomy& taxonomy) {
  Require(!in.outcomes.empty(), "per-code-pr", "judge outcome");
  Require(!in.corpus.empty(), "per-code-pr", "annotated corpus");
  const auto report =
      PerCodePrReport(in.outcomes, in.corpus, taxonomy, args.min_support);
  const fs::path dir(args.out);

  std::vector<std::vector<Cell>> setup_rows;
  for (const auto& [key, prs] : report.per_setup) {
    for (const auto& pr : prs) {
      std::vector<Cell> row = {key.judge_model, key.strategy};
      for (auto& c : PrRow(pr)) row.push_back(std::move(c));
      setup_rows.push_back(std::move(row));
    }
  }
  std::vector<std::string> setup_header = {"judge_model", "strategy"};
  setup_header.insert(setup_header.end(), kPrHeader.begin(), kPrHeader.end());
  WriteTsv(dir / "per_code_pr_setup.tsv", setup_header, setup_rows);

  std::vector<std::vector<Cell>> macro_rows;
  for (const auto& m : report.macro) {
    macro_rows.push_back({m.code, Optional(m.precision), Optional(m.recall),
                          std::to_string(m.precision_setups),
                          std::to_string(m.recall_setups),
                          Bool(m.low_support)});
  }
  WriteTsv(dir / "per_code_pr_macro.tsv",
           {"code", "precision", "recall", "precision_setups",
            "recall_setups", "low_support"},
           macro_rows);

  std::vector<std::vector<Cell>> micro_rows;
  for (const auto& pr : report.pooled) micro_rows.push_back(PrRow(pr));
  WriteTsv(dir / "per_code_pr_micro.tsv", kPrHeader, micro_rows);
  return {"per_code_pr_setup.tsv", "per_code_pr_macro.tsv",
          "per_code_pr_micro.tsv"};
}

std::vector<std::string> CountsFiles(const ReportArgs& args, const Inputs& in,
                                     const Taxonomy& taxonomy) {
  Require(!in.corpus.empty(), "counts", "annotated corpus");
  const auto annotations = CodeAnnotations(in.corpus);
  const TaxonomyCounts counts = CountTaxonomy(annotations, taxonomy);
  std::set<std::string> languages;
  for (const auto& a : annotations) languages.insert(a.language);

  std::vector<std::string> header = {"id", "kind", "all"};
  header.insert(header.end(), languages.begin(), languages.end());
  std::vector<std::vector<Cell>> rows;
  auto add = [&](const std::string& id, const std::string& kind) {
    std::vector<Cell> row = {id, kind, std::to_string(counts.Get(id))};
    for (const auto& lang : languages) {
      row.push_back(std::to_string(counts.Get(id, lang)));
    }
    rows.push_back(std::move(row));
  };
  for (const auto& c : taxonomy.categories()) add(c.id, "category");
  for (const auto& c : taxonomy.codes()) {
    add(c.id, c.kind == CodeKind::kLeaf    ? "leaf"
              : c.kind == CodeKind::kGroup ? "group"
                                           : "meta");
  }
  WriteTsv(fs::path(args.out) / "taxonomy_counts.tsv", header, rows);
  return {"taxonomy_counts.tsv"};
}

std::vector<std::string> StripFiles(const ReportArgs& args, const Inputs& in) {
  Require(!in.scores.empty(), "strip", "score");
  const auto strip = ExportStrip(in.scores, HumanLabels(in.corpus));
  std::vector<std::vector<Cell>> rows;
  for (const auto& r : strip.rows) {
    rows.push_back({r.id, r.model, r.language, r.metric, Optional(r.raw),
                    Optional(r.normalized),
                    r.label ? Cell(LabelName(*r.label)) : std::nullopt});
  }
  WriteTsv(fs::path(args.out) / "strip.tsv",
           {"id", "model", "language", "metric", "raw", "normalized",
            "label"},
           rows);
  std::vector<std::vector<Cell>> constant;
  for (const auto& [metric, flag] : strip.constant) {
    constant.push_back({metric, Bool(flag)});
  }
  WriteTsv(fs::path(args.out) / "strip_metrics.tsv", {"metric", "constant"},
           constant);
  return {"strip.tsv", "strip_metrics.tsv"};
}

std::vector<std::string> AlignmentFiles(const ReportArgs& args,
                                        const Inputs& in) {
  Require(!in.corpus.empty(), "alignment", "annotated corpus");
  std::vector<PredictedLabel> predicted = in.predicted;
  for (auto& p : PredictedLabelsFromOutcomes(in.outcomes)) {
    predicted.push_back(std::move(p));
  }
  Require(!predicted.empty(), "alignment", "predicted label or outcome");
  const auto cells = AlignmentCells(predicted, HumanLabels(in.corpus),
                                    *ParseKappaWeighting(args.weighting));
  std::vector<std::vector<Cell>> rows;
  for (const auto& c : cells) {
    rows.push_back({c.system, c.language, c.strategy,
                    FormatNumber(c.kappa.kappa), std::to_string(c.kappa.n),
                    Bool(c.kappa.degenerate), std::to_string(c.unmatched)});
  }
  WriteTsv(fs::path(args.out) / "alignment_cells.tsv",
           {"system", "language", "strategy", "kappa", "n", "degenerate",
            "unmatched"},
           rows);

  std::vector<std::vector<Cell>> confusion_rows;
  for (const auto& c : cells) {
    for (int h = 0; h < c.confusion.categories; ++h) {
      for (int p = 0; p < c.confusion.categories; ++p) {
        confusion_rows.push_back(
            {c.system, c.language, c.strategy,
             LabelName(static_cast<OrdinalLabel>(h)),
             LabelName(static_cast<OrdinalLabel>(p)),
             std::to_string(c.confusion.counts[h][p]),
             c.confusion.empty_rows[h]
                 ? std::nullopt
                 : FormatNumber(c.confusion.row_normalized[h][p])});
      }
    }
  }
  WriteTsv(fs::path(args.out) / "alignment_confusion.tsv",
           {"system", "language", "strategy", "human", "predicted", "count",
            "row_share"},
           confusion_rows);

  std::vector<std::string> header = args.group_by;
  for (const char* h : {"mean", "min", "max", "count"}) header.push_back(h);
  std::vector<std::vector<Cell>> summary;
  for (const auto& g : AlignmentSummary(cells, args.group_by)) {
    std::vector<Cell> row;
    for (const auto& d : args.group_by) row.push_back(g.group.at(d));
    row.push_back(FormatNumber(g.mean));
    row.push_back(FormatNumber(g.min));
    row.push_back(FormatNumber(g.max));
    row.push_back(std::to_string(g.count));
    summary.push_back(std::move(row));
  }
  WriteTsv(fs::path(args.out) / "alignment_summary.tsv", header, summary);
  return {"alignment_cells.tsv", "alignment_confusion.tsv",
          "alignment_summary.tsv"};
}

std::vector<std::string> AccuracyFiles(const ReportArgs& args,
                                       const Inputs& in) {
  Require(!in.corpus.empty(), "accuracy", "annotated corpus");
  std::vector<std::vector<Cell>> rows;
  for (const auto& r : ExpertAccuracy(in.corpus)) {
    rows.push_back({r.language, r.model, std::to_string(r.correct),
                    std::to_string(r.partially_correct),
                    std::to_string(r.incorrect)});
  }
  WriteTsv(fs::path(args.out) / "accuracy.tsv",
           {"language", "model", "correct", "partially_correct", "incorrect"},
           rows);
  return {"accuracy.tsv"};
}

void RunReport(const ReportArgs& args) {
  fs::create_directories(args.out);
  const Taxonomy taxonomy = args.taxonomy.empty()
                                ? Taxonomy::LoadDefault()
                                : Taxonomy::Load(args.taxonomy);
  const Inputs in = LoadInputs(args.in);
  std::vector<std::string> outputs;
  if (args.what == "per-code-pr") {
    outputs = PerCodePrReportFiles(args, in, taxonomy);
  } else if (args.what == "counts") {
    outputs = CountsFiles(args, in, taxonomy);
  } else if (args.what == "strip") {
    outputs = StripFiles(args, in);
  } else if (args.what == "alignment") {
    outputs = AlignmentFiles(args, in);
  } else if (args.what == "accuracy") {
    outputs = AccuracyFiles(args, in);
  } else {
    Require(!in.outcomes.empty(), "judge-stats", "judge outcome");
    WriteJudgeStats((fs::path(args.out) / "judge_stats.tsv").string(),
                    in.outcomes);
    outputs = {"judge_stats.tsv"};
  }

  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  for (const auto& p : args.in) {
    inputs.push_back({{"path", p}, {"sha256", Sha256Hex(ReadFile(p))}});
  }
  nlohmann::ordered_json manifest = {
      {"tool_version", ToolVersion()},
      {"what", args.what},
      {"inputs", inputs},
      {"outputs", outputs},
      {"taxonomy_version", taxonomy.version()},
      {"decisions",
       {{"missing_cells", "null"},
        {"min_support", args.min_support},
        {"per_code_pr_units", "judged and annotated (sample, model) pairs"},
        {"per_code_pr_average", "macro over setups and pooled micro"},
        {"kappa_weighting", args.weighting},
        {"unparseable_outcomes", "excluded from kappa"},
        {"strip_normalization", "min-max per metric, null when constant"}}}};
  WriteFile(fs::path(args.out) / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace

void RegisterReportCommands(CLI::App& app) {
  auto args = std::make_shared<ReportArgs>();
  auto* cmd = app.add_subcommand("report", "Tabulate results");
  cmd->add_option("--what", args->what)
      ->required()
      ->check(CLI::IsMember({"per-code-pr", "counts", "strip", "alignment",
                             "accuracy", "judge-stats"}));
  cmd->add_option("--in", args->in, "Input JSON-lines files")->required();
  cmd->add_option("--out", args->out, "Output directory")->required();
  cmd->add_option("--taxonomy", args->taxonomy);
  cmd->add_option("--min-support", args->min_support);
  cmd->add_option("--weighting", args->weighting)
      ->check(CLI::IsMember({"quadratic", "linear", "none"}));
  cmd->add_option("--group-by", args->group_by,
                  "Alignment summary dimensions: system, language, strategy")
      ->delimiter(',');
  cmd->callback([args] { RunReport(*args); });
}

}  // namespace commenteval::cli
