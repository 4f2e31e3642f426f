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

#include <iostream>
#include <map>
#include <mutex>

#include <CLI11.hpp>

#include "commands.h"
#include "commenteval/calibration.h"
#include "commenteval/corpus_io.h"
#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/judge.h"
#include "commenteval/neural_scoring.h"
#include "commenteval/parallel.h"
#include "commenteval/report.h"
#include "commenteval/scores.h"
#include "commenteval/translations.h"

namespace commenteval::cli {
namespace {

using CellId = std::pair<std::string, std::string>;  // metric key, language

std::vector<MetricScore> ReadScores(const std::vector<std::string>& paths) {
  std::vector<MetricScore> scores;
  for (const auto& r : ReadAllRecords(paths)) {
    scores.push_back(ScoreFromJson(r));
  }
  return scores;
}

void RegisterScore(CLI::App& app) {
  struct Args {
    std::string metric, corpus, out, backend, setting = "no_context",
        direction = "ref_to_cand", translations;
    std::size_t max_in_flight = 4;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("score", "Score predictions against references");
  cmd->add_option("--metric", args->metric)
      ->required()
      ->check(CLI::IsMember(
          {"bleu", "rouge-l", "meteor", "embedding", "likelihood"}));
  cmd->add_option("--corpus", args->corpus)->required();
  cmd->add_option("--out", args->out)->required();
  cmd->add_option("--backend", args->backend, "Scoring backend base URL");
  cmd->add_option("--setting", args->setting)
      ->check(CLI::IsMember({"no_context", "minimal_context", "full_context"}));
  cmd->add_option("--direction", args->direction)
      ->check(CLI::IsMember({"ref_to_cand", "cand_to_ref", "bidirectional"}));
  cmd->add_option("--translations", args->translations);
  cmd->add_option("--max-in-flight", args->max_in_flight);
  cmd->callback([args] {
    const auto corpus = ReadCorpus(args->corpus);
    std::vector<std::pair<const CommentSample*, std::string>> units;
    for (const auto& s : corpus) {
      for (const auto& [model, text] : s.predictions) units.emplace_back(&s, model);
    }
    std::vector<MetricScore> scores(units.size());
    const bool neural =
        args->metric == "embedding" || args->metric == "likelihood";
    if (!neural) {
      for (std::size_t i = 0; i < units.size(); ++i) {
        scores[i] = ScoreClassical(*units[i].first, units[i].second,
                                   args->metric);
      }
    } else {
      if (args->backend.empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "neural metrics need --backend");
      }
      const TranslationTable translations =
          args->translations.empty()
              ? TranslationTable::LoadDefault()
              : TranslationTable::Load(args->translations);
      HttpScorerBackend backend(args->backend);
      NeuralOptions options;
      options.mode = args->metric == "embedding" ? ScoreMode::kEmbedding
                                                 : ScoreMode::kLikelihood;
      options.setting = *ParseContextSetting(args->setting);
      options.direction = *ParseLikelihoodDirection(args->direction);
      ParallelFor(units.size(), args->max_in_flight, [&](std::size_t i) {
        scores[i] = ScoreSample(*units[i].first, units[i].second, backend,
                                translations, options);
      });
    }
    std::vector<nlohmann::json> records;
    std::size_t missing = 0;
    for (const auto& s : scores) {
      if (!s.value) ++missing;
      records.push_back(ScoreToJson(s));
    }
    WriteJsonLines(args->out, records);
    std::cerr << records.size() << " scores, " << missing << " without value\n";
  });
}

void RegisterCalibrate(CLI::App& app) {
  struct Args {
    std::vector<std::string> scores;
    std::string labels, out, bandwidth = "silverman", pred_out;
    double fixed_bandwidth = 0.0;
    std::size_t grid = kDefaultGridResolution;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand(
      "calibrate", "Fit per-class densities and derive label regions");
  cmd->add_option("--scores", args->scores)->required();
  cmd->add_option("--labels", args->labels, "Corpus with human labels")
      ->required();
  cmd->add_option("--out", args->out)->required();
  cmd->add_option("--bandwidth", args->bandwidth)
      ->check(CLI::IsMember({"silverman", "scott", "fixed"}));
  cmd->add_option("--fixed-bandwidth", args->fixed_bandwidth);
  cmd->add_option("--grid", args->grid);
  cmd->add_option("--pred-out", args->pred_out,
                  "Predicted labels for every scored unit");
  cmd->callback([args] {
    const auto human = HumanLabels(ReadCorpus(args->labels));
    CalibrationOptions options;
    options.bandwidth.rule = *ParseBandwidthRule(args->bandwidth);
    options.bandwidth.fixed = args->fixed_bandwidth;
    options.grid_resolution = args->grid;

    std::map<CellId, std::vector<MetricScore>> cells;
    for (auto& s : ReadScores(args->scores)) {
      if (!s.value) continue;
      cells[{StripMetricKey(s), s.language}].push_back(std::move(s));
    }
    nlohmann::ordered_json doc = {{"cells", nlohmann::ordered_json::array()}};
    std::vector<nlohmann::json> predicted;
    for (const auto& [cell, members] : cells) {
      std::vector<double> xs;
      std::vector<int> ys;
      for (const auto& s : members) {
        auto it = human.find({s.id, s.model});
        if (it == human.end()) continue;
        xs.push_back(*s.value);
        ys.push_back(ToIndex(it->second));
      }
      nlohmann::ordered_json entry = {{"metric", cell.first},
                                      {"language", cell.second},
                                      {"n", xs.size()}};
      try {
        const LabelRegions regions = Calibrate(xs, ys, options);
        entry["regions"] = RegionsToJson(regions);
        for (const auto& s : members) {
          PredictedLabel label{s.id, s.model, s.language, cell.first,
                               s.setting,
                               static_cast<OrdinalLabel>(
                                   regions.Classify(*s.value))};
          predicted.push_back(PredictedLabelToJson(label));
        }
      } catch (const Error& e) {
        entry["error"] = e.what();
        std::cerr << "warning: " << cell.first << "/" << cell.second << ": "
                  << e.what() << "\n";
      }
      doc["cells"].push_back(std::move(entry));
    }
    WriteFile(args->out, doc.dump(2) + "\n");
    if (!args->pred_out.empty()) WriteJsonLines(args->pred_out, predicted);
  });
}

std::vector<PredictedLabel> LoadPredicted(const std::vector<std::string>& paths) {
  std::vector<PredictedLabel> out;
  std::vector<TaskOutcome> outcomes;
  for (const auto& r : ReadAllRecords(paths)) {
    switch (DetectRecordKind(r)) {
      case RecordKind::kPredictedLabels:
        out.push_back(PredictedLabelFromJson(r));
        break;
      case RecordKind::kOutcomes:
        outcomes.push_back(TaskOutcomeFromJson(r));
        break;
      default:
        throw Error(ErrorKind::kInvalidArgument,
                    "expected predicted labels or judge outcomes");
    }
  }
  for (auto& p : PredictedLabelsFromOutcomes(outcomes)) out.push_back(p);
  return out;
}

void RegisterAgree(CLI::App& app) {
  struct Args {
    std::vector<std::string> pred;
    std::string human, weighting = "quadratic", out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("agree", "Weighted kappa against human labels");
  cmd->add_option("--pred", args->pred,
                  "Predicted labels or judge outcomes")->required();
  cmd->add_option("--human", args->human, "Corpus with human labels")
      ->required();
  cmd->add_option("--weighting", args->weighting)
      ->check(CLI::IsMember({"quadratic", "linear", "none"}));
  cmd->add_option("--out", args->out, "TSV output; stdout when empty");
  cmd->callback([args] {
    const auto cells =
        AlignmentCells(LoadPredicted(args->pred),
                       HumanLabels(ReadCorpus(args->human)),
                       *ParseKappaWeighting(args->weighting));
    const std::vector<std::string> header = {
        "system", "language", "strategy", "kappa", "n", "degenerate",
        "unmatched"};
    std::vector<std::vector<Cell>> rows;
    for (const auto& c : cells) {
      rows.push_back({c.system, c.language, c.strategy,
                      FormatNumber(c.kappa.kappa),
                      std::to_string(c.kappa.n),
                      c.kappa.degenerate ? "true" : "false",
                      std::to_string(c.unmatched)});
    }
    if (!args->out.empty()) {
      WriteTsv(args->out, header, rows);
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::cout << (i ? "\t" : "") << header[i];
    }
    std::cout << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << (i ? "\t" : "") << row[i].value_or("null");
      }
      std::cout << "\n";
    }
  });
}

void RegisterNoiseF1(CLI::App& app) {
  struct Args {
    std::vector<std::string> genuine, noise;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand(
      "noise-f1", "Separability of genuine and noise scores");
  cmd->add_option("--genuine", args->genuine)->required();
  cmd->add_option("--noise", args->noise)->required();
  cmd->add_option("--out", args->out)->required();
  cmd->callback([args] {
    std::map<CellId, std::pair<std::vector<double>, std::vector<double>>> cells;
    for (const auto& s : ReadScores(args->genuine)) {
      if (s.value) cells[{StripMetricKey(s), s.language}].first.push_back(*s.value);
    }
    for (const auto& s : ReadScores(args->noise)) {
      if (s.value) cells[{StripMetricKey(s), s.language}].second.push_back(*s.value);
    }
    std::vector<std::vector<Cell>> rows;
    for (const auto& [cell, data] : cells) {
      std::vector<Cell> row = {cell.first, cell.second,
                               std::to_string(data.first.size()),
                               std::to_string(data.second.size())};
      try {
        const NoiseF1 r = BinaryNoiseF1(data.first, data.second);
        row.push_back(FormatNumber(r.f1));
        row.push_back(FormatNumber(r.precision));
        row.push_back(FormatNumber(r.recall));
        row.push_back(r.degenerate ? "true" : "false");
      } catch (const Error& e) {
        row.insert(row.end(), {std::nullopt, std::nullopt, std::nullopt,
                               std::nullopt});
        std::cerr << "warning: " << cell.first << "/" << cell.second << ": "
                  << e.what() << "\n";
      }
      rows.push_back(std::move(row));
    }
    WriteTsv(args->out,
             {"metric", "language", "genuine", "noise", "f1", "precision",
              "recall", "degenerate"},
             rows);
  });
}

}  // namespace

void RegisterScoreCommands(CLI::App& app) {
  RegisterScore(app);
  RegisterCalibrate(app);
  RegisterAgree(app);
  RegisterNoiseF1(app);
}

}  // namespace commenteval::cli
