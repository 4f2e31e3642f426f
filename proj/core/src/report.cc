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

#include "commenteval/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

std::vector<CodePr> PerCodePr(const CodeSets& judge, const CodeSets& human,
                              const std::vector<std::string>& codes,
                              std::size_t min_support) {
  std::vector<CodePr> out;
  out.reserve(codes.size());
  for (const auto& code : codes) {
    CodePr pr;
    pr.code = code;
    for (const auto& [unit, judged] : judge) {
      auto h = human.find(unit);
      if (h == human.end()) continue;
      const bool j = judged.count(code) > 0;
      const bool m = h->second.count(code) > 0;
      pr.judge_count += j;
      pr.human_count += m;
      pr.both += j && m;
    }
    if (pr.judge_count > 0) {
      pr.precision = static_cast<double>(pr.both) / pr.judge_count;
    }
    if (pr.human_count > 0) {
      pr.recall = static_cast<double>(pr.both) / pr.human_count;
    }
    pr.low_support =
        pr.judge_count < min_support || pr.human_count < min_support;
    out.push_back(std::move(pr));
  }
  return out;
}

CodeSets HumanCodeSets(const std::vector<CommentSample>& corpus) {
  CodeSets sets;
  for (const auto& s : corpus) {
    for (const auto& [model, ann] : s.annotations) {
      auto& codes = sets[{s.id, model}];
      codes.insert(ann.error_codes.begin(), ann.error_codes.end());
    }
  }
  return sets;
}

CodeSets JudgeCodeSets(const std::vector<TaskOutcome>& outcomes) {
  CodeSets sets;
  for (const auto& o : outcomes) {
    if (o.outcome.status != OutcomeStatus::kOk || !o.outcome.verdict) continue;
    for (const auto& p : o.outcome.verdict->predictions) {
      if (p.model.empty()) continue;
      auto& codes = sets[{o.sample_id, p.model}];
      for (const auto& e : p.errors) codes.insert(e.code);
    }
  }
  return sets;
}

PerCodeReport PerCodePrReport(const std::vector<TaskOutcome>& outcomes,
                              const std::vector<CommentSample>& corpus,
                              const Taxonomy& taxonomy,
                              std::size_t min_support) {
  std::vector<std::string> codes;
  for (const auto& c : taxonomy.codes()) {
    if (c.kind != CodeKind::kMeta) codes.push_back(c.id);
  }
  const CodeSets human = HumanCodeSets(corpus);

  std::map<SetupKey, std::vector<TaskOutcome>> by_setup;
  for (const auto& o : outcomes) {
    by_setup[{o.judge_model, StrategyName(o.strategy)}].push_back(o);
  }
  PerCodeReport report;
  // Pooled counts are summed per setup, so a unit judged by several setups
  // counts once per setup.
  std::map<std::string, CodePr> pooled;
  for (const auto& code : codes) pooled[code].code = code;
  for (const auto& [setup, group] : by_setup) {
    auto rows = PerCodePr(JudgeCodeSets(group), human, codes, min_support);
    for (const auto& r : rows) {
      auto& p = pooled[r.code];
      p.judge_count += r.judge_count;
      p.human_count += r.human_count;
      p.both += r.both;
    }
    report.per_setup[setup] = std::move(rows);
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    MacroCodePr macro;
    macro.code = codes[i];
    double p_sum = 0.0, r_sum = 0.0;
    for (const auto& [setup, rows] : report.per_setup) {
      const CodePr& r = rows[i];
      if (r.precision) {
        p_sum += *r.precision;
        ++macro.precision_setups;
      }
      if (r.recall) {
        r_sum += *r.recall;
        ++macro.recall_setups;
      }
      macro.low_support = macro.low_support || r.low_support;
    }
    if (report.per_setup.empty()) macro.low_support = true;
    if (macro.precision_setups > 0) macro.precision = p_sum / macro.precision_setups;
    if (macro.recall_setups > 0) macro.recall = r_sum / macro.recall_setups;
    report.macro.push_back(std::move(macro));

    CodePr p = pooled[codes[i]];
    if (p.judge_count > 0) p.precision = static_cast<double>(p.both) / p.judge_count;
    if (p.human_count > 0) p.recall = static_cast<double>(p.both) / p.human_count;
    p.low_support = p.judge_count < min_support || p.human_count < min_support;
    report.pooled.push_back(std::move(p));
  }
  return report;
}

std::size_t TaxonomyCounts::Get(const std::string& id,
                                const std::string& language) const {
  auto it = counts.find(id);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(language);
  return jt == it->second.end() ? 0 : jt->second;
}

TaxonomyCounts CountTaxonomy(const std::vector<CodeAnnotation>& annotations,
                             const Taxonomy& taxonomy) {
  TaxonomyCounts out;
  for (const auto& c : taxonomy.categories()) {
    out.counts[c.id][""] = 0;
  }
  for (const auto& c : taxonomy.codes()) out.counts[c.id][""] = 0;
  for (const auto& ann : annotations) {
    for (const auto& id : ann.codes) {
      const ErrorCode* code = taxonomy.Find(id);
      if (code == nullptr) {
        throw Error(ErrorKind::kInvalidArgument, "unknown code " + id);
      }
      std::vector<std::string> targets = {id};
      for (auto& a : taxonomy.Ancestors(id)) targets.push_back(std::move(a));
      if (!code->category.empty()) targets.push_back(code->category);
      for (const auto& t : targets) {
        ++out.counts[t][""];
        ++out.counts[t][ann.language];
      }
    }
  }
  return out;
}

std::vector<CodeAnnotation> CodeAnnotations(
    const std::vector<CommentSample>& corpus) {
  std::vector<CodeAnnotation> out;
  for (const auto& s : corpus) {
    for (const auto& [model, ann] : s.annotations) {
      if (!ann.error_codes.empty()) {
        out.push_back({s.file.language_tag, ann.error_codes});
      }
    }
  }
  return out;
}

std::optional<std::vector<double>> MinMaxNormalize(
    const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*hi > *lo)) return std::nullopt;
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back((v - min) / range);
  return out;
}

std::string StripMetricKey(const MetricScore& score) {
  std::string key = score.metric;
  if (!score.setting.empty()) key += "/" + score.setting;
  if (!score.backend.empty()) key += "/" + score.backend;
  return key;
}

StripExport ExportStrip(const std::vector<MetricScore>& scores,
                        const std::map<Unit, OrdinalLabel>& labels) {
  StripExport out;
  std::map<std::string, std::vector<std::size_t>> by_metric;
  for (const auto& s : scores) {
    StripRow row;
    row.id = s.id;
    row.model = s.model;
    row.language = s.language;
    row.metric = StripMetricKey(s);
    row.raw = s.value;
    auto it = labels.find({s.id, s.model});
    if (it != labels.end()) row.label = it->second;
    if (s.value) by_metric[row.metric].push_back(out.rows.size());
    out.constant.emplace(row.metric, false);
    out.rows.push_back(std::move(row));
  }
  for (const auto& [metric, indices] : by_metric) {
    std::vector<double> values;
    for (auto i : indices) values.push_back(*out.rows[i].raw);
    const auto normalized = MinMaxNormalize(values);
    out.constant[metric] = !normalized.has_value();
    if (!normalized) continue;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      out.rows[indices[k]].normalized = (*normalized)[k];
    }
  }
  return out;
}

json PredictedLabelToJson(const PredictedLabel& label) {
  return {{"id", label.id},          {"model", label.model},
          {"language", label.language}, {"system", label.system},
          {"strategy", label.strategy}, {"label", LabelName(label.label)}};
}

PredictedLabel PredictedLabelFromJson(const json& record) {
  try {
    PredictedLabel p;
    p.id = record.at("id").get<std::string>();
    p.model = record.at("model").get<std::string>();
    p.language = record.value("language", std::string());
    p.system = record.value("system", std::string());
    p.strategy = record.value("strategy", std::string());
    const auto label = ParseLabel(record.at("label").get<std::string>());
    if (!label) throw Error(ErrorKind::kSchema, "unknown label");
    p.label = *label;
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema,
                std::string("malformed label record: ") + e.what());
  }
}

std::vector<PredictedLabel> PredictedLabelsFromOutcomes(
    const std::vector<TaskOutcome>& outcomes) {
  std::vector<PredictedLabel> out;
  for (const auto& o : outcomes) {
    if (o.outcome.status != OutcomeStatus::kOk || !o.outcome.verdict) continue;
    for (const auto& p : o.outcome.verdict->predictions) {
      if (p.model.empty()) continue;
      out.push_back({o.sample_id, p.model, o.language, o.judge_model,
                     StrategyName(o.strategy), p.overall});
    }
  }
  return out;
}

std::map<Unit, OrdinalLabel> HumanLabels(
    const std::vector<CommentSample>& corpus) {
  std::map<Unit, OrdinalLabel> out;
  for (const auto& s : corpus) {
    for (const auto& [model, ann] : s.annotations) {
      if (ann.label) out[{s.id, model}] = *ann.label;
    }
  }
  return out;
}

std::vector<KappaCell> AlignmentCells(
    const std::vector<PredictedLabel>& predicted,
    const std::map<Unit, OrdinalLabel>& human, KappaWeighting weighting) {
  struct Pairs {
    std::vector<int> human;
    std::vector<int> predicted;
    std::size_t unmatched = 0;
  };
  std::map<std::tuple<std::string, std::string, std::string>, Pairs> cells;
  for (const auto& p : predicted) {
    Pairs& pairs = cells[{p.system, p.language, p.strategy}];
    auto it = human.find({p.id, p.model});
    if (it == human.end()) {
      ++pairs.unmatched;
      continue;
    }
    pairs.human.push_back(ToIndex(it->second));
    pairs.predicted.push_back(ToIndex(p.label));
  }
  std::vector<KappaCell> out;
  for (const auto& [key, pairs] : cells) {
    if (pairs.human.empty()) continue;
    KappaCell cell;
    std::tie(cell.system, cell.language, cell.strategy) = key;
    cell.kappa = WeightedKappa(pairs.human, pairs.predicted, weighting);
    cell.confusion = ConfusionMatrix(pairs.human, pairs.predicted);
    cell.unmatched = pairs.unmatched;
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<GroupSummary> AlignmentSummary(
    const std::vector<KappaCell>& cells,
    const std::vector<std::string>& dimensions) {
  std::map<std::map<std::string, std::string>, std::vector<double>> groups;
  for (const auto& c : cells) {
    std::map<std::string, std::string> key;
    for (const auto& d : dimensions) {
      if (d == "system") {
        key[d] = c.system;
      } else if (d == "language") {
        key[d] = c.language;
      } else if (d == "strategy") {
        key[d] = c.strategy;
      } else {
        throw Error(ErrorKind::kInvalidArgument, "unknown dimension " + d);
      }
    }
    groups[key].push_back(c.kappa.kappa);
  }
  std::vector<GroupSummary> out;
  for (const auto& [key, values] : groups) {
    GroupSummary g;
    g.group = key;
    g.count = values.size();
    g.min = *std::min_element(values.begin(), values.end());
    g.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    g.mean = sum / static_cast<double>(values.size());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<AccuracyRow> ExpertAccuracy(
    const std::vector<CommentSample>& corpus) {
  std::map<std::pair<std::string, std::string>, AccuracyRow> rows;
  for (const auto& s : corpus) {
    for (const auto& [model, ann] : s.annotations) {
      if (!ann.label) continue;
      AccuracyRow& row = rows[{s.file.language_tag, model}];
      row.language = s.file.language_tag;
      row.model = model;
      switch (*ann.label) {
        case OrdinalLabel::kCorrect: ++row.correct; break;
        case OrdinalLabel::kPartiallyCorrect: ++row.partially_correct; break;
        case OrdinalLabel::kIncorrect: ++row.incorrect; break;
      }
    }
  }
  std::vector<AccuracyRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string RenderAccuracyRow(const AccuracyRow& row) {
  return row.language + "\t" + row.model + "\t" + std::to_string(row.correct) +
         "\t" + std::to_string(row.partially_correct) + "\t" +
         std::to_string(row.incorrect);
}

void WriteTsv(const std::filesystem::path& path,
              const std::vector<std::string>& header,
              const std::vector<std::vector<Cell>>& rows) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "\t" : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "\t" : "") << (row[i] ? clean(*row[i]) : "null");
    }
    out << '\n';
  }
}

Cell FormatNumber(std::optional<double> value) {
  if (!value) return std::nullopt;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", *value);
  return std::string(buf);
}

RecordKind DetectRecordKind(const json& record) {
  if (!record.is_object()) return RecordKind::kUnknown;
  if (record.contains("prefix") && record.contains("ground_truth")) {
    return RecordKind::kCorpus;
  }
  if (record.contains("status") && record.contains("strategy")) {
    return RecordKind::kOutcomes;
  }
  if (record.contains("metric") && record.contains("value")) {
    return RecordKind::kScores;
  }
  if (record.contains("label") && record.contains("model") &&
      record.contains("system")) {
    return RecordKind::kPredictedLabels;
  }
  return RecordKind::kUnknown;
}

}  // namespace commenteval
