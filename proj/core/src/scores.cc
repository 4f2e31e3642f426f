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

#include "commenteval/scores.h"

#include "commenteval/classical_metrics.h"
#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

namespace {

json Optional(const std::optional<double>& v) {
  return v ? json(*v) : json();
}

std::optional<double> ReadOptional(const json& record, const char* key) {
  if (!record.contains(key) || record[key].is_null()) return std::nullopt;
  return record[key].get<double>();
}

}  // namespace

json ScoreToJson(const MetricScore& score) {
  json out;
  out["id"] = score.id;
  out["model"] = score.model;
  out["language"] = score.language;
  out["metric"] = score.metric;
  out["setting"] = score.setting;
  out["backend"] = score.backend;
  out["value"] = Optional(score.value);
  out["precision"] = Optional(score.precision);
  out["recall"] = Optional(score.recall);
  out["reason"] = score.reason;
  out["params"] = score.params;
  out["scheme"] = score.scheme;
  return out;
}

MetricScore ScoreFromJson(const json& record) {
  try {
    MetricScore score;
    score.id = record.at("id").get<std::string>();
    score.model = record.at("model").get<std::string>();
    score.language = record.value("language", std::string());
    score.metric = record.at("metric").get<std::string>();
    score.setting = record.value("setting", std::string());
    score.backend = record.value("backend", std::string());
    score.value = ReadOptional(record, "value");
    score.precision = ReadOptional(record, "precision");
    score.recall = ReadOptional(record, "recall");
    score.reason = record.value("reason", std::string());
    score.params = record.value("params", json::object());
    score.scheme = record.value("scheme", std::string());
    return score;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema,
                std::string("malformed score record: ") + e.what());
  }
}

MetricScore ScoreClassical(const CommentSample& sample,
                           const std::string& model, std::string_view metric) {
  auto it = sample.predictions.find(model);
  if (it == sample.predictions.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sample " + sample.id + " has no prediction from " + model);
  }
  MetricScore score;
  score.id = sample.id;
  score.model = model;
  score.language = sample.file.language_tag;
  score.metric = std::string(metric);
  const TokenScheme scheme = SchemeForLanguage(score.language);
  score.scheme = TokenSchemeName(scheme);
  const TokenizedText cand = TokenizeForMetric(it->second, scheme);
  const TokenizedText ref = TokenizeForMetric(sample.ground_truth, scheme);
  MetricWarnings warnings;
  if (metric == kBleu) {
    const BleuOptions options;
    score.value = Bleu(cand, {ref}, options, &warnings);
    score.params = {{"max_n", options.max_n},
                    {"smoothing", options.smoothing == BleuSmoothing::kAddOne
                                      ? "add_one"
                                      : "none"}};
  } else if (metric == kRougeL) {
    const RougeLScore r = RougeL(cand, ref, &warnings);
    score.value = r.f1;
    score.precision = r.precision;
    score.recall = r.recall;
  } else if (metric == kMeteor) {
    const MeteorParams params;
    const MeteorScore m = Meteor(cand, ref, {}, params);
    score.value = m.score;
    score.precision = m.precision;
    score.recall = m.recall;
    score.params = {{"alpha", params.alpha},
                    {"beta", params.beta},
                    {"gamma", params.gamma},
                    {"stages", {"exact"}}};
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown metric '" + std::string(metric) + "'");
  }
  for (const auto& w : warnings) {
    if (!score.reason.empty()) score.reason += "; ";
    score.reason += w;
  }
  return score;
}

}  // namespace commenteval
