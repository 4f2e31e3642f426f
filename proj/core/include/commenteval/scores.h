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

#ifndef COMMENTEVAL_SCORES_H_
#define COMMENTEVAL_SCORES_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "commenteval/corpus.h"

namespace commenteval {

// One metric value for one (sample, model) pair. A null value marks an
// unscorable pair; |reason| says why.
struct MetricScore {
  std::string id;
  std::string model;
  std::string language;
  std::string metric;
  std::string setting;  // context setting, empty for classical metrics
  std::string backend;
  std::optional<double> value;
  std::optional<double> precision;
  std::optional<double> recall;
  std::string reason;
  nlohmann::json params = nlohmann::json::object();
  std::string scheme;  // tokenization scheme

  bool operator==(const MetricScore&) const = default;
};

nlohmann::json ScoreToJson(const MetricScore& score);
MetricScore ScoreFromJson(const nlohmann::json& record);

// Metric names accepted by ScoreClassical.
inline constexpr std::string_view kBleu = "bleu";
inline constexpr std::string_view kRougeL = "rouge-l";
inline constexpr std::string_view kMeteor = "meteor";

// Scores the prediction of |model| against the ground truth.
MetricScore ScoreClassical(const CommentSample& sample,
                           const std::string& model, std::string_view metric);

}  // namespace commenteval

#endif  // COMMENTEVAL_SCORES_H_
