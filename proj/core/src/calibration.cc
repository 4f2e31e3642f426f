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

#include "commenteval/calibration.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "commenteval/error.h"

namespace commenteval {

using nlohmann::json;

int LabelRegions::Winner(double x) const {
  int best_label = 0;
  double best = -1.0;
  for (const auto& c : classes) {
    const double d = c.density.Density(x);
    if (d > best || (d == best && c.label < best_label)) {
      best = d;
      best_label = c.label;
    }
  }
  return best_label;
}

int LabelRegions::Classify(double score) const {
  if (boundaries.empty()) return winners.empty() ? Winner(score) : winners[0];
  for (const auto& b : boundaries) {
    if (score < b.score) return b.left;
    if (score == b.score) return std::min(b.left, b.right);
  }
  return boundaries.back().right;
}

LabelRegions DeriveRegions(std::vector<ClassModel> classes,
                           std::size_t grid_resolution) {
  if (classes.empty()) {
    throw Error(ErrorKind::kInsufficientSupport, "no fitted classes");
  }
  if (grid_resolution < kMinGridResolution) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid resolution must be >= " +
                    std::to_string(kMinGridResolution));
  }
  for (const auto& c : classes) {
    if (c.density.points.size() < 2 || !(c.density.bandwidth > 0.0)) {
      throw Error(ErrorKind::kInsufficientSupport,
                  "class " + std::to_string(c.label) + " is not fitted");
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const ClassModel& a, const ClassModel& b) {
              return a.label < b.label;
            });

  LabelRegions regions;
  regions.classes = std::move(classes);
  double lo = regions.classes[0].density.points[0];
  double hi = lo;
  double h_max = 0.0;
  for (const auto& c : regions.classes) {
    for (double p : c.density.points) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    h_max = std::max(h_max, c.density.bandwidth);
  }
  lo -= 3.0 * h_max;
  hi += 3.0 * h_max;
  regions.grid.resize(grid_resolution);
  regions.winners.resize(grid_resolution);
  const double step = (hi - lo) / static_cast<double>(grid_resolution - 1);
  for (std::size_t i = 0; i < grid_resolution; ++i) {
    regions.grid[i] = i + 1 == grid_resolution ? hi : lo + step * i;
    regions.winners[i] = regions.Winner(regions.grid[i]);
  }
  for (std::size_t i = 0; i + 1 < grid_resolution; ++i) {
    const int left = regions.winners[i];
    const int right = regions.winners[i + 1];
    if (left == right) continue;
    double a = regions.grid[i];
    double b = regions.grid[i + 1];
    for (int iter = 0; iter < 100 && b - a > 0.0; ++iter) {
      const double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;
      if (regions.Winner(mid) == left) {
        a = mid;
      } else {
        b = mid;
      }
    }
    // a and b now bracket the change as tightly as doubles allow. Put the
    // boundary on whichever side the lower label won, so a score exactly on
    // it gets the lower label and still agrees with Winner().
    regions.boundaries.push_back({left < right ? a : b, left, right});
  }
  return regions;
}

OrdinalLabel Classify(double score, const LabelRegions& regions) {
  return static_cast<OrdinalLabel>(regions.Classify(score));
}

LabelRegions Calibrate(const std::vector<double>& scores,
                       const std::vector<int>& labels,
                       const CalibrationOptions& options) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "scores and labels differ in length");
  }
  std::map<int, std::vector<double>> by_label;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    by_label[labels[i]].push_back(scores[i]);
  }
  std::vector<ClassModel> classes;
  for (const auto& [label, values] : by_label) {
    const double prior =
        static_cast<double>(values.size()) / static_cast<double>(scores.size());
    try {
      classes.push_back({label, FitKde(values, prior, options.bandwidth)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInsufficientSupport) throw;
      throw Error(ErrorKind::kInsufficientSupport,
                  "label " + std::to_string(label) + ": " + e.what());
    }
  }
  return DeriveRegions(std::move(classes), options.grid_resolution);
}

json RegionsToJson(const LabelRegions& regions) {
  json doc;
  doc["kernel"] = "gaussian";
  doc["grid"] = {{"min", regions.grid.empty() ? 0.0 : regions.grid.front()},
                 {"max", regions.grid.empty() ? 0.0 : regions.grid.back()},
                 {"resolution", regions.grid.size()}};
  doc["tie_break"] = "lower_label";
  doc["classes"] = json::array();
  for (const auto& c : regions.classes) {
    doc["classes"].push_back({{"label", c.label},
                              {"bandwidth", c.density.bandwidth},
                              {"bandwidth_rule", BandwidthRuleName(c.density.rule)},
                              {"degenerate", c.density.degenerate},
                              {"prior", c.density.prior},
                              {"points", c.density.points}});
  }
  doc["boundaries"] = json::array();
  for (const auto& b : regions.boundaries) {
    doc["boundaries"].push_back(
        {{"score", b.score}, {"left", b.left}, {"right", b.right}});
  }
  return doc;
}

LabelRegions RegionsFromJson(const json& doc) {
  try {
    std::vector<ClassModel> classes;
    for (const auto& node : doc.at("classes")) {
      ClassModel c;
      c.label = node.at("label").get<int>();
      c.density.points = node.at("points").get<std::vector<double>>();
      c.density.bandwidth = node.at("bandwidth").get<double>();
      c.density.prior = node.at("prior").get<double>();
      c.density.degenerate = node.value("degenerate", false);
      c.density.rule =
          ParseBandwidthRule(node.value("bandwidth_rule", std::string("fixed")))
              .value_or(BandwidthRule::kFixed);
      classes.push_back(std::move(c));
    }
    const std::size_t resolution =
        doc.at("grid").value("resolution", kDefaultGridResolution);
    return DeriveRegions(std::move(classes), resolution);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema,
                std::string("malformed regions file: ") + e.what());
  }
}

NoiseF1 BinaryNoiseF1(const std::vector<double>& genuine_scores,
                      const std::vector<double>& noise_scores,
                      const CalibrationOptions& options) {
  if (genuine_scores.empty() || noise_scores.empty()) {
    throw Error(ErrorKind::kInsufficientSupport,
                "noise F1 needs genuine and noise scores");
  }
  std::vector<double> scores = genuine_scores;
  scores.insert(scores.end(), noise_scores.begin(), noise_scores.end());
  std::vector<int> labels(genuine_scores.size(), kGenuineLabel);
  labels.resize(scores.size(), kNoiseLabel);

  NoiseF1 result;
  result.degenerate =
      std::all_of(scores.begin(), scores.end(),
                  [&](double s) { return s == scores.front(); });
  result.regions = Calibrate(scores, labels, options);
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted_noise =
        result.regions.Classify(scores[i]) == kNoiseLabel;
    const bool is_noise = labels[i] == kNoiseLabel;
    if (predicted_noise && is_noise) ++tp;
    if (predicted_noise && !is_noise) ++fp;
    if (!predicted_noise && is_noise) ++fn;
  }
  if (tp > 0) {
    result.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    result.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    result.f1 = 2.0 * result.precision * result.recall /
                (result.precision + result.recall);
  }
  return result;
}

}  // namespace commenteval
