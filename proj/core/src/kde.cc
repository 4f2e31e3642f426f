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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "commenteval/calibration.h"
#include "commenteval/error.h"

namespace commenteval {

const char* BandwidthRuleName(BandwidthRule rule) {
  switch (rule) {
    case BandwidthRule::kSilverman: return "silverman";
    case BandwidthRule::kScott: return "scott";
    case BandwidthRule::kFixed: return "fixed";
  }
  return "silverman";
}

std::optional<BandwidthRule> ParseBandwidthRule(std::string_view text) {
  for (auto r :
       {BandwidthRule::kSilverman, BandwidthRule::kScott, BandwidthRule::kFixed}) {
    if (text == BandwidthRuleName(r)) return r;
  }
  return std::nullopt;
}

namespace {

// Linear interpolation between order statistics.
double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double SelectBandwidth(const std::vector<double>& scores, BandwidthRule rule) {
  const double n = static_cast<double>(scores.size());
  if (scores.size() < 2) return 0.0;
  // Checked exactly: the rounded mean of equal values can differ from them.
  if (std::all_of(scores.begin(), scores.end(),
                  [&](double s) { return s == scores.front(); })) {
    return 0.0;
  }
  double mean = 0.0;
  for (double s : scores) mean += s;
  mean /= n;
  double ss = 0.0;
  for (double s : scores) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (sd == 0.0) return 0.0;
  if (rule == BandwidthRule::kScott) return 1.06 * sd * std::pow(n, -0.2);
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  const double iqr = Quantile(sorted, 0.75) - Quantile(sorted, 0.25);
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  return 0.9 * spread * std::pow(n, -0.2);
}

DensityModel FitKde(const std::vector<double>& scores, double prior,
                    const BandwidthOptions& bandwidth) {
  if (scores.size() < 2) {
    throw Error(ErrorKind::kInsufficientSupport,
                "KDE needs at least 2 scores, got " +
                    std::to_string(scores.size()));
  }
  if (!(prior > 0.0) || prior > 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "prior must be in (0, 1]");
  }
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite score");
    }
  }
  DensityModel model;
  model.points = scores;
  model.prior = prior;
  model.rule = bandwidth.rule;
  if (bandwidth.rule == BandwidthRule::kFixed) {
    if (!(bandwidth.fixed > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "fixed bandwidth must be > 0");
    }
    model.bandwidth = bandwidth.fixed;
  } else {
    model.bandwidth = SelectBandwidth(scores, bandwidth.rule);
  }
  if (!(model.bandwidth > 0.0)) {
    // All scores coincide: keep a narrow kernel so the density peaks there.
    model.bandwidth = 1e-3 * std::max(1.0, std::abs(scores.front()));
    model.degenerate = true;
  }
  return model;
}

double DensityModel::UnweightedDensity(double x) const {
  const double inv_h = 1.0 / bandwidth;
  double sum = 0.0;
  for (double p : points) {
    const double z = (x - p) * inv_h;
    sum += std::exp(-0.5 * z * z);
  }
  return sum * inv_h * std::numbers::inv_sqrtpi / std::numbers::sqrt2 /
         static_cast<double>(points.size());
}

}  // namespace commenteval
