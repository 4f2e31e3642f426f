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

#ifndef COMMENTEVAL_CALIBRATION_H_
#define COMMENTEVAL_CALIBRATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/labels.h"

namespace commenteval {

// ---------------------------------------------------------------------------
// Kernel density estimation

enum class BandwidthRule { kSilverman, kScott, kFixed };

const char* BandwidthRuleName(BandwidthRule rule);
std::optional<BandwidthRule> ParseBandwidthRule(std::string_view text);

struct BandwidthOptions {
  BandwidthRule rule = BandwidthRule::kSilverman;
  double fixed = 0.0;  // used by kFixed
};

// Gaussian KDE scaled by a class prior.
struct DensityModel {
  std::vector<double> points;
  double bandwidth = 0.0;
  double prior = 1.0;
  BandwidthRule rule = BandwidthRule::kSilverman;
  // Set when the rule produced no usable bandwidth (all points equal) and a
  // fallback was used.
  bool degenerate = false;

  double UnweightedDensity(double x) const;
  double Density(double x) const { return prior * UnweightedDensity(x); }
};

// Throws Error(kInsufficientSupport) for fewer than two scores.
DensityModel FitKde(const std::vector<double>& scores, double prior,
                    const BandwidthOptions& bandwidth = {});

// Silverman: 0.9 * min(sd, IQR / 1.34) * n^(-1/5), falling back to sd when
// the IQR is zero. Scott: 1.06 * sd * n^(-1/5). Returns 0 when the scores
// have no spread.
double SelectBandwidth(const std::vector<double>& scores, BandwidthRule rule);

// ---------------------------------------------------------------------------
// Label regions

struct ClassModel {
  int label = 0;  // ordinal: ties go to the smaller value
  DensityModel density;
};

struct RegionBoundary {
  double score = 0.0;
  int left = 0;   // winner just below
  int right = 0;  // winner just above
};

struct LabelRegions {
  std::vector<ClassModel> classes;
  std::vector<double> grid;
  std::vector<int> winners;  // per grid point
  std::vector<RegionBoundary> boundaries;  // increasing

  // Argmax of prior-weighted density at x, ties to the lower label.
  int Winner(double x) const;
  // Region lookup; a score exactly on a boundary takes the lower label and
  // scores beyond the grid fall into the end regions.
  int Classify(double score) const;
};

inline constexpr std::size_t kDefaultGridResolution = 1024;
inline constexpr std::size_t kMinGridResolution = 256;

// Grid spans [min - 3h, max + 3h] of the pooled points, h the largest
// bandwidth. Boundaries are refined between grid points by bisection.
LabelRegions DeriveRegions(std::vector<ClassModel> classes,
                           std::size_t grid_resolution = kDefaultGridResolution);

OrdinalLabel Classify(double score, const LabelRegions& regions);

struct CalibrationOptions {
  BandwidthOptions bandwidth;
  std::size_t grid_resolution = kDefaultGridResolution;
};

// Fits one KDE per label present, weighted by empirical frequency.
LabelRegions Calibrate(const std::vector<double>& scores,
                       const std::vector<int>& labels,
                       const CalibrationOptions& options = {});

nlohmann::json RegionsToJson(const LabelRegions& regions);
// Rebuilds the densities and grid from the stored points and bandwidths.
LabelRegions RegionsFromJson(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// Agreement

enum class KappaWeighting { kQuadratic, kLinear, kNone };

const char* KappaWeightingName(KappaWeighting weighting);
std::optional<KappaWeighting> ParseKappaWeighting(std::string_view text);

struct KappaResult {
  double kappa = 0.0;
  // Both raters used one identical category; kappa is reported as 1.
  bool degenerate = false;
  std::size_t n = 0;
};

// Labels are integers in [0, categories).
KappaResult WeightedKappa(const std::vector<int>& a, const std::vector<int>& b,
                          KappaWeighting weighting = KappaWeighting::kQuadratic,
                          int categories = kOrdinalLabelCount);
KappaResult WeightedKappa(const std::vector<OrdinalLabel>& a,
                          const std::vector<OrdinalLabel>& b,
                          KappaWeighting weighting = KappaWeighting::kQuadratic);

struct Confusion {
  int categories = 0;
  // counts[human][predicted]
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::vector<double>> row_normalized;
  std::vector<std::vector<double>> column_normalized;
  std::vector<bool> empty_rows;
  std::vector<bool> empty_columns;
};

Confusion ConfusionMatrix(const std::vector<int>& human,
                          const std::vector<int>& predicted,
                          int categories = kOrdinalLabelCount);

// ---------------------------------------------------------------------------
// Noise detection

inline constexpr int kNoiseLabel = 0;
inline constexpr int kGenuineLabel = 1;

struct NoiseF1 {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  bool degenerate = false;  // every score identical
  LabelRegions regions;
};

// Two-class KDE regions with empirical priors; noise is the positive class.
NoiseF1 BinaryNoiseF1(const std::vector<double>& genuine_scores,
                      const std::vector<double>& noise_scores,
                      const CalibrationOptions& options = {});

}  // namespace commenteval

#endif  // COMMENTEVAL_CALIBRATION_H_
