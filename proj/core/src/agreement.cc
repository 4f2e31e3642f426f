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

#include <cstdint>
#include <cstdlib>

#include "commenteval/calibration.h"
#include "commenteval/error.h"

namespace commenteval {

const char* KappaWeightingName(KappaWeighting weighting) {
  switch (weighting) {
    case KappaWeighting::kQuadratic: return "quadratic";
    case KappaWeighting::kLinear: return "linear";
    case KappaWeighting::kNone: return "none";
  }
  return "quadratic";
}

std::optional<KappaWeighting> ParseKappaWeighting(std::string_view text) {
  for (auto w : {KappaWeighting::kQuadratic, KappaWeighting::kLinear,
                 KappaWeighting::kNone}) {
    if (text == KappaWeightingName(w)) return w;
  }
  return std::nullopt;
}

namespace {

void CheckLabels(const std::vector<int>& labels, int categories) {
  for (int v : labels) {
    if (v < 0 || v >= categories) {
      throw Error(ErrorKind::kInvalidArgument,
                  "label " + std::to_string(v) + " outside [0, " +
                      std::to_string(categories) + ")");
    }
  }
}

// Integer disagreement weight; the (k-1)^2 or (k-1) normalization cancels
// in the kappa ratio.
std::int64_t Weight(int i, int j, KappaWeighting weighting) {
  const std::int64_t d = std::abs(i - j);
  switch (weighting) {
    case KappaWeighting::kQuadratic: return d * d;
    case KappaWeighting::kLinear: return d;
    case KappaWeighting::kNone: return d == 0 ? 0 : 1;
  }
  return d * d;
}

}  // namespace

KappaResult WeightedKappa(const std::vector<int>& a, const std::vector<int>& b,
                          KappaWeighting weighting, int categories) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidArgument, "label lists differ in length");
  }
  if (a.empty()) {
    throw Error(ErrorKind::kEmptyInput, "kappa needs at least one pair");
  }
  if (categories < 2) {
    throw Error(ErrorKind::kInvalidArgument, "kappa needs >= 2 categories");
  }
  CheckLabels(a, categories);
  CheckLabels(b, categories);
  const std::size_t k = static_cast<std::size_t>(categories);
  std::vector<std::int64_t> observed(k * k, 0);
  std::vector<std::int64_t> rows(k, 0);
  std::vector<std::int64_t> cols(k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++observed[a[i] * k + b[i]];
    ++rows[a[i]];
    ++cols[b[i]];
  }
  // kappa = 1 - (n * sum w O) / (sum w r c), all sums exact in integers.
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  std::int64_t obs = 0;
  std::int64_t exp = 0;
  for (int i = 0; i < categories; ++i) {
    for (int j = 0; j < categories; ++j) {
      const std::int64_t w = Weight(i, j, weighting);
      obs += w * observed[i * k + j];
      exp += w * rows[i] * cols[j];
    }
  }
  obs *= n;
  KappaResult result;
  result.n = a.size();
  if (exp == 0) {
    // Zero expected disagreement forces zero observed disagreement.
    result.kappa = 1.0;
    result.degenerate = true;
    return result;
  }
  result.kappa = static_cast<double>(exp - obs) / static_cast<double>(exp);
  return result;
}

KappaResult WeightedKappa(const std::vector<OrdinalLabel>& a,
                          const std::vector<OrdinalLabel>& b,
                          KappaWeighting weighting) {
  std::vector<int> ia, ib;
  ia.reserve(a.size());
  ib.reserve(b.size());
  for (auto l : a) ia.push_back(ToIndex(l));
  for (auto l : b) ib.push_back(ToIndex(l));
  return WeightedKappa(ia, ib, weighting, kOrdinalLabelCount);
}

Confusion ConfusionMatrix(const std::vector<int>& human,
                          const std::vector<int>& predicted, int categories) {
  if (human.size() != predicted.size()) {
    throw Error(ErrorKind::kInvalidArgument, "label lists differ in length");
  }
  CheckLabels(human, categories);
  CheckLabels(predicted, categories);
  const std::size_t k = static_cast<std::size_t>(categories);
  Confusion c;
  c.categories = categories;
  c.counts.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < human.size(); ++i) {
    ++c.counts[human[i]][predicted[i]];
  }
  c.row_normalized.assign(k, std::vector<double>(k, 0.0));
  c.column_normalized.assign(k, std::vector<double>(k, 0.0));
  c.empty_rows.assign(k, false);
  c.empty_columns.assign(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t row = 0, col = 0;
    for (std::size_t j = 0; j < k; ++j) {
      row += c.counts[i][j];
      col += c.counts[j][i];
    }
    c.empty_rows[i] = row == 0;
    c.empty_columns[i] = col == 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (row > 0) c.row_normalized[i][j] = double(c.counts[i][j]) / row;
      if (col > 0) c.column_normalized[j][i] = double(c.counts[j][i]) / col;
    }
  }
  return c;
}

}  // namespace commenteval
