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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "commenteval/calibration.h"

namespace commenteval {
namespace {

void BM_WeightedKappa(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> label(0, 2);
  std::vector<int> a(state.range(0)), b(state.range(0));
  for (auto& x : a) x = label(rng);
  for (auto& x : b) x = label(rng);
  for (auto _ : state) benchmark::DoNotOptimize(WeightedKappa(a, b));
}
BENCHMARK(BM_WeightedKappa)->Arg(50)->Arg(10000);

void BM_Calibrate(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int label = 0; label < 3; ++label) {
    std::normal_distribution<double> g(0.2 + 0.3 * label, 0.08);
    for (int i = 0; i < state.range(0); ++i) {
      scores.push_back(g(rng));
      labels.push_back(label);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(Calibrate(scores, labels));
}
BENCHMARK(BM_Calibrate)->Arg(100)->Arg(500);

void BM_Classify(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> a(0.3, 0.1), b(0.7, 0.1);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 300; ++i) {
    scores.push_back(a(rng));
    labels.push_back(0);
    scores.push_back(b(rng));
    labels.push_back(1);
  }
  const auto regions = Calibrate(scores, labels);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regions.Classify(x));
    x = x > 1.0 ? 0.0 : x + 0.001;
  }
}
BENCHMARK(BM_Classify);

}  // namespace
}  // namespace commenteval
