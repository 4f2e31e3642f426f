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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "commenteval/classical_metrics.h"
#include "commenteval/comment_syntax.h"
#include "commenteval/corpus.h"

namespace commenteval {
namespace {

const char* kCandidate =
    "returns the number of items currently waiting in the queue without "
    "blocking the caller";
const char* kReference =
    "return how many items are waiting in the queue; never blocks the caller "
    "thread";

void BM_Bleu(benchmark::State& state) {
  const auto c = TokenizeForMetric(kCandidate, "en");
  const auto r = TokenizeForMetric(kReference, "en");
  for (auto _ : state) benchmark::DoNotOptimize(Bleu(c, {r}));
}
BENCHMARK(BM_Bleu);

void BM_RougeL(benchmark::State& state) {
  const auto c = TokenizeForMetric(kCandidate, "en");
  const auto r = TokenizeForMetric(kReference, "en");
  for (auto _ : state) benchmark::DoNotOptimize(RougeL(c, r));
}
BENCHMARK(BM_RougeL);

void BM_Meteor(benchmark::State& state) {
  const auto c = TokenizeForMetric(kCandidate, "en");
  const auto r = TokenizeForMetric(kReference, "en");
  for (auto _ : state) benchmark::DoNotOptimize(Meteor(c, r));
}
BENCHMARK(BM_Meteor);

void BM_TokenizeChinese(benchmark::State& state) {
  const std::string text = "返回队列中当前等待的元素数量，不会阻塞调用者";
  for (auto _ : state) benchmark::DoNotOptimize(TokenizeForMetric(text, "zh"));
}
BENCHMARK(BM_TokenizeChinese);

void BM_ExtractComments(benchmark::State& state) {
  const SyntaxTable syntax = SyntaxTable::LoadDefault();
  SourceFile file;
  file.id = "bench.py";
  file.pl_tag = "python";
  std::string& source = file.content;
  for (int i = 0; i < state.range(0); ++i) {
    source += "# compute the running total for entry " + std::to_string(i) +
              "\ntotal += values[" + std::to_string(i) +
              "]  # note \"quoted # text\"\ns = '# not a comment'\n";
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractComments(file, syntax));
  }
  state.SetBytesProcessed(state.iterations() * source.size());
}
BENCHMARK(BM_ExtractComments)->Arg(10)->Arg(1000);

}  // namespace
}  // namespace commenteval
