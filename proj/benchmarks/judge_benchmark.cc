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

#include "benchmark/benchmark.h"
#include "commenteval/judge.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"

namespace commenteval {
namespace {

const char* kReply = R"(Here is my assessment.
```json
{"predictions": [
  {"id": "P1", "reasoning": "The comment names the wrong return type.",
   "errors": [{"code": "SE-TS", "confidence": 0.8, "justification": "int vs list"}],
   "overall": "partially_correct"},
  {"id": "P2", "errors": [], "overall": "correct"}
]}
```)";

void BM_ParseResponse(benchmark::State& state) {
  const auto taxonomy = Taxonomy::LoadDefault();
  const auto translations = TranslationTable::LoadDefault();
  ParseOptions options{Strategy::kCot, {"a", "b"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ParseResponse(kReply, "en", translations, taxonomy, options));
  }
}
BENCHMARK(BM_ParseResponse);

void BM_BuildPrompt(benchmark::State& state) {
  const auto taxonomy = Taxonomy::LoadDefault();
  const auto translations = TranslationTable::LoadDefault();
  JudgeTask task;
  task.sample.id = "s";
  task.sample.file.content = "def f(q):\n    # size of the queue\n    return len(q)\n";
  const std::string comment = "size of the queue";
  const std::size_t at = task.sample.file.content.find(comment);
  task.sample = MakeSample(
      "s", task.sample.file, {at, at + comment.size(), comment,
                              CommentSyntaxKind::kLine});
  task.sample.predictions = {{"a", "queue length"}, {"b", "returns size"}};
  task.language = "en";
  task.strategy = static_cast<Strategy>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildPrompt(task, taxonomy, translations));
  }
}
BENCHMARK(BM_BuildPrompt)->DenseRange(0, 2);

}  // namespace
}  // namespace commenteval

BENCHMARK_MAIN();
