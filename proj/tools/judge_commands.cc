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

#include <iostream>

#include <CLI11.hpp>

#include "commands.h"
#include "commenteval/chat_client.h"
#include "commenteval/corpus_io.h"
#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/hash.h"
#include "commenteval/judge.h"
#include "commenteval/report.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"

namespace commenteval::cli {
namespace {

struct JudgeArgs {
  std::string strategy, model, lang, corpus, base_url, api_key_env = "JUDGE_API_KEY",
      out, manifest, stats, taxonomy, translations;
  std::size_t max_in_flight = 4;
  double tokens_per_minute = 0.0;
  bool include_meta = false;
  int max_output_tokens = 10000;
  std::int64_t seed = 42;
};

}  // namespace

void WriteJudgeStats(const std::string& path,
                     const std::vector<TaskOutcome>& outcomes) {
  std::vector<std::vector<Cell>> rows;
  for (const auto& [key, s] : RunStats(outcomes)) {
    rows.push_back({key.judge_model, key.language, key.strategy,
                    std::to_string(s.total), std::to_string(s.ok),
                    std::to_string(s.parse_failures),
                    std::to_string(s.empty_responses),
                    std::to_string(s.transport_failures),
                    FormatNumber(s.parse_failure_rate),
                    FormatNumber(s.empty_response_rate)});
  }
  WriteTsv(path,
           {"judge_model", "language", "strategy", "total", "ok",
            "parse_failures", "empty_responses", "transport_failures",
            "parse_failure_rate", "empty_response_rate"},
           rows);
}

namespace {

void RunJudgeCommand(const JudgeArgs& args) {
  const Taxonomy taxonomy = args.taxonomy.empty()
                                ? Taxonomy::LoadDefault()
                                : Taxonomy::Load(args.taxonomy);
  const TranslationTable translations =
      args.translations.empty() ? TranslationTable::LoadDefault()
                                : TranslationTable::Load(args.translations);
  if (!translations.HasLanguage(args.lang)) {
    throw Error(ErrorKind::kUnsupportedLanguage,
                "no prompt translations for '" + args.lang + "'");
  }
  const ClusterPartition partition =
      BuildClusterPartition(taxonomy, taxonomy.cluster_assignment());
  const Strategy strategy = *ParseStrategy(args.strategy);

  std::vector<JudgeTask> tasks;
  for (auto& sample : ReadCorpus(args.corpus)) {
    if (sample.file.language_tag != args.lang || sample.predictions.empty()) {
      continue;
    }
    JudgeTask task;
    task.task_id = args.model + "/" + args.lang + "/" + args.strategy + "/" +
                   sample.id;
    task.sample = std::move(sample);
    task.strategy = strategy;
    task.language = args.lang;
    task.judge_model = args.model;
    tasks.push_back(std::move(task));
  }

  HttpChatClient client(args.base_url, args.api_key_env);
  RunOptions options;
  options.max_in_flight = args.max_in_flight;
  options.tokens_per_minute = args.tokens_per_minute;
  options.judge.include_meta_in_overall = args.include_meta;
  options.judge.decoding.max_output_tokens = args.max_output_tokens;
  options.judge.decoding.seed = args.seed;
  const auto outcomes =
      RunJudge(tasks, taxonomy, partition, translations, client, options);

  std::vector<nlohmann::json> records;
  for (const auto& o : outcomes) records.push_back(TaskOutcomeToJson(o));
  WriteJsonLines(args.out, records);

  if (!args.manifest.empty()) {
    nlohmann::ordered_json calls = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
      for (const auto& c : o.calls) {
        calls.push_back({{"task_id", o.task_id},
                         {"cluster", c.cluster},
                         {"request_hash", c.request_hash},
                         {"response_hash", c.response_hash},
                         {"attempts", c.attempts},
                         {"status", OutcomeStatusName(c.status)},
                         {"started", c.started},
                         {"finished", c.finished}});
      }
    }
    nlohmann::ordered_json manifest = {
        {"tool_version", ToolVersion()},
        {"judge_model", args.model},
        {"language", args.lang},
        {"strategy", args.strategy},
        {"base_url", args.base_url},
        {"corpus", args.corpus},
        {"corpus_sha256", Sha256Hex(ReadFile(args.corpus))},
        {"taxonomy_version", taxonomy.version()},
        {"decoding",
         {{"temperature", options.judge.decoding.temperature},
          {"seed", options.judge.decoding.seed},
          {"max_output_tokens", options.judge.decoding.max_output_tokens}}},
        {"include_meta_in_overall", args.include_meta},
        {"unparseable_in_kappa", "excluded"},
        {"calls", calls}};
    WriteFile(args.manifest, manifest.dump(2) + "\n");
  }
  if (!args.stats.empty()) WriteJudgeStats(args.stats, outcomes);
  for (const auto& [key, s] : RunStats(outcomes)) {
    std::cerr << key.judge_model << "/" << key.language << "/" << key.strategy
              << ": " << s.ok << " ok of " << s.total << ", "
              << s.transport_failures << " transport failures\n";
  }
}

}  // namespace

void RegisterJudgeCommands(CLI::App& app) {
  auto args = std::make_shared<JudgeArgs>();
  auto* cmd = app.add_subcommand("judge", "Rate predictions with a judge model");
  cmd->add_option("--strategy", args->strategy)
      ->required()
      ->check(CLI::IsMember({"standard", "cot", "rubric", "hierarchical"}));
  cmd->add_option("--model", args->model)->required();
  cmd->add_option("--lang", args->lang)->required();
  cmd->add_option("--corpus", args->corpus)->required();
  cmd->add_option("--base-url", args->base_url,
                  "Chat-completions endpoint base URL")
      ->required();
  cmd->add_option("--api-key-env", args->api_key_env);
  cmd->add_option("--out", args->out, "Outcome records")->required();
  cmd->add_option("--manifest", args->manifest, "Request/response audit log");
  cmd->add_option("--stats", args->stats, "Per-cell failure rates (TSV)");
  cmd->add_option("--taxonomy", args->taxonomy);
  cmd->add_option("--translations", args->translations);
  cmd->add_option("--max-in-flight", args->max_in_flight);
  cmd->add_option("--tokens-per-minute", args->tokens_per_minute,
                  "Request budget, 0 for none");
  cmd->add_option("--max-output-tokens", args->max_output_tokens);
  cmd->add_option("--seed", args->seed);
  cmd->add_flag("--include-meta-overall", args->include_meta,
                "Let the meta cluster lower the hierarchical overall label");
  cmd->callback([args] { RunJudgeCommand(*args); });
}

}  // namespace commenteval::cli
