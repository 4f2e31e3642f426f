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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.h"
#include "commenteval/classical_metrics.h"
#include "commenteval/comment_syntax.h"
#include "commenteval/corpus.h"
#include "commenteval/corpus_io.h"
#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/ingest.h"
#include "commenteval/language_id.h"
#include "commenteval/perturbation.h"
#include "commenteval/text.h"

namespace commenteval::cli {
namespace {

std::vector<std::string> ReadLines(const std::string& path) {
  std::istringstream in(ReadFile(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto trimmed = Trim(line);
    if (!trimmed.empty() && trimmed.front() != '#') {
      lines.emplace_back(trimmed);
    }
  }
  return lines;
}

SyntaxTable LoadSyntax(const std::string& path) {
  return path.empty() ? SyntaxTable::LoadDefault() : SyntaxTable::Load(path);
}

std::string DefaultTokenizerFor(const std::string& language) {
  return SchemeForLanguage(language) == TokenScheme::kPerCharacter
             ? "per_character"
             : "whitespace_punct";
}

void RegisterHarvest(CLI::App& app) {
  struct Args {
    std::string lang, words, out, qualifiers, api_base = "https://api.github.com",
        token_env = "GITHUB_TOKEN", syntax;
    std::size_t limit = 100, max_in_flight = 4;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("harvest", "Search a code forge for files");
  cmd->add_option("--lang", args->lang, "Natural-language tag")->required();
  cmd->add_option("--words", args->words, "Keyword file, one per line")
      ->required();
  cmd->add_option("--limit", args->limit, "Files per keyword");
  cmd->add_option("--out", args->out, "Output JSON-lines of files")->required();
  cmd->add_option("--qualifiers", args->qualifiers, "Extra search qualifiers");
  cmd->add_option("--api-base", args->api_base);
  cmd->add_option("--token-env", args->token_env);
  cmd->add_option("--syntax", args->syntax, "Comment syntax table");
  cmd->add_option("--max-in-flight", args->max_in_flight);
  cmd->callback([args] {
    GitHubSearchClient::Options options;
    options.api_base = args->api_base;
    options.token_env = args->token_env;
    options.language_tag = args->lang;
    options.search_qualifiers = args->qualifiers;
    GitHubSearchClient client(options, LoadSyntax(args->syntax));
    IngestOptions ingest;
    ingest.per_word_limit = args->limit;
    ingest.max_in_flight = args->max_in_flight;
    const auto result = IngestKeywords(ReadLines(args->words), client, ingest);
    std::vector<nlohmann::json> records;
    for (const auto& f : result.files) records.push_back(SourceFileToJson(f));
    WriteJsonLines(args->out, records);
    for (const auto& w : result.warnings) {
      std::cerr << "warning: keyword '" << w.keyword << "': " << w.message
                << "\n";
    }
    std::cerr << records.size() << " files\n";
  });
}

void RegisterExtract(CLI::App& app) {
  struct Args {
    std::string files, out, syntax, rejects;
    double min_confidence = kDefaultMinLanguageConfidence;
    std::size_t limit = 0;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("extract", "Extract comments from files");
  cmd->add_option("--files", args->files, "Harvested files")->required();
  cmd->add_option("--out", args->out, "Output corpus")->required();
  cmd->add_option("--syntax", args->syntax, "Comment syntax table");
  cmd->add_option("--min-confidence", args->min_confidence);
  cmd->add_option("--rejects", args->rejects, "Rejected comments");
  cmd->add_option("--limit", args->limit, "Maximum samples, 0 for all");
  cmd->callback([args] {
    const SyntaxTable syntax = LoadSyntax(args->syntax);
    const LanguageDetector detector = MakeHeuristicDetector();
    std::vector<CommentSample> samples;
    std::vector<nlohmann::json> rejects;
    for (const auto& record : ReadJsonLines(args->files)) {
      const SourceFile file = SourceFileFromJson(record);
      for (const auto& span : ExtractComments(file, syntax)) {
        const auto verdict = VerifyLanguage(span.text, detector,
                                            file.language_tag,
                                            args->min_confidence);
        const std::string id =
            file.id + ":" + std::to_string(span.byte_start);
        if (!verdict.accepted) {
          rejects.push_back({{"id", id},
                             {"reason", VerifyReasonName(verdict.reason)},
                             {"detected", verdict.guess.tag},
                             {"confidence", verdict.guess.confidence},
                             {"text", span.text}});
          continue;
        }
        samples.push_back(MakeSample(id, file, span));
      }
    }
    std::sort(samples.begin(), samples.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    if (args->limit > 0 && samples.size() > args->limit) {
      samples.resize(args->limit);
    }
    WriteCorpus(args->out, samples);
    if (!args->rejects.empty()) WriteJsonLines(args->rejects, rejects);
    std::cerr << samples.size() << " samples, " << rejects.size()
              << " rejected\n";
  });
}

void RegisterFilter(CLI::App& app) {
  struct Args {
    std::string corpus, out, review_queue, drops;
    std::vector<std::string> tokenizers{"whitespace_punct"};
    FilterOptions options;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("filter", "Drop short or oversized samples");
  cmd->add_option("--corpus", args->corpus)->required();
  cmd->add_option("--out", args->out)->required();
  cmd->add_option("--max-context", args->options.max_context);
  cmd->add_option("--min-tokens", args->options.min_comment_tokens);
  cmd->add_option("--sigma", args->options.sigma_budget);
  cmd->add_option("--tokenizer,--backend", args->tokenizers,
                  "Local tokenizer name or backend=<url>; repeatable");
  cmd->add_option("--review-queue", args->review_queue,
                  "Kept samples awaiting manual review");
  cmd->add_option("--drops", args->drops, "Dropped samples with reasons");
  cmd->callback([args] {
    const auto pool = ReadCorpus(args->corpus);
    TokenizerSet tokenizers(args->tokenizers);
    const auto decisions =
        FilterPool(pool, tokenizers.pointers(), args->options);
    std::vector<CommentSample> kept;
    std::vector<nlohmann::json> drops, queue;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (decisions[i].keep) {
        kept.push_back(pool[i]);
        queue.push_back({{"id", pool[i].id},
                         {"language", pool[i].file.language_tag},
                         {"ground_truth", pool[i].ground_truth},
                         {"reviewed", false}});
      } else {
        drops.push_back({{"id", pool[i].id},
                         {"reason", DropReasonName(decisions[i].reason)},
                         {"detail", decisions[i].detail}});
      }
    }
    WriteCorpus(args->out, kept);
    if (!args->drops.empty()) WriteJsonLines(args->drops, drops);
    if (!args->review_queue.empty()) WriteJsonLines(args->review_queue, queue);
    std::cerr << kept.size() << " kept, " << drops.size() << " dropped\n";
  });
}

void RegisterFim(CLI::App& app) {
  struct Args {
    std::string corpus, out, skipped, tokenizer = "whitespace";
    std::size_t prime = kDefaultPrimeTokens;
    std::vector<std::string> sentinels;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("fim", "Render fill-in-the-middle prompts");
  cmd->add_option("--corpus", args->corpus)->required();
  cmd->add_option("--out", args->out)->required();
  cmd->add_option("--prime", args->prime, "Ground-truth tokens in the prime");
  cmd->add_option("--skipped", args->skipped,
                  "JSONL of samples shorter than the prime");
  cmd->add_option("--tokenizer", args->tokenizer,
                  "Tokenizer defining prime tokens, or backend=<url>");
  cmd->add_option("--sentinels", args->sentinels,
                  "Prefix, suffix and middle sentinel strings")
      ->expected(3)
      ->delimiter(',');
  cmd->callback([args] {
    TokenizerSet tokenizers({args->tokenizer});
    SentinelNames names;
    if (args->sentinels.size() == 3) {
      names = {args->sentinels[0], args->sentinels[1], args->sentinels[2]};
    }
    std::vector<nlohmann::json> records;
    std::vector<nlohmann::json> skipped;
    for (const auto& sample : ReadCorpus(args->corpus)) {
      try {
        const FimPrompt prompt =
            BuildFimPrompt(sample, args->prime, tokenizers.front(), names);
        records.push_back({{"id", sample.id},
                           {"prime", prompt.prime},
                           {"prompt", prompt.Render()}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kPrimeTooLong) throw;
        skipped.push_back({{"id", sample.id},
                           {"reason", ErrorKindName(e.kind())},
                           {"detail", e.what()}});
      }
    }
    WriteJsonLines(args->out, records);
    if (!args->skipped.empty()) WriteJsonLines(args->skipped, skipped);
    std::cerr << records.size() << " prompts, " << skipped.size()
              << " skipped (prime_too_long)\n";
  });
}

void RegisterPerturb(CLI::App& app) {
  struct Args {
    std::string kind, corpus, out, vocab, tokenizer;
    std::uint64_t seed = 42;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("perturb", "Generate noise predictions");
  cmd->add_option("--kind", args->kind)
      ->required()
      ->check(CLI::IsMember({"uniform", "targeted"}));
  cmd->add_option("--corpus", args->corpus)->required();
  cmd->add_option("--seed", args->seed);
  cmd->add_option("--out", args->out)->required();
  cmd->add_option("--vocab", args->vocab,
                  "Vocabulary file for uniform noise (lines or tokenizer.json)");
  cmd->add_option("--tokenizer", args->tokenizer,
                  "Token scheme; defaults to the metric scheme per language");
  cmd->callback([args] {
    const NoiseKind kind = *ParseNoiseKind(args->kind);
    std::vector<std::string> vocabulary;
    if (kind == NoiseKind::kUniform) {
      if (args->vocab.empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "uniform noise needs --vocab");
      }
      vocabulary = LoadVocabulary(args->vocab);
    }
    const std::string model = NoiseModelName(kind);
    std::vector<CommentSample> out;
    for (auto sample : ReadCorpus(args->corpus)) {
      const std::string name = args->tokenizer.empty()
                                   ? DefaultTokenizerFor(sample.file.language_tag)
                                   : args->tokenizer;
      const auto tokenizer = MakeLocalTokenizer(name);
      const auto noise = PerturbSample(sample, kind, args->seed, *tokenizer,
                                       &vocabulary);
      sample.predictions = {{model, noise.text}};
      sample.annotations.clear();
      out.push_back(std::move(sample));
    }
    WriteCorpus(args->out, out);
    nlohmann::ordered_json meta = {
        {"kind", args->kind},
        {"model", model},
        {"seed", args->seed},
        {"per_sample_seed", "sha256(seed:id)[0:16]"},
        {"length", "ground-truth token count"},
        {"sampling", kind == NoiseKind::kTargeted
                         ? "with replacement from prefix+suffix token multiset"
                         : "uniform with replacement over vocabulary"},
        {"context_excludes_comment", true},
        {"vocab", args->vocab},
        {"vocab_size", vocabulary.size()},
        {"tokenizer", args->tokenizer.empty() ? "per-language default"
                                              : args->tokenizer}};
    WriteFile(args->out + ".meta.json", meta.dump(2) + "\n");
  });
}

}  // namespace

void RegisterCorpusCommands(CLI::App& app) {
  RegisterHarvest(app);
  RegisterExtract(app);
  RegisterFilter(app);
  RegisterFim(app);
  RegisterPerturb(app);
}

}  // namespace commenteval::cli
