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

#include "commenteval/corpus.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "commenteval/error.h"

namespace commenteval {

std::string_view CommentSample::prefix() const {
  return std::string_view(file.content).substr(0, span.byte_start);
}

std::string_view CommentSample::suffix() const {
  return std::string_view(file.content).substr(span.byte_end);
}

CommentSample MakeSample(std::string id, SourceFile file, CommentSpan span) {
  if (span.byte_start >= span.byte_end ||
      span.byte_end > file.content.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "span [" + std::to_string(span.byte_start) + ", " +
                    std::to_string(span.byte_end) + ") is outside file " +
                    file.id);
  }
  const std::string_view slice = std::string_view(file.content)
                                     .substr(span.byte_start,
                                             span.byte_end - span.byte_start);
  if (slice != span.text) {
    throw Error(ErrorKind::kInvalidArgument,
                "span text does not match file content of " + file.id);
  }
  CommentSample sample;
  sample.id = std::move(id);
  sample.ground_truth = span.text;
  sample.span = std::move(span);
  sample.file = std::move(file);
  return sample;
}

const char* DropReasonName(DropReason reason) {
  switch (reason) {
    case DropReason::kNone: return "none";
    case DropReason::kTooShort: return "too_short";
    case DropReason::kBudgetExceeded: return "budget_exceeded";
    case DropReason::kTokenizationError: return "tokenization_error";
  }
  return "none";
}

CorpusStats ComputeLengthStats(const std::vector<CommentSample>& pool,
                               const std::vector<const Tokenizer*>& tokenizers) {
  CorpusStats stats;
  for (const Tokenizer* tok : tokenizers) {
    std::vector<double> lengths;
    lengths.reserve(pool.size());
    for (const auto& sample : pool) {
      try {
        lengths.push_back(
            static_cast<double>(tok->Tokenize(sample.ground_truth).size()));
      } catch (const std::exception&) {
        // Samples the tokenizer rejects do not contribute.
      }
    }
    LengthStats s;
    s.count = lengths.size();
    if (!lengths.empty()) {
      double sum = 0.0;
      for (double v : lengths) sum += v;
      s.mean = sum / static_cast<double>(lengths.size());
      double sq = 0.0;
      for (double v : lengths) sq += (v - s.mean) * (v - s.mean);
      s.stddev = std::sqrt(sq / static_cast<double>(lengths.size()));
    }
    stats[tok->name()] = s;
  }
  return stats;
}

FilterDecision FilterSample(const CommentSample& sample,
                            const std::vector<const Tokenizer*>& tokenizers,
                            const CorpusStats& stats,
                            const FilterOptions& options) {
  if (tokenizers.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no tokenizers given");
  }
  struct Counts {
    std::size_t comment = 0;
    std::size_t context = 0;
  };
  std::vector<Counts> counts;
  counts.reserve(tokenizers.size());
  for (const Tokenizer* tok : tokenizers) {
    try {
      Counts c;
      c.comment = tok->Tokenize(sample.ground_truth).size();
      c.context = tok->Tokenize(sample.prefix()).size() +
                  tok->Tokenize(sample.suffix()).size();
      counts.push_back(c);
    } catch (const std::exception& e) {
      return {false, DropReason::kTokenizationError,
              tok->name() + ": " + e.what()};
    }
  }

  const bool short_everywhere =
      std::all_of(counts.begin(), counts.end(), [&](const Counts& c) {
        return c.comment < options.min_comment_tokens;
      });
  if (short_everywhere) {
    return {false, DropReason::kTooShort,
            "fewer than " + std::to_string(options.min_comment_tokens) +
                " tokens under every tokenizer"};
  }

  for (std::size_t i = 0; i < tokenizers.size(); ++i) {
    const auto it = stats.find(tokenizers[i]->name());
    if (it == stats.end()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "no length statistics for tokenizer " +
                      tokenizers[i]->name());
    }
    const double budget = static_cast<double>(counts[i].context) +
                          it->second.mean +
                          options.sigma_budget * it->second.stddev;
    if (budget > static_cast<double>(options.max_context)) {
      return {false, DropReason::kBudgetExceeded,
              tokenizers[i]->name() + ": " + std::to_string(budget) + " > " +
                  std::to_string(options.max_context)};
    }
  }
  return {};
}

std::vector<FilterDecision> FilterPool(
    const std::vector<CommentSample>& pool,
    const std::vector<const Tokenizer*>& tokenizers,
    const FilterOptions& options) {
  std::map<std::string, std::vector<CommentSample>> by_language;
  for (const auto& s : pool) by_language[s.file.language_tag].push_back(s);
  std::map<std::string, CorpusStats> stats;
  for (const auto& [lang, samples] : by_language) {
    stats[lang] = ComputeLengthStats(samples, tokenizers);
  }
  std::vector<FilterDecision> out;
  out.reserve(pool.size());
  for (const auto& s : pool) {
    out.push_back(
        FilterSample(s, tokenizers, stats.at(s.file.language_tag), options));
  }
  return out;
}

std::string FimPrompt::Render() const {
  return sentinels.prefix + prefix + sentinels.suffix + suffix +
         sentinels.middle + prime;
}

FimPrompt BuildFimPrompt(const CommentSample& sample,
                         std::size_t prime_token_count,
                         const Tokenizer& tokenizer,
                         const SentinelNames& sentinels) {
  FimPrompt prompt;
  prompt.prefix = std::string(sample.prefix());
  prompt.suffix = std::string(sample.suffix());
  prompt.sentinels = sentinels;
  if (prime_token_count > 0) {
    const auto tokens = tokenizer.Tokenize(sample.ground_truth);
    if (prime_token_count > tokens.size()) {
      throw Error(ErrorKind::kPrimeTooLong,
                  "sample " + sample.id + " has " +
                      std::to_string(tokens.size()) +
                      " ground-truth tokens, prime needs " +
                      std::to_string(prime_token_count));
    }
    prompt.prime =
        sample.ground_truth.substr(0, tokens[prime_token_count - 1].end);
  }
  return prompt;
}

}  // namespace commenteval
