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
#ifndef COMMENTEVAL_CORPUS_H_
#define COMMENTEVAL_CORPUS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commenteval/labels.h"
#include "commenteval/tokenizer.h"

namespace commenteval {

struct SourceFile {
  std::string id;
  std::string language_tag;  // en, nl, el, pl, zh
  std::string pl_tag;        // programming language, e.g. "python"
  std::string content;
  std::string origin;  // repository URL + path

  bool operator==(const SourceFile&) const = default;
};

enum class CommentSyntaxKind { kLine, kBlock };

// Byte range of a comment body inside SourceFile::content. The range
// excludes delimiters and surrounding whitespace, so text is always
// content.substr(byte_start, byte_end - byte_start).
struct CommentSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::string text;
  CommentSyntaxKind syntax_kind = CommentSyntaxKind::kLine;

  bool operator==(const CommentSpan&) const = default;
};

// Human judgement of one prediction.
struct Annotation {
  std::optional<OrdinalLabel> label;
  std::vector<std::string> error_codes;

  bool operator==(const Annotation&) const = default;
};

struct CommentSample {
  std::string id;
  SourceFile file;
  CommentSpan span;
  std::string ground_truth;
  std::map<std::string, std::string> predictions;  // model -> generated text
  std::map<std::string, Annotation> annotations;   // model -> annotation

  std::string_view prefix() const;
  std::string_view suffix() const;

  bool operator==(const CommentSample&) const = default;
};

// Validates the span against the file and copies its text as ground truth.
CommentSample MakeSample(std::string id, SourceFile file, CommentSpan span);

// ---------------------------------------------------------------------------
// Filtering

struct LengthStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

// Ground-truth token length statistics, one entry per tokenizer name.
using CorpusStats = std::map<std::string, LengthStats>;

CorpusStats ComputeLengthStats(const std::vector<CommentSample>& pool,
                               const std::vector<const Tokenizer*>& tokenizers);

struct FilterOptions {
  std::size_t max_context = 4096;
  std::size_t min_comment_tokens = 10;
  double sigma_budget = 3.0;
};

enum class DropReason { kNone, kTooShort, kBudgetExceeded, kTokenizationError };

const char* DropReasonName(DropReason reason);

struct FilterDecision {
  bool keep = true;
  DropReason reason = DropReason::kNone;
  std::string detail;
};

// Drops comments shorter than min_comment_tokens under every tokenizer, and
// samples whose context plus mean + sigma_budget * stddev comment tokens
// exceed max_context under any tokenizer (each with its own statistics).
FilterDecision FilterSample(const CommentSample& sample,
                            const std::vector<const Tokenizer*>& tokenizers,
                            const CorpusStats& stats,
                            const FilterOptions& options = {});

// Computes statistics per language over the whole pool, then filters each
// sample. Decisions are index-aligned with the pool and independent of its
// order.
std::vector<FilterDecision> FilterPool(
    const std::vector<CommentSample>& pool,
    const std::vector<const Tokenizer*>& tokenizers,
    const FilterOptions& options = {});

// ---------------------------------------------------------------------------
// Fill-in-the-middle prompts

struct SentinelNames {
  std::string prefix = "<fim_prefix>";
  std::string suffix = "<fim_suffix>";
  std::string middle = "<fim_middle>";
};

struct FimPrompt {
  std::string prefix;
  std::string suffix;
  std::string prime;  // leading ground-truth tokens, a true prefix of it
  SentinelNames sentinels;

  // Prefix-suffix-middle order with the prime opening the middle section.
  std::string Render() const;
};

inline constexpr std::size_t kDefaultPrimeTokens = 3;

// Throws Error(kPrimeTooLong) when the ground truth has fewer tokens than
// prime_token_count.
FimPrompt BuildFimPrompt(const CommentSample& sample,
                         std::size_t prime_token_count,
                         const Tokenizer& tokenizer,
                         const SentinelNames& sentinels = {});

}  // namespace commenteval

#endif  // COMMENTEVAL_CORPUS_H_
