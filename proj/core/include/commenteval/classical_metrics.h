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

#ifndef COMMENTEVAL_CLASSICAL_METRICS_H_
#define COMMENTEVAL_CLASSICAL_METRICS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace commenteval {

enum class TokenScheme { kWhitespacePunct, kPerCharacter };

const char* TokenSchemeName(TokenScheme scheme);

// Scheme used for a natural language: per_character for zh, otherwise
// whitespace_punct.
TokenScheme SchemeForLanguage(std::string_view language_tag);

struct TokenizedText {
  std::vector<std::string> tokens;
  TokenScheme scheme = TokenScheme::kWhitespacePunct;
};

// Splits under |scheme| and case-folds every token.
TokenizedText TokenizeForMetric(std::string_view text, TokenScheme scheme);
TokenizedText TokenizeForMetric(std::string_view text,
                                std::string_view language_tag);

// Warnings for degenerate inputs are appended here when non-null.
using MetricWarnings = std::vector<std::string>;

enum class BleuSmoothing { kNone, kAddOne };

struct BleuOptions {
  int max_n = 4;
  // kAddOne replaces a zero n-gram precision for n >= 2 by
  // (matches + 1) / (total + 1).
  BleuSmoothing smoothing = BleuSmoothing::kAddOne;
};

struct BleuScore {
  double score = 0.0;
  std::vector<double> precisions;  // per n, after smoothing
  double brevity_penalty = 0.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;  // closest reference length
};

BleuScore BleuDetailed(const TokenizedText& candidate,
                       const std::vector<TokenizedText>& references,
                       const BleuOptions& options = {},
                       MetricWarnings* warnings = nullptr);
double Bleu(const TokenizedText& candidate,
            const std::vector<TokenizedText>& references,
            const BleuOptions& options = {},
            MetricWarnings* warnings = nullptr);

struct RougeLScore {
  std::size_t lcs = 0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

std::size_t LongestCommonSubsequence(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

RougeLScore RougeL(const TokenizedText& candidate,
                   const TokenizedText& reference,
                   MetricWarnings* warnings = nullptr);

struct MeteorParams {
  double alpha = 0.9;  // Fmean = P R / (alpha P + (1 - alpha) R)
  double beta = 3.0;
  double gamma = 0.5;
};

// Matching stages, applied in order to the still-unaligned tokens.
struct MeteorMatchers {
  bool exact = true;
  std::function<std::string(std::string_view)> stemmer;
  std::function<bool(std::string_view, std::string_view)> synonym;
};

struct MeteorScore {
  std::size_t matches = 0;
  std::size_t chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double score = 0.0;
};

MeteorScore Meteor(const TokenizedText& candidate,
                   const TokenizedText& reference,
                   const MeteorMatchers& matchers = {},
                   const MeteorParams& params = {});

}  // namespace commenteval

#endif  // COMMENTEVAL_CLASSICAL_METRICS_H_
