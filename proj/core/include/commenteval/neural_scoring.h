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

#ifndef COMMENTEVAL_NEURAL_SCORING_H_
#define COMMENTEVAL_NEURAL_SCORING_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "commenteval/corpus.h"
#include "commenteval/scorer_backend.h"
#include "commenteval/scores.h"
#include "commenteval/translations.h"

namespace commenteval {

enum class ContextSetting { kNoContext, kMinimalContext, kFullContext };

const char* ContextSettingName(ContextSetting setting);
std::optional<ContextSetting> ParseContextSetting(std::string_view text);

enum class ScoringRole { kCandidate, kReference };

struct ScoringRequest {
  std::string full_input;
  TokenSpan span;  // comment tokens within full_input
  ScoringRole role = ScoringRole::kCandidate;
  std::size_t token_count = 0;
};

using TokenizeFn = std::function<TokenizeResult(std::string_view)>;

// Token indices whose byte range overlaps [byte_begin, byte_end). Zero-width
// (special) tokens never count.
TokenSpan SpanForBytes(const TokenizeResult& tokens, std::size_t byte_begin,
                       std::size_t byte_end);

// Builds the candidate and reference inputs for |setting|. Throws
// ContextOverflowError when an input exceeds |context_window| tokens
// (0 disables the check).
std::pair<ScoringRequest, ScoringRequest> BuildScoringInput(
    const CommentSample& sample, std::string_view prediction,
    ContextSetting setting, const TranslationTable& translations,
    const TokenizeFn& tokenize, std::size_t context_window = 0);

struct EmbeddingScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

double Cosine(const std::vector<double>& a, const std::vector<double>& b);

// Greedy cosine matching between the span rows of the two matrices.
EmbeddingScore ScoreEmbeddings(const EmbeddingMatrix& candidate,
                               TokenSpan candidate_span,
                               const EmbeddingMatrix& reference,
                               TokenSpan reference_span);

// Mean log-probability over the trace's span; other positions are ignored.
double ScoreLikelihood(const LikelihoodTrace& trace);

enum class ScoreMode { kEmbedding, kLikelihood };

// kCandidateGivenReference scores the prediction as the target with the
// ground truth as source.
enum class LikelihoodDirection {
  kCandidateGivenReference,
  kReferenceGivenCandidate,
  kBidirectional,
};

const char* LikelihoodDirectionName(LikelihoodDirection direction);
std::optional<LikelihoodDirection> ParseLikelihoodDirection(
    std::string_view text);

struct NeuralOptions {
  ScoreMode mode = ScoreMode::kEmbedding;
  ContextSetting setting = ContextSetting::kNoContext;
  LikelihoodDirection direction = LikelihoodDirection::kCandidateGivenReference;
};

// Context overflow yields a record with a null value and a reason; transport
// failures propagate as TransportError.
MetricScore ScoreSample(const CommentSample& sample, const std::string& model,
                        ScorerBackend& backend,
                        const TranslationTable& translations,
                        const NeuralOptions& options);

}  // namespace commenteval

#endif  // COMMENTEVAL_NEURAL_SCORING_H_
