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

#include "commenteval/neural_scoring.h"

#include <algorithm>
#include <cmath>

#include "commenteval/error.h"

namespace commenteval {

const char* ContextSettingName(ContextSetting setting) {
  switch (setting) {
    case ContextSetting::kNoContext: return "no_context";
    case ContextSetting::kMinimalContext: return "minimal_context";
    case ContextSetting::kFullContext: return "full_context";
  }
  return "no_context";
}

std::optional<ContextSetting> ParseContextSetting(std::string_view text) {
  for (auto s : {ContextSetting::kNoContext, ContextSetting::kMinimalContext,
                 ContextSetting::kFullContext}) {
    if (text == ContextSettingName(s)) return s;
  }
  return std::nullopt;
}

const char* LikelihoodDirectionName(LikelihoodDirection direction) {
  switch (direction) {
    case LikelihoodDirection::kCandidateGivenReference: return "ref_to_cand";
    case LikelihoodDirection::kReferenceGivenCandidate: return "cand_to_ref";
    case LikelihoodDirection::kBidirectional: return "bidirectional";
  }
  return "ref_to_cand";
}

std::optional<LikelihoodDirection> ParseLikelihoodDirection(
    std::string_view text) {
  for (auto d : {LikelihoodDirection::kCandidateGivenReference,
                 LikelihoodDirection::kReferenceGivenCandidate,
                 LikelihoodDirection::kBidirectional}) {
    if (text == LikelihoodDirectionName(d)) return d;
  }
  return std::nullopt;
}

TokenSpan SpanForBytes(const TokenizeResult& tokens, std::size_t byte_begin,
                       std::size_t byte_end) {
  TokenSpan span{0, 0};
  bool found = false;
  for (std::size_t i = 0; i < tokens.offsets.size(); ++i) {
    const auto [b, e] = tokens.offsets[i];
    if (e <= b) continue;
    if (b < byte_end && e > byte_begin) {
      if (!found) span.begin = i;
      span.end = i + 1;
      found = true;
    }
  }
  return span;
}

namespace {

ScoringRequest MakeRequest(std::string input, std::size_t byte_begin,
                           std::size_t byte_end, ScoringRole role,
                           const TokenizeFn& tokenize,
                           std::size_t context_window) {
  ScoringRequest request;
  request.role = role;
  const TokenizeResult tokens = tokenize(input);
  request.token_count = tokens.tokens.size();
  if (context_window > 0 && request.token_count > context_window) {
    throw ContextOverflowError(request.token_count, context_window);
  }
  request.span = SpanForBytes(tokens, byte_begin, byte_end);
  request.full_input = std::move(input);
  return request;
}

}  // namespace

std::pair<ScoringRequest, ScoringRequest> BuildScoringInput(
    const CommentSample& sample, std::string_view prediction,
    ContextSetting setting, const TranslationTable& translations,
    const TokenizeFn& tokenize, std::size_t context_window) {
  std::string before;
  std::string after;
  switch (setting) {
    case ContextSetting::kNoContext:
      break;
    case ContextSetting::kMinimalContext:
      before = translations.Text(sample.file.language_tag,
                                 "minimal_context_prefix") +
               "\n";
      break;
    case ContextSetting::kFullContext:
      before = std::string(sample.prefix());
      after = std::string(sample.suffix());
      break;
  }
  auto build = [&](std::string_view comment, ScoringRole role) {
    std::string input = before;
    input += comment;
    input += after;
    return MakeRequest(std::move(input), before.size(),
                       before.size() + comment.size(), role, tokenize,
                       context_window);
  };
  return {build(prediction, ScoringRole::kCandidate),
          build(sample.ground_truth, ScoringRole::kReference)};
}

double Cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "vectors of size " +
                                                   std::to_string(a.size()) +
                                                   " and " +
                                                   std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

namespace {

void CheckSpan(const EmbeddingMatrix& m, TokenSpan span, const char* what) {
  if (span.empty()) {
    throw Error(ErrorKind::kEmptyInput, std::string(what) + " span is empty");
  }
  if (span.end > m.vectors.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " span exceeds the matrix");
  }
}

// Mean over |rows| of the best cosine against |cols|.
double GreedyMean(const EmbeddingMatrix& rows, TokenSpan row_span,
                  const EmbeddingMatrix& cols, TokenSpan col_span) {
  double sum = 0.0;
  for (std::size_t i = row_span.begin; i < row_span.end; ++i) {
    double best = -1.0;
    for (std::size_t j = col_span.begin; j < col_span.end; ++j) {
      best = std::max(best, Cosine(rows.vectors[i], cols.vectors[j]));
    }
    sum += best;
  }
  return sum / static_cast<double>(row_span.size());
}

}  // namespace

EmbeddingScore ScoreEmbeddings(const EmbeddingMatrix& candidate,
                               TokenSpan candidate_span,
                               const EmbeddingMatrix& reference,
                               TokenSpan reference_span) {
  if (candidate.dimension != reference.dimension) {
    throw Error(ErrorKind::kDimensionMismatch,
                "embedding dimensions " + std::to_string(candidate.dimension) +
                    " and " + std::to_string(reference.dimension));
  }
  CheckSpan(candidate, candidate_span, "candidate");
  CheckSpan(reference, reference_span, "reference");
  EmbeddingScore s;
  s.precision = GreedyMean(candidate, candidate_span, reference, reference_span);
  s.recall = GreedyMean(reference, reference_span, candidate, candidate_span);
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

double ScoreLikelihood(const LikelihoodTrace& trace) {
  if (trace.span.empty()) {
    throw Error(ErrorKind::kEmptyInput, "likelihood span is empty");
  }
  if (trace.span.end > trace.logprobs.size()) {
    throw Error(ErrorKind::kInvalidArgument, "likelihood span exceeds trace");
  }
  double sum = 0.0;
  for (std::size_t i = trace.span.begin; i < trace.span.end; ++i) {
    sum += trace.logprobs[i];
  }
  return sum / static_cast<double>(trace.span.size());
}

MetricScore ScoreSample(const CommentSample& sample, const std::string& model,
                        ScorerBackend& backend,
                        const TranslationTable& translations,
                        const NeuralOptions& options) {
  auto it = sample.predictions.find(model);
  if (it == sample.predictions.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sample " + sample.id + " has no prediction from " + model);
  }
  const BackendInfo info = backend.Info();
  MetricScore score;
  score.id = sample.id;
  score.model = model;
  score.language = sample.file.language_tag;
  score.metric =
      options.mode == ScoreMode::kEmbedding ? "embedding" : "likelihood";
  score.setting = ContextSettingName(options.setting);
  score.backend = info.backend_id;
  score.scheme = "backend:" + info.model;
  score.params = {{"model", info.model}, {"idf", false}, {"rescaled", false}};
  if (options.mode == ScoreMode::kLikelihood) {
    score.params["direction"] = LikelihoodDirectionName(options.direction);
    score.params["normalization"] = "mean_logprob";
  }

  std::pair<ScoringRequest, ScoringRequest> requests;
  try {
    requests = BuildScoringInput(
        sample, it->second, options.setting, translations,
        [&](std::string_view text) { return backend.Tokenize(text); },
        info.context_window);
  } catch (const ContextOverflowError& e) {
    score.reason = std::string("context_overflow: ") + e.what();
    return score;
  }
  const auto& [cand, ref] = requests;
  if (cand.span.empty() || ref.span.empty()) {
    score.reason = "empty_span: comment has no tokens";
    return score;
  }

  try {
    if (options.mode == ScoreMode::kEmbedding) {
      const EmbeddingMatrix cm = backend.Embed(cand.full_input, cand.span);
      const EmbeddingMatrix rm = backend.Embed(ref.full_input, ref.span);
      if (cm.vectors.size() != cand.token_count ||
          rm.vectors.size() != ref.token_count) {
        throw TransportError("/embed: vector count differs from token count",
                             200, false);
      }
      const EmbeddingScore s = ScoreEmbeddings(cm, cand.span, rm, ref.span);
      score.value = s.f1;
      score.precision = s.precision;
      score.recall = s.recall;
      return score;
    }
    auto directed = [&](const ScoringRequest& source,
                        const ScoringRequest& target) {
      return ScoreLikelihood(
          backend.LogLik(source.full_input, target.full_input, target.span));
    };
    switch (options.direction) {
      case LikelihoodDirection::kCandidateGivenReference:
        score.value = directed(ref, cand);
        break;
      case LikelihoodDirection::kReferenceGivenCandidate:
        score.value = directed(cand, ref);
        break;
      case LikelihoodDirection::kBidirectional:
        score.value = 0.5 * (directed(ref, cand) + directed(cand, ref));
        break;
    }
  } catch (const ContextOverflowError& e) {
    score.reason = std::string("context_overflow: ") + e.what();
  }
  return score;
}

}  // namespace commenteval
