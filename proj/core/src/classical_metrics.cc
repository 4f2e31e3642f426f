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

#include "commenteval/classical_metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "commenteval/error.h"
#include "commenteval/text.h"
#include "commenteval/tokenizer.h"

namespace commenteval {

const char* TokenSchemeName(TokenScheme scheme) {
  return scheme == TokenScheme::kPerCharacter ? "per_character"
                                              : "whitespace_punct";
}

TokenScheme SchemeForLanguage(std::string_view language_tag) {
  return language_tag == "zh" ? TokenScheme::kPerCharacter
                              : TokenScheme::kWhitespacePunct;
}

TokenizedText TokenizeForMetric(std::string_view text, TokenScheme scheme) {
  TokenizedText out;
  out.scheme = scheme;
  std::vector<Token> tokens;
  if (scheme == TokenScheme::kPerCharacter) {
    tokens = CharacterTokenizer().Tokenize(text);
  } else {
    tokens = PunctuationTokenizer().Tokenize(text);
  }
  out.tokens.reserve(tokens.size());
  for (const auto& t : tokens) out.tokens.push_back(CaseFold(t.text));
  return out;
}

TokenizedText TokenizeForMetric(std::string_view text,
                                std::string_view language_tag) {
  return TokenizeForMetric(text, SchemeForLanguage(language_tag));
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts CountNgrams(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  const std::size_t size = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + size <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + size)];
  }
  return counts;
}

void Warn(MetricWarnings* warnings, std::string message) {
  if (warnings != nullptr) warnings->push_back(std::move(message));
}

}  // namespace

BleuScore BleuDetailed(const TokenizedText& candidate,
                       const std::vector<TokenizedText>& references,
                       const BleuOptions& options, MetricWarnings* warnings) {
  if (options.max_n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "BLEU max_n must be >= 1");
  }
  if (references.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "BLEU needs a reference");
  }
  BleuScore result;
  result.candidate_length = candidate.tokens.size();
  // Closest reference length, shorter one on ties.
  std::size_t best_diff = std::numeric_limits<std::size_t>::max();
  for (const auto& ref : references) {
    const std::size_t len = ref.tokens.size();
    const std::size_t diff = len > result.candidate_length
                                 ? len - result.candidate_length
                                 : result.candidate_length - len;
    if (diff < best_diff ||
        (diff == best_diff && len < result.reference_length)) {
      best_diff = diff;
      result.reference_length = len;
    }
  }
  if (candidate.tokens.empty()) {
    Warn(warnings, "empty candidate; BLEU defined as 0");
    return result;
  }

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 1; n <= options.max_n; ++n) {
    const NgramCounts cand = CountNgrams(candidate.tokens, n);
    std::map<std::vector<std::string>, std::size_t> max_ref;
    for (const auto& ref : references) {
      for (const auto& [gram, count] : CountNgrams(ref.tokens, n)) {
        auto& slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    std::size_t matched = 0;
    std::size_t total = 0;
    for (const auto& [gram, count] : cand) {
      total += count;
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    double p = total == 0 ? 0.0 : static_cast<double>(matched) / total;
    if (matched == 0 && n >= 2 &&
        options.smoothing == BleuSmoothing::kAddOne) {
      p = 1.0 / (static_cast<double>(total) + 1.0);
    }
    result.precisions.push_back(p);
    if (p == 0.0) {
      zero = true;
    } else {
      log_sum += std::log(p);
    }
  }
  const double c = static_cast<double>(result.candidate_length);
  const double r = static_cast<double>(result.reference_length);
  result.brevity_penalty = c > r ? 1.0 : std::exp(1.0 - r / c);
  if (zero) return result;
  result.score = result.brevity_penalty * std::exp(log_sum / options.max_n);
  result.score = std::clamp(result.score, 0.0, 1.0);
  return result;
}

double Bleu(const TokenizedText& candidate,
            const std::vector<TokenizedText>& references,
            const BleuOptions& options, MetricWarnings* warnings) {
  return BleuDetailed(candidate, references, options, warnings).score;
}

std::size_t LongestCommonSubsequence(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeLScore RougeL(const TokenizedText& candidate,
                   const TokenizedText& reference, MetricWarnings* warnings) {
  RougeLScore s;
  s.candidate_length = candidate.tokens.size();
  s.reference_length = reference.tokens.size();
  if (s.candidate_length == 0 && s.reference_length == 0) {
    Warn(warnings, "empty candidate and reference; ROUGE-L defined as 0");
    return s;
  }
  s.lcs = LongestCommonSubsequence(candidate.tokens, reference.tokens);
  if (s.lcs == 0) return s;
  s.precision = static_cast<double>(s.lcs) / s.candidate_length;
  s.recall = static_cast<double>(s.lcs) / s.reference_length;
  s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

MeteorScore Meteor(const TokenizedText& candidate,
                   const TokenizedText& reference,
                   const MeteorMatchers& matchers, const MeteorParams& params) {
  const auto& cand = candidate.tokens;
  const auto& ref = reference.tokens;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> align(cand.size(), kNone);  // cand -> ref
  std::vector<bool> ref_used(ref.size(), false);

  auto run_stage = [&](const auto& same) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (align[i] != kNone) continue;
      // Continue the previous token's chunk when possible, otherwise take
      // the leftmost free match.
      std::size_t pick = kNone;
      if (i > 0 && align[i - 1] != kNone) {
        const std::size_t next = align[i - 1] + 1;
        if (next < ref.size() && !ref_used[next] && same(cand[i], ref[next])) {
          pick = next;
        }
      }
      for (std::size_t j = 0; pick == kNone && j < ref.size(); ++j) {
        if (!ref_used[j] && same(cand[i], ref[j])) pick = j;
      }
      if (pick != kNone) {
        align[i] = pick;
        ref_used[pick] = true;
      }
    }
  };
  if (matchers.exact) {
    run_stage([](const std::string& a, const std::string& b) { return a == b; });
  }
  if (matchers.stemmer) {
    run_stage([&](const std::string& a, const std::string& b) {
      return matchers.stemmer(a) == matchers.stemmer(b);
    });
  }
  if (matchers.synonym) {
    run_stage([&](const std::string& a, const std::string& b) {
      return matchers.synonym(a, b);
    });
  }

  MeteorScore s;
  std::size_t prev_ref = kNone;
  bool prev_matched = false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (align[i] == kNone) {
      prev_matched = false;
      continue;
    }
    ++s.matches;
    if (!prev_matched || align[i] != prev_ref + 1) ++s.chunks;
    prev_ref = align[i];
    prev_matched = true;
  }
  if (s.matches == 0) return s;
  s.precision = static_cast<double>(s.matches) / cand.size();
  s.recall = static_cast<double>(s.matches) / ref.size();
  s.fmean = s.precision * s.recall /
            (params.alpha * s.precision + (1.0 - params.alpha) * s.recall);
  s.penalty = params.gamma *
              std::pow(static_cast<double>(s.chunks) / s.matches, params.beta);
  s.score = std::clamp(s.fmean * (1.0 - s.penalty), 0.0, 1.0);
  return s;
}

}  // namespace commenteval
