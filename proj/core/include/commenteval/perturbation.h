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

#ifndef COMMENTEVAL_PERTURBATION_H_
#define COMMENTEVAL_PERTURBATION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commenteval/corpus.h"
#include "commenteval/tokenizer.h"

namespace commenteval {

enum class NoiseKind { kUniform, kTargeted };

const char* NoiseKindName(NoiseKind kind);
std::optional<NoiseKind> ParseNoiseKind(std::string_view text);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kUniform;
  std::size_t target_length = 1;
  std::uint64_t seed = 42;
};

// Independent uniform draws from |vocabulary|.
std::vector<std::string> UniformNoise(const std::vector<std::string>& vocabulary,
                                      const NoiseSpec& spec);

// Draws with replacement from the context multiset, so frequent context
// tokens are drawn proportionally more often.
std::vector<std::string> TargetedNoise(
    const std::vector<std::string>& context_tokens, const NoiseSpec& spec);

// One token per line, or a tokenizer.json file (keys of model.vocab).
std::vector<std::string> LoadVocabulary(const std::filesystem::path& path);

// Stable per-sample seed derived from the run seed and the sample id.
std::uint64_t SampleSeed(std::uint64_t seed, std::string_view sample_id);

struct NoisePrediction {
  std::vector<std::string> tokens;
  std::string text;
};

// Length-matched noise for one sample under |tokenizer|. The targeted
// context is prefix + suffix; the ground-truth comment is excluded.
// |vocabulary| is required for uniform noise.
NoisePrediction PerturbSample(const CommentSample& sample, NoiseKind kind,
                              std::uint64_t seed, const Tokenizer& tokenizer,
                              const std::vector<std::string>* vocabulary);

// Model name under which noise predictions are stored in a corpus.
std::string NoiseModelName(NoiseKind kind);

}  // namespace commenteval

#endif  // COMMENTEVAL_PERTURBATION_H_
