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

#include "commenteval/perturbation.h"

#include <random>

#include <nlohmann/json.hpp>

#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/hash.h"
#include "commenteval/text.h"

namespace commenteval {

const char* NoiseKindName(NoiseKind kind) {
  return kind == NoiseKind::kTargeted ? "targeted" : "uniform";
}

std::optional<NoiseKind> ParseNoiseKind(std::string_view text) {
  if (text == "uniform") return NoiseKind::kUniform;
  if (text == "targeted") return NoiseKind::kTargeted;
  return std::nullopt;
}

std::string NoiseModelName(NoiseKind kind) {
  return std::string(NoiseKindName(kind)) + "_noise";
}

namespace {

std::vector<std::string> Draw(const std::vector<std::string>& pool,
                              const NoiseSpec& spec, const char* what) {
  if (pool.empty()) {
    throw Error(ErrorKind::kEmptyInput, std::string(what) + " is empty");
  }
  if (spec.target_length < 1) {
    throw Error(ErrorKind::kInvalidArgument, "target length must be >= 1");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::string> out;
  out.reserve(spec.target_length);
  for (std::size_t i = 0; i < spec.target_length; ++i) {
    out.push_back(pool[pick(rng)]);
  }
  return out;
}

}  // namespace

std::vector<std::string> UniformNoise(const std::vector<std::string>& vocabulary,
                                      const NoiseSpec& spec) {
  return Draw(vocabulary, spec, "vocabulary");
}

std::vector<std::string> TargetedNoise(
    const std::vector<std::string>& context_tokens, const NoiseSpec& spec) {
  return Draw(context_tokens, spec, "context");
}

std::vector<std::string> LoadVocabulary(const std::filesystem::path& path) {
  const std::string content = ReadFile(path);
  std::vector<std::string> vocab;
  if (path.extension() == ".json") {
    const auto doc = nlohmann::json::parse(content);
    const auto& entries = doc.contains("model") ? doc["model"].at("vocab") : doc;
    if (entries.is_object()) {
      for (const auto& [token, id] : entries.items()) vocab.push_back(token);
    } else {
      vocab = entries.get<std::vector<std::string>>();
    }
    return vocab;
  }
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) vocab.emplace_back(line);
    start = end + 1;
  }
  return vocab;
}

std::uint64_t SampleSeed(std::uint64_t seed, std::string_view sample_id) {
  const std::string digest = Sha256Hex(std::to_string(seed) + ":" +
                                       std::string(sample_id));
  return std::stoull(digest.substr(0, 16), nullptr, 16);
}

NoisePrediction PerturbSample(const CommentSample& sample, NoiseKind kind,
                              std::uint64_t seed, const Tokenizer& tokenizer,
                              const std::vector<std::string>* vocabulary) {
  NoiseSpec spec;
  spec.kind = kind;
  spec.seed = SampleSeed(seed, sample.id);
  spec.target_length = tokenizer.Tokenize(sample.ground_truth).size();
  if (spec.target_length == 0) {
    throw Error(ErrorKind::kEmptyInput,
                "sample " + sample.id + " has an empty ground truth");
  }
  NoisePrediction out;
  if (kind == NoiseKind::kUniform) {
    if (vocabulary == nullptr) {
      throw Error(ErrorKind::kInvalidArgument,
                  "uniform noise needs a vocabulary");
    }
    out.tokens = UniformNoise(*vocabulary, spec);
  } else {
    std::vector<std::string> context =
        TokenTexts(tokenizer.Tokenize(sample.prefix()));
    for (auto& t : TokenTexts(tokenizer.Tokenize(sample.suffix()))) {
      context.push_back(std::move(t));
    }
    out.tokens = TargetedNoise(context, spec);
  }
  const std::string separator = tokenizer.name() == "per_character" ? "" : " ";
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    if (i > 0) out.text += separator;
    out.text += out.tokens[i];
  }
  return out;
}

}  // namespace commenteval
