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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "commenteval/error.h"
#include "commenteval/tokenizer.h"
#include "fakes.h"
#include "gtest/gtest.h"

namespace commenteval {
namespace {

TEST(NoiseTest, UniformLengthAndMembership) {
  const std::vector<std::string> vocab = {"a", "b", "c"};
  const auto tokens = UniformNoise(vocab, {NoiseKind::kUniform, 5, 7});
  ASSERT_EQ(tokens.size(), 5u);
  for (const auto& t : tokens) {
    EXPECT_TRUE(std::find(vocab.begin(), vocab.end(), t) != vocab.end());
  }
}

TEST(NoiseTest, SameSeedSameSequence) {
  const std::vector<std::string> vocab = {"x", "y", "z", "w"};
  const NoiseSpec spec{NoiseKind::kUniform, 40, 123};
  EXPECT_EQ(UniformNoise(vocab, spec), UniformNoise(vocab, spec));
  NoiseSpec other = spec;
  other.seed = 124;
  EXPECT_NE(UniformNoise(vocab, spec), UniformNoise(vocab, other));
}

TEST(NoiseTest, TargetedFollowsContextFrequencies) {
  const std::vector<std::string> context = {"a", "a", "a", "b"};
  std::size_t a = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (const auto& t :
         TargetedNoise(context, {NoiseKind::kTargeted, 50, seed})) {
      EXPECT_TRUE(t == "a" || t == "b");
      a += t == "a";
      ++total;
    }
  }
  EXPECT_NEAR(static_cast<double>(a) / total, 0.75, 0.02);
}

TEST(NoiseTest, UniformCoversVocabularyEvenly) {
  std::vector<std::string> vocab;
  for (int i = 0; i < 10; ++i) vocab.push_back("t" + std::to_string(i));
  std::map<std::string, int> counts;
  for (const auto& t : UniformNoise(vocab, {NoiseKind::kUniform, 50000, 3})) {
    ++counts[t];
  }
  ASSERT_EQ(counts.size(), 10u);
  for (const auto& [token, n] : counts) EXPECT_NEAR(n, 5000, 300) << token;
}

TEST(NoiseTest, Errors) {
  try {
    TargetedNoise({}, {NoiseKind::kTargeted, 3, 1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyInput);
  }
  EXPECT_THROW(UniformNoise({"a"}, {NoiseKind::kUniform, 0, 1}), Error);
}

TEST(PerturbSampleTest, TargetedExcludesGroundTruth) {
  const std::string content =
      "alpha beta gamma\n# zeta eta theta iota\nalpha delta\n";
  const auto sample = testing::SampleAround("s1", content,
                                            "zeta eta theta iota");
  PunctuationTokenizer tok;
  const auto noise =
      PerturbSample(sample, NoiseKind::kTargeted, 42, tok, nullptr);
  EXPECT_EQ(noise.tokens.size(), tok.Tokenize(sample.ground_truth).size());
  std::set<std::string> context;
  for (const auto& t : TokenTexts(tok.Tokenize(sample.prefix()))) {
    context.insert(t);
  }
  for (const auto& t : TokenTexts(tok.Tokenize(sample.suffix()))) {
    context.insert(t);
  }
  for (const auto& t : noise.tokens) EXPECT_TRUE(context.count(t)) << t;
  EXPECT_EQ(noise.text, [&] {
    std::string joined;
    for (const auto& t : noise.tokens) joined += (joined.empty() ? "" : " ") + t;
    return joined;
  }());
}

TEST(PerturbSampleTest, SeedDependsOnSampleId) {
  EXPECT_EQ(SampleSeed(42, "a"), SampleSeed(42, "a"));
  EXPECT_NE(SampleSeed(42, "a"), SampleSeed(42, "b"));
  EXPECT_NE(SampleSeed(42, "a"), SampleSeed(43, "a"));
}

TEST(PerturbSampleTest, UniformNeedsVocabulary) {
  const auto sample =
      testing::SampleAround("s", "x = 1\n# one two three\n", "one two three");
  WhitespaceTokenizer tok;
  EXPECT_THROW(PerturbSample(sample, NoiseKind::kUniform, 1, tok, nullptr),
               Error);
  const std::vector<std::string> vocab = {"v"};
  const auto noise = PerturbSample(sample, NoiseKind::kUniform, 1, tok, &vocab);
  EXPECT_EQ(noise.text, "v v v");
}

TEST(PerturbSampleTest, PerCharacterJoinsWithoutSpaces) {
  const auto sample =
      testing::SampleAround("s", "ab\n# xyz\nab\n", "xyz");
  CharacterTokenizer tok;
  const auto noise =
      PerturbSample(sample, NoiseKind::kTargeted, 5, tok, nullptr);
  EXPECT_EQ(noise.text.size(), 3u);
  for (char c : noise.text) EXPECT_TRUE(c == 'a' || c == 'b' || c == '#');
}

TEST(VocabularyTest, LineAndTokenizerJsonFormats) {
  const auto dir = std::filesystem::temp_directory_path() / "ce_vocab_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "v.txt") << "one\r\ntwo\n\nthree\n";
    std::ofstream(dir / "tokenizer.json")
        << R"({"model": {"vocab": {"hello": 0, "world": 1}}})";
  }
  EXPECT_EQ(LoadVocabulary(dir / "v.txt"),
            (std::vector<std::string>{"one", "two", "three"}));
  auto json_vocab = LoadVocabulary(dir / "tokenizer.json");
  std::sort(json_vocab.begin(), json_vocab.end());
  EXPECT_EQ(json_vocab, (std::vector<std::string>{"hello", "world"}));
  std::filesystem::remove_all(dir);
}

TEST(NoiseKindTest, NamesRoundTrip) {
  for (auto kind : {NoiseKind::kUniform, NoiseKind::kTargeted}) {
    EXPECT_EQ(ParseNoiseKind(NoiseKindName(kind)), kind);
  }
  EXPECT_EQ(NoiseModelName(NoiseKind::kTargeted), "targeted_noise");
  EXPECT_FALSE(ParseNoiseKind("gaussian").has_value());
}

}  // namespace
}  // namespace commenteval
