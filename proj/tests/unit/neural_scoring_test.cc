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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "commenteval/error.h"
#include "commenteval/translations.h"
#include "fakes.h"
#include "gtest/gtest.h"

namespace commenteval {
namespace {

using ::commenteval::testing::HashBackend;
using ::commenteval::testing::SampleAround;

const TranslationTable& Translations() {
  static const TranslationTable kTable = TranslationTable::LoadDefault();
  return kTable;
}

// One token per whitespace-separated word.
TokenizeResult WordTokens(std::string_view text) {
  TokenizeResult out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n')) ++i;
    const std::size_t b = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\n') ++i;
    if (i > b) {
      out.tokens.emplace_back(text.substr(b, i - b));
      out.offsets.emplace_back(b, i);
    }
  }
  return out;
}

std::string Words(int n, const std::string& stem = "w") {
  std::string out;
  for (int i = 0; i < n; ++i) out += (i ? " " : "") + stem + std::to_string(i);
  return out;
}

EmbeddingMatrix Matrix(std::vector<std::vector<double>> vectors) {
  EmbeddingMatrix m;
  m.dimension = vectors.empty() ? 0 : vectors[0].size();
  m.vectors = std::move(vectors);
  return m;
}

TEST(BuildScoringInputTest, NoContextSpansWholeInput) {
  const std::string comment = Words(12);
  const auto s = SampleAround("s", "x\n# " + comment + "\ny\n", comment);
  const auto [cand, ref] = BuildScoringInput(
      s, comment, ContextSetting::kNoContext, Translations(), WordTokens);
  EXPECT_EQ(cand.full_input, comment);
  EXPECT_EQ(cand.span, (TokenSpan{0, 12}));
  EXPECT_EQ(ref.span, (TokenSpan{0, 12}));
  EXPECT_EQ(cand.role, ScoringRole::kCandidate);
  EXPECT_EQ(ref.role, ScoringRole::kReference);
}

TEST(BuildScoringInputTest, MinimalContextOffsetsByPrefix) {
  auto translations = Translations();
  translations.Set("en", "minimal_context_prefix", "in plain English:");
  const std::string comment = Words(12);
  const auto s = SampleAround("s", "# " + comment + "\n", comment);
  const auto [cand, ref] = BuildScoringInput(
      s, comment, ContextSetting::kMinimalContext, translations, WordTokens);
  EXPECT_EQ(cand.full_input, "in plain English:\n" + comment);
  EXPECT_EQ(cand.span, (TokenSpan{3, 15}));
  EXPECT_EQ(cand.token_count, 15u);
}

TEST(BuildScoringInputTest, FullContextSplicesPrediction) {
  const std::string content = "def f():\n    # old words here\n    return 1\n";
  const auto s = SampleAround("s", content, "old words here");
  const auto [cand, ref] = BuildScoringInput(
      s, "new text", ContextSetting::kFullContext, Translations(), WordTokens);
  EXPECT_EQ(cand.full_input,
            "def f():\n    # new text\n    return 1\n");
  EXPECT_EQ(ref.full_input, content);
  const auto tokens = WordTokens(cand.full_input);
  EXPECT_EQ(tokens.tokens[cand.span.begin], "new");
  EXPECT_EQ(cand.span.size(), 2u);
  EXPECT_EQ(ref.span.size(), 3u);
}

TEST(BuildScoringInputTest, ContextOverflowCarriesLimit) {
  const auto s = SampleAround("s", Words(20) + "\n# a b\n", "a b");
  try {
    BuildScoringInput(s, "a b", ContextSetting::kFullContext, Translations(),
                      WordTokens, 10);
    FAIL() << "expected overflow";
  } catch (const ContextOverflowError& e) {
    EXPECT_EQ(e.limit(), 10u);
    EXPECT_EQ(e.tokens(), 23u);
  }
}

TEST(EmbeddingScoreTest, IdenticalMatrices) {
  const auto m = Matrix({{1, 0}, {0.3, 0.7}, {-1, 2}});
  const auto s = ScoreEmbeddings(m, {0, 3}, m, {0, 3});
  EXPECT_NEAR(s.precision, 1.0, 1e-12);
  EXPECT_NEAR(s.recall, 1.0, 1e-12);
  EXPECT_NEAR(s.f1, 1.0, 1e-12);
}

TEST(EmbeddingScoreTest, OrthogonalSpans) {
  const auto s = ScoreEmbeddings(Matrix({{1, 0, 0}}), {0, 1},
                                 Matrix({{0, 1, 0}, {0, 0, 1}}), {0, 2});
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(EmbeddingScoreTest, HandGreedyMatching) {
  const auto s = ScoreEmbeddings(Matrix({{1, 0}}), {0, 1},
                                 Matrix({{1, 0}, {0, 1}}), {0, 2});
  EXPECT_DOUBLE_EQ(s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
  EXPECT_DOUBLE_EQ(s.f1, 2.0 / 3.0);
}

TEST(EmbeddingScoreTest, DimensionMismatch) {
  try {
    ScoreEmbeddings(Matrix({{1, 0}}), {0, 1}, Matrix({{1, 0, 0}}), {0, 1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(EmbeddingScoreTest, SymmetryAndSpanRestriction) {
  std::mt19937 rng(17);
  std::normal_distribution<double> g;
  auto random_matrix = [&](std::size_t n) {
    std::vector<std::vector<double>> v(n, std::vector<double>(4));
    for (auto& row : v) {
      for (double& x : row) x = g(rng);
    }
    return Matrix(v);
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_matrix(5), b = random_matrix(7);
    const auto ab = ScoreEmbeddings(a, {1, 4}, b, {2, 6});
    const auto ba = ScoreEmbeddings(b, {2, 6}, a, {1, 4});
    EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
    EXPECT_DOUBLE_EQ(ab.recall, ba.precision);
    // Extra context rows outside the spans change nothing.
    auto a2 = a;
    a2.vectors.push_back({9, 9, 9, 9});
    a2.vectors.insert(a2.vectors.begin(), {-3, 1, 0, 2});
    const auto shifted = ScoreEmbeddings(a2, {2, 5}, b, {2, 6});
    EXPECT_EQ(shifted.f1, ab.f1);
  }
}

TEST(LikelihoodScoreTest, UniformDistribution) {
  const double v = 32000.0;
  LikelihoodTrace t{std::vector<double>(9, -std::log(v)), {0, 9}};
  EXPECT_NEAR(ScoreLikelihood(t), -std::log(v), 1e-12);
}

TEST(LikelihoodScoreTest, SingleToken) {
  EXPECT_DOUBLE_EQ(ScoreLikelihood({{-0.7}, {0, 1}}), -0.7);
}

TEST(LikelihoodScoreTest, ContextExcluded) {
  EXPECT_DOUBLE_EQ(ScoreLikelihood({{-10.0, -1.0, -3.0}, {1, 3}}), -2.0);
}

TEST(LikelihoodScoreTest, EmptySpanThrows) {
  EXPECT_THROW(ScoreLikelihood({{-1.0}, {1, 1}}), Error);
}

TEST(ScoreSampleTest, IdenticalPredictionScoresOne) {
  HashBackend backend;
  for (const auto& base : testing::TestCorpus()) {
    auto s = base;
    s.predictions["copy"] = s.ground_truth;
    NeuralOptions options;
    const auto score = ScoreSample(s, "copy", backend, Translations(), options);
    ASSERT_TRUE(score.value.has_value()) << score.reason;
    EXPECT_NEAR(*score.value, 1.0, 1e-12);
    EXPECT_EQ(score.backend, "hash-backend");
    EXPECT_EQ(score.setting, "no_context");
  }
}

TEST(ScoreSampleTest, NoContextIgnoresSurroundings) {
  HashBackend backend;
  auto a = SampleAround("a", "x = 1\n# read the value\n", "read the value");
  auto b = SampleAround("b", "other stuff\n# read the value\nmore\n",
                        "read the value");
  a.predictions["m"] = b.predictions["m"] = "read a value";
  for (ScoreMode mode : {ScoreMode::kEmbedding, ScoreMode::kLikelihood}) {
    NeuralOptions options;
    options.mode = mode;
    EXPECT_EQ(ScoreSample(a, "m", backend, Translations(), options).value,
              ScoreSample(b, "m", backend, Translations(), options).value);
  }
}

TEST(ScoreSampleTest, OverflowIsRecordedNotThrown) {
  HashBackend backend(8, 6);
  auto s = SampleAround("s", "a b c d e f g h\n# one two\n", "one two");
  s.predictions["m"] = "one two";
  NeuralOptions options;
  options.setting = ContextSetting::kFullContext;
  const auto score = ScoreSample(s, "m", backend, Translations(), options);
  EXPECT_FALSE(score.value.has_value());
  EXPECT_NE(score.reason.find("context_overflow"), std::string::npos);
}

TEST(ScoreSampleTest, DeterministicAndDirectional) {
  HashBackend backend;
  auto s = SampleAround("s", "# sort the list in place\n",
                        "sort the list in place");
  s.predictions["m"] = "sort items quickly";
  NeuralOptions options;
  options.mode = ScoreMode::kLikelihood;
  const auto first = ScoreSample(s, "m", backend, Translations(), options);
  EXPECT_EQ(ScoreSample(s, "m", backend, Translations(), options), first);
  EXPECT_EQ(first.params.at("direction"), "ref_to_cand");
  // Candidate tokens "sort" (in the reference) plus two absent tokens.
  const double expected =
      (HashBackend::TokenLogProb("sort", true) +
       HashBackend::TokenLogProb("items", false) +
       HashBackend::TokenLogProb("quickly", false)) / 3.0;
  EXPECT_NEAR(*first.value, expected, 1e-12);
  options.direction = LikelihoodDirection::kBidirectional;
  const auto both = ScoreSample(s, "m", backend, Translations(), options);
  options.direction = LikelihoodDirection::kReferenceGivenCandidate;
  const auto reverse = ScoreSample(s, "m", backend, Translations(), options);
  EXPECT_NEAR(*both.value, 0.5 * (*first.value + *reverse.value), 1e-12);
}

}  // namespace
}  // namespace commenteval
