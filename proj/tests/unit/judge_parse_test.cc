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

#include <string>
#include <vector>

#include "commenteval/judge.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"
#include "gtest/gtest.h"
#include "judge_fixtures.h"

namespace commenteval {
namespace {

class ParseTest : public ::testing::Test {
 protected:
  JudgeOutcome Parse(const std::string& raw, const std::string& lang = "en",
                     ParseOptions options = {}) {
    return ParseResponse(raw, lang, translations_, taxonomy_, options);
  }

  TranslationTable translations_ = TranslationTable::LoadDefault();
  Taxonomy taxonomy_ = Taxonomy::LoadDefault();
};

TEST_F(ParseTest, FixtureStatuses) {
  for (const auto& c : testing::ParseCases()) {
    const auto outcome = Parse(c.raw, c.lang);
    EXPECT_EQ(outcome.status, c.status) << c.name << ": " << outcome.detail;
    EXPECT_EQ(outcome.failure, c.failure) << c.name;
    EXPECT_EQ(outcome.verdict.has_value(), c.status == OutcomeStatus::kOk)
        << c.name;
    EXPECT_EQ(outcome.raw, c.raw) << c.name;
  }
}

TEST_F(ParseTest, DutchKeysMapToEnglishVerdict) {
  const auto outcome = Parse(
      R"({"voorspellingen": [{"id": "P1", "fouten": ["LG-GR2"], "oordeel": "gedeeltelijk_correct"}]})",
      "nl", {Strategy::kStandard, {"codellama"}});
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  const auto& p = outcome.verdict->predictions.at(0);
  EXPECT_EQ(p.id, "P1");
  EXPECT_EQ(p.model, "codellama");
  EXPECT_EQ(p.overall, OrdinalLabel::kPartiallyCorrect);
  ASSERT_EQ(p.errors.size(), 1u);
  EXPECT_EQ(p.errors[0].code, "LG-GR2");
  EXPECT_TRUE(outcome.warnings.empty());
}

TEST_F(ParseTest, TranslatedAndEnglishVerdictsAgree) {
  const auto english = Parse(
      R"({"predictions": [{"id": "P1", "reasoning": "r", "errors": [{"code": "SE-MD", "confidence": 0.5}], "overall": "incorrect"}]})");
  const auto dutch = Parse(
      R"({"voorspellingen": [{"id": "P1", "redenering": "r", "fouten": [{"code": "SE-MD", "zekerheid": 0.5}], "oordeel": "incorrect"}]})",
      "nl");
  ASSERT_EQ(english.status, OutcomeStatus::kOk);
  EXPECT_EQ(english.verdict, dutch.verdict);
}

TEST_F(ParseTest, EnglishIdentityMapLeavesVerdictUnchanged) {
  const std::string raw =
      R"({"predictions": [{"id": "P2", "errors": ["MS-LT", "SE-OI"], "overall": "correct"}]})";
  const auto outcome = Parse(raw, "en", {Strategy::kStandard, {"a", "b"}});
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  const auto& p = outcome.verdict->predictions.at(0);
  EXPECT_EQ(p.model, "b");
  EXPECT_EQ(p.overall, OrdinalLabel::kCorrect);
  EXPECT_EQ(p.errors, (std::vector<ErrorAssignment>{{"MS-LT", {}, {}},
                                                   {"SE-OI", {}, {}}}));
}

TEST_F(ParseTest, UnknownCodesWarnWithoutFailing) {
  const auto outcome = Parse(
      R"({"predictions": [{"id": "P1", "errors": ["XX-99", "SE-MD", "SE-MD"], "overall": "incorrect"}]})");
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  EXPECT_EQ(outcome.verdict->predictions[0].errors.size(), 1u);
  ASSERT_EQ(outcome.warnings.size(), 1u);
  EXPECT_NE(outcome.warnings[0].find("unknown code XX-99"), std::string::npos);
}

TEST_F(ParseTest, CotWarnings) {
  const auto outcome = Parse(
      R"({"predictions": [{"id": "P1", "errors": [{"code": "SE-MD"}], "reasoning": "late", "overall": "incorrect"}]})",
      "en", {Strategy::kCot, {}});
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  std::string all;
  for (const auto& w : outcome.warnings) all += w + "\n";
  EXPECT_NE(all.find("reasoning after errors"), std::string::npos) << all;
  EXPECT_NE(all.find("has no confidence"), std::string::npos) << all;
}

TEST_F(ParseTest, InvalidConfidenceIsDropped) {
  const auto outcome = Parse(
      R"({"predictions": [{"id": "P1", "errors": [{"code": "SE-MD", "confidence": 1.5}], "overall": "incorrect"}]})");
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  EXPECT_FALSE(outcome.verdict->predictions[0].errors[0].confidence);
  EXPECT_EQ(outcome.warnings.size(), 1u);
}

TEST_F(ParseTest, CountMismatchWarns) {
  const auto outcome = Parse(
      R"({"predictions": [{"id": "P1", "errors": [], "overall": "correct"}]})",
      "en", {Strategy::kStandard, {"a", "b", "c"}});
  ASSERT_EQ(outcome.status, OutcomeStatus::kOk);
  ASSERT_FALSE(outcome.warnings.empty());
  EXPECT_EQ(outcome.warnings.back(), "judged 1 of 3 predictions");
}

TEST_F(ParseTest, TotalOverPrefixes) {
  // Every prefix of a valid reply lands in exactly one status.
  const std::string raw =
      "```json\n{\"predictions\": [{\"id\": \"P1\", \"errors\": "
      "[\"SE-MD\"], \"overall\": \"incorrect\"}]}\n```";
  for (std::size_t n = 0; n <= raw.size(); ++n) {
    const auto outcome = Parse(raw.substr(0, n));
    const bool ok = outcome.status == OutcomeStatus::kOk;
    EXPECT_EQ(outcome.verdict.has_value(), ok) << n;
    EXPECT_EQ(outcome.failure != ParseFailureKind::kNone,
              outcome.status == OutcomeStatus::kParseFailure)
        << n;
  }
}

TEST(ExtractDocumentTest, Stages) {
  EXPECT_TRUE(ExtractDocument("{\"a\": 1}").document);
  EXPECT_TRUE(ExtractDocument("x ```\n{\"a\": 1}\n``` y").document);
  EXPECT_TRUE(ExtractDocument("see {\"a\": {\"b\": 2}} ok").document);
  const auto truncated = ExtractDocument("see {\"a\": {\"b\": 2} ");
  EXPECT_TRUE(truncated.truncated);
  EXPECT_FALSE(truncated.document);
  const auto none = ExtractDocument("no structure here");
  EXPECT_FALSE(none.has_structure);
}

TEST(OutcomeNamesTest, RoundTrip) {
  for (auto s : {OutcomeStatus::kOk, OutcomeStatus::kParseFailure,
                 OutcomeStatus::kEmptyResponse,
                 OutcomeStatus::kTransportFailure}) {
    EXPECT_EQ(ParseOutcomeStatus(OutcomeStatusName(s)), s);
  }
  for (auto k : {ParseFailureKind::kNone, ParseFailureKind::kMalformed,
                 ParseFailureKind::kTruncated, ParseFailureKind::kRefusal}) {
    EXPECT_EQ(ParseParseFailureKind(ParseFailureKindName(k)), k);
  }
}

}  // namespace
}  // namespace commenteval
