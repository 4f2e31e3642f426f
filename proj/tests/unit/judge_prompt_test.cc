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

#include "commenteval/error.h"
#include "commenteval/judge.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"
#include "fakes.h"
#include "gtest/gtest.h"

namespace commenteval {
namespace {

std::size_t Count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

class PromptTest : public ::testing::Test {
 protected:
  PromptTest() {
    task_.task_id = "t1";
    task_.sample = testing::SampleAround(
        "s1", "def f(x):\n    # controleer de invoer\n    return x\n",
        "controleer de invoer", "nl");
    task_.sample.predictions = {{"starcoder", "controleer invoer"},
                                {"codellama", "check the input"}};
    task_.language = "nl";
    task_.judge_model = "judge";
  }

  std::vector<ChatMessage> Build(Strategy strategy,
                                 const std::vector<std::string>* codes = nullptr) {
    task_.strategy = strategy;
    return BuildPrompt(task_, taxonomy_, translations_, codes);
  }

  JudgeTask task_;
  Taxonomy taxonomy_ = Taxonomy::LoadDefault();
  TranslationTable translations_ = TranslationTable::LoadDefault();
};

TEST_F(PromptTest, Deterministic) {
  for (auto s : {Strategy::kStandard, Strategy::kCot, Strategy::kRubric}) {
    const auto a = Build(s);
    const auto b = Build(s);
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].role, "system");
    EXPECT_EQ(a[1].role, "user");
  }
}

TEST_F(PromptTest, PredictionsInModelOrderWithFillMarker) {
  const auto user = Build(Strategy::kStandard)[1].content;
  const auto p1 = user.find("check the input");
  const auto p2 = user.find("controleer invoer");
  ASSERT_NE(p1, std::string::npos);
  ASSERT_NE(p2, std::string::npos);
  EXPECT_LT(p1, p2);
  EXPECT_NE(user.find("<FILL_ME>"), std::string::npos);
  EXPECT_EQ(PredictionOrder(task_.sample),
            (std::vector<std::string>{"codellama", "starcoder"}));
}

TEST_F(PromptTest, DutchOutputSchema) {
  const auto schema = OutputSchema(Strategy::kStandard, "nl", translations_);
  ASSERT_TRUE(schema.contains("voorspellingen"));
  const auto& entry = schema["voorspellingen"][0];
  EXPECT_TRUE(entry.contains("fouten"));
  EXPECT_TRUE(entry.contains("oordeel"));
  EXPECT_FALSE(entry.contains("redenering"));
  EXPECT_NE(entry["oordeel"].get<std::string>().find("gedeeltelijk_correct"),
            std::string::npos);
  EXPECT_NE(Build(Strategy::kStandard)[0].content.find("\"voorspellingen\""),
            std::string::npos);
}

TEST_F(PromptTest, CotSchemaPutsReasoningBeforeErrors) {
  const auto schema = OutputSchema(Strategy::kCot, "en", translations_);
  std::vector<std::string> keys;
  for (const auto& [key, value] : schema["predictions"][0].items()) {
    keys.push_back(key);
  }
  EXPECT_EQ(keys,
            (std::vector<std::string>{"id", "reasoning", "errors", "overall"}));
  const auto& error = schema["predictions"][0]["errors"][0];
  EXPECT_TRUE(error.contains("confidence"));
  EXPECT_TRUE(error.contains("justification"));
}

TEST_F(PromptTest, CotBuildsInEveryShippedLanguage) {
  for (const auto& lang : translations_.Languages()) {
    task_.language = lang;
    const auto messages = Build(Strategy::kCot);
    EXPECT_NE(messages[1].content.find("7. "), std::string::npos) << lang;
  }
}

TEST_F(PromptTest, RubricHasOneBlockPerCode) {
  task_.language = "en";
  const auto user = Build(Strategy::kRubric)[1].content;
  EXPECT_EQ(Count(user, "Mark as PRESENT if:"),
            taxonomy_.JudgeAssignableIds().size());
  const std::vector<std::string> two = {"SE-MD", "MS-LT"};
  EXPECT_EQ(Count(Build(Strategy::kRubric, &two)[1].content,
                  "Mark as PRESENT if:"),
            2u);
}

TEST_F(PromptTest, TaxonomySectionListsAssignableCodes) {
  const auto user = Build(Strategy::kStandard)[1].content;
  for (const auto& id : taxonomy_.JudgeAssignableIds()) {
    EXPECT_NE(user.find("\"code\": \"" + id + "\""), std::string::npos) << id;
  }
}

TEST_F(PromptTest, ClusterPromptIsFocused) {
  const auto partition =
      BuildClusterPartition(taxonomy_, taxonomy_.cluster_assignment());
  const auto& codes = partition.Codes("semantic_code");
  const auto user = Build(Strategy::kHierarchical, &codes)[1].content;
  EXPECT_NE(user.find(translations_.Text("nl", "hierarchical_focus")),
            std::string::npos);
  for (const auto& id : taxonomy_.JudgeAssignableIds()) {
    const bool listed =
        user.find("\"code\": \"" + id + "\"") != std::string::npos;
    EXPECT_EQ(listed, partition.ClusterOf(id) == "semantic_code") << id;
  }
}

TEST_F(PromptTest, Errors) {
  const std::vector<std::string> bogus = {"ZZ-1"};
  EXPECT_THROW(Build(Strategy::kStandard, &bogus), Error);
  task_.sample.predictions.clear();
  EXPECT_THROW(Build(Strategy::kStandard), Error);
}

TEST(StrategyTest, NamesRoundTrip) {
  for (auto s : {Strategy::kStandard, Strategy::kCot, Strategy::kRubric,
                 Strategy::kHierarchical}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_FALSE(ParseStrategy("zero_shot"));
}

}  // namespace
}  // namespace commenteval
