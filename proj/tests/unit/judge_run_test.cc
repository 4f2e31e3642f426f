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

#include <chrono>
#include <cstdlib>
#include <string>
#include <vector>

#include "commenteval/chat_client.h"
#include "commenteval/error.h"
#include "commenteval/judge.h"
#include "commenteval/taxonomy.h"
#include "commenteval/translations.h"
#include "fakes.h"
#include "gtest/gtest.h"
#include "judge_fixtures.h"
#include "mock_servers.h"

namespace commenteval {
namespace {

using nlohmann::json;
using testing::ScriptedChatClient;

const std::string kReply =
    R"({"predictions": [{"id": "P1", "errors": [], "overall": "correct"}]})";

std::vector<ChatMessage> Messages() {
  return {{"system", "judge"}, {"user", "comment"}};
}

struct SleepLog {
  std::vector<std::chrono::milliseconds> sleeps;
  Sleeper sleeper() {
    return [this](std::chrono::milliseconds d) { sleeps.push_back(d); };
  }
};

TEST(InvokeJudgeTest, RetriesRateLimitThenSucceeds) {
  int calls = 0;
  ScriptedChatClient client([&](const json&) -> std::string {
    if (calls++ == 0) throw TransportError("rate limited", 429, true);
    return kReply;
  });
  SleepLog log;
  const auto r =
      InvokeJudge(client, "m", Messages(), {}, {}, log.sleeper());
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.attempts, 2);
  EXPECT_EQ(r.raw, kReply);
  EXPECT_EQ(log.sleeps.size(), 1u);
  EXPECT_EQ(r.response_hash.size(), 64u);
}

TEST(InvokeJudgeTest, ExhaustionAndNonRetryable) {
  ScriptedChatClient busy([](const json&) -> std::string {
    throw TransportError("timeout", 0, true);
  });
  SleepLog log;
  RetryPolicy policy;
  policy.max_attempts = 4;
  const auto r = InvokeJudge(busy, "m", Messages(), {}, policy, log.sleeper());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.attempts, 4);
  EXPECT_EQ(log.sleeps.size(), 3u);
  for (std::size_t i = 1; i < log.sleeps.size(); ++i) {
    EXPECT_GT(log.sleeps[i], log.sleeps[i - 1]);
  }

  ScriptedChatClient bad([](const json&) -> std::string {
    throw TransportError("bad request", 400, false);
  });
  const auto once = InvokeJudge(bad, "m", Messages(), {}, {}, log.sleeper());
  EXPECT_FALSE(once.ok);
  EXPECT_EQ(once.attempts, 1);
  EXPECT_EQ(once.http_status, 400);
}

TEST(InvokeJudgeTest, RequestHashIsStable) {
  ScriptedChatClient client([](const json&) { return kReply; });
  DecodingConfig decoding;
  const auto a = InvokeJudge(client, "m", Messages(), decoding, {}, nullptr);
  const auto b = InvokeJudge(client, "m", Messages(), decoding, {}, nullptr);
  EXPECT_EQ(a.request_hash, b.request_hash);
  EXPECT_EQ(a.request_hash,
            ChatRequestHash(ChatRequestBody("m", Messages(), decoding)));
  decoding.seed = 7;
  EXPECT_NE(InvokeJudge(client, "m", Messages(), decoding, {}, nullptr)
                .request_hash,
            a.request_hash);
  const json body = client.requests().front();
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_EQ(body["seed"], 42);
  EXPECT_EQ(body["max_tokens"], 10000);
}

TEST(HttpChatClientTest, TalksToMockEndpoint) {
  int calls = 0;
  testing::MockChatServer server(
      [&](const json& body) -> std::pair<int, std::string> {
        if (calls++ == 0) return {429, "slow down"};
        return {200, "model=" + body.at("model").get<std::string>()};
      });
  ::setenv("CE_TEST_JUDGE_KEY", "sk-test", 1);
  HttpChatClient client(server.base_url(), "CE_TEST_JUDGE_KEY");
  SleepLog log;
  const auto r = InvokeJudge(client, "judge-7b", Messages(), {}, {},
                             log.sleeper());
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.raw, "model=judge-7b");
  EXPECT_EQ(r.attempts, 2);
  ASSERT_EQ(server.authorizations().size(), 2u);
  EXPECT_EQ(server.authorizations()[1], "Bearer sk-test");
  EXPECT_EQ(server.bodies()[1]["messages"][1]["content"], "comment");
}

TEST(HttpChatClientTest, ServerErrorIsTransportFailure) {
  testing::MockChatServer server(
      [](const json&) -> std::pair<int, std::string> { return {401, "no"}; });
  HttpChatClient client(server.base_url(), "CE_TEST_UNSET_KEY");
  try {
    client.Complete(ChatRequestBody("m", Messages(), {}));
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.http_status(), 401);
    EXPECT_FALSE(e.retryable());
  }
  EXPECT_EQ(server.authorizations().at(0), "");
}

class EvaluateTest : public ::testing::Test {
 protected:
  EvaluateTest() {
    task_.task_id = "t";
    task_.sample = testing::SampleAround(
        "s", "x = 1\n# increment the counter\nx += 1\n", "increment the counter");
    task_.sample.predictions = {{"a", "bump the counter"}, {"b", "count"}};
    task_.language = "en";
    task_.judge_model = "judge";
    task_.strategy = Strategy::kHierarchical;
    options_.sleeper = nullptr;
  }

  TaskOutcome Run(const std::function<std::string(const std::string&)>& reply) {
    ScriptedChatClient client([&](const json& body) {
      const auto cluster = testing::ClusterForRequest(body, partition_);
      EXPECT_FALSE(cluster.empty());
      return reply(cluster);
    });
    auto out = EvaluateTask(task_, taxonomy_, partition_, translations_, client,
                            options_);
    calls_ = client.calls();
    return out;
  }

  JudgeTask task_;
  Taxonomy taxonomy_ = Taxonomy::LoadDefault();
  ClusterPartition partition_ =
      BuildClusterPartition(taxonomy_, taxonomy_.cluster_assignment());
  TranslationTable translations_ = TranslationTable::LoadDefault();
  JudgeOptions options_;
  std::size_t calls_ = 0;
};

TEST_F(EvaluateTest, HierarchicalUnionAndMinimum) {
  const auto se = *partition_.ClusterOf("SE-MD");
  const auto ms = *partition_.ClusterOf("MS-LT");
  const auto out = Run([&](const std::string& cluster) {
    std::vector<std::string> codes;
    if (cluster == se) codes = {"SE-MD"};
    if (cluster == ms) codes = {"MS-LT"};
    const auto label = cluster == se ? OrdinalLabel::kPartiallyCorrect
                                     : OrdinalLabel::kCorrect;
    return testing::VerdictReply(2, label, codes);
  });
  EXPECT_EQ(calls_, 7u);
  ASSERT_EQ(out.calls.size(), 7u);
  ASSERT_EQ(out.outcome.status, OutcomeStatus::kOk) << out.outcome.detail;
  const auto& p = out.outcome.verdict->predictions;
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].model, "a");
  EXPECT_EQ(p[1].model, "b");
  for (const auto& v : p) {
    EXPECT_EQ(v.overall, OrdinalLabel::kPartiallyCorrect);
    std::vector<std::string> codes;
    for (const auto& e : v.errors) codes.push_back(e.code);
    std::sort(codes.begin(), codes.end());
    EXPECT_EQ(codes, (std::vector<std::string>{"MS-LT", "SE-MD"}));
  }
}

TEST_F(EvaluateTest, OneTruncatedClusterDegradesInstance) {
  const auto out = Run([&](const std::string& cluster) -> std::string {
    if (cluster == "semantic_code") return R"({"predictions": [{"id": "P1", )";
    return testing::VerdictReply(2, OrdinalLabel::kCorrect, {});
  });
  EXPECT_EQ(out.outcome.status, OutcomeStatus::kParseFailure);
  EXPECT_EQ(out.outcome.failure, ParseFailureKind::kTruncated);
  EXPECT_FALSE(out.outcome.verdict);
  EXPECT_EQ(out.calls.size(), 7u);
}

TEST_F(EvaluateTest, MetaClusterOnlyCountsWhenEnabled) {
  auto reply = [&](const std::string& cluster) {
    return cluster == kMetaCluster
               ? testing::VerdictReply(2, OrdinalLabel::kIncorrect, {"META-NE"})
               : testing::VerdictReply(2, OrdinalLabel::kCorrect, {});
  };
  auto out = Run(reply);
  ASSERT_EQ(out.outcome.status, OutcomeStatus::kOk);
  EXPECT_EQ(out.outcome.verdict->predictions[0].overall, OrdinalLabel::kCorrect);
  EXPECT_EQ(out.outcome.verdict->predictions[0].errors.at(0).code, "META-NE");
  options_.include_meta_in_overall = true;
  out = Run(reply);
  EXPECT_EQ(out.outcome.verdict->predictions[0].overall,
            OrdinalLabel::kIncorrect);
}

TEST_F(EvaluateTest, SingleCallStrategies) {
  task_.strategy = Strategy::kCot;
  ScriptedChatClient client([](const json&) { return kReply; });
  const auto out = EvaluateTask(task_, taxonomy_, partition_, translations_,
                                client, options_);
  EXPECT_EQ(client.calls(), 1u);
  ASSERT_EQ(out.calls.size(), 1u);
  EXPECT_EQ(out.calls[0].cluster, "");
  EXPECT_EQ(out.outcome.status, OutcomeStatus::kOk);
}

TEST_F(EvaluateTest, TransportFailureIsRecorded) {
  task_.strategy = Strategy::kStandard;
  options_.retry.max_attempts = 2;
  ScriptedChatClient client([](const json&) -> std::string {
    throw TransportError("down", 503, true);
  });
  const auto out = EvaluateTask(task_, taxonomy_, partition_, translations_,
                                client, options_);
  EXPECT_EQ(out.outcome.status, OutcomeStatus::kTransportFailure);
  EXPECT_EQ(out.calls.at(0).attempts, 2);
}

TEST(AggregateTest, MonotoneInErrorsAndLabels) {
  auto cluster = [](OrdinalLabel label, std::vector<std::string> codes) {
    JudgeOutcome o;
    o.status = OutcomeStatus::kOk;
    PredictionVerdict p{"P1", "m", label, {}, {}};
    for (auto& c : codes) p.errors.push_back({c, {}, {}});
    o.verdict = JudgeVerdict{{p}};
    return o;
  };
  const auto base = AggregateHierarchical(
      {{"linguistic_grammar", cluster(OrdinalLabel::kCorrect, {})},
       {"semantic_accuracy", cluster(OrdinalLabel::kCorrect, {"SE-MD"})}});
  const auto worse = AggregateHierarchical(
      {{"linguistic_grammar", cluster(OrdinalLabel::kPartiallyCorrect, {"LG-GR1"})},
       {"semantic_accuracy", cluster(OrdinalLabel::kCorrect, {"SE-MD"})}});
  const auto& b = base.verdict->predictions[0];
  const auto& w = worse.verdict->predictions[0];
  EXPECT_LE(ToIndex(w.overall), ToIndex(b.overall));
  EXPECT_EQ(b.errors.size(), 1u);
  EXPECT_EQ(w.errors.size(), 2u);
}

TEST(RunStatsTest, HandRatios) {
  auto make = [](const std::string& model, OutcomeStatus s,
                 ParseFailureKind k = ParseFailureKind::kNone) {
    TaskOutcome o;
    o.judge_model = model;
    o.language = "en";
    o.outcome.status = s;
    o.outcome.failure = k;
    return o;
  };
  std::vector<TaskOutcome> outcomes;
  for (int i = 0; i < 8; ++i) outcomes.push_back(make("m1", OutcomeStatus::kOk));
  for (int i = 0; i < 2; ++i) {
    outcomes.push_back(make("m1", OutcomeStatus::kParseFailure,
                            ParseFailureKind::kMalformed));
  }
  outcomes.push_back(make("m1", OutcomeStatus::kTransportFailure));
  for (int i = 0; i < 6; ++i) outcomes.push_back(make("m2", OutcomeStatus::kOk));
  for (int i = 0; i < 4; ++i) {
    outcomes.push_back(make("m2", OutcomeStatus::kEmptyResponse));
  }
  for (int i = 0; i < 3; ++i) outcomes.push_back(make("m3", OutcomeStatus::kOk));
  outcomes.push_back(make("m4", OutcomeStatus::kTransportFailure));

  const auto stats = RunStats(outcomes);
  const auto& m1 = stats.at({"m1", "en", "standard"});
  EXPECT_EQ(m1.total, 10u);
  EXPECT_EQ(m1.transport_failures, 1u);
  EXPECT_DOUBLE_EQ(*m1.parse_failure_rate, 0.2);
  EXPECT_EQ(m1.failure_kinds.at("malformed"), 2u);
  const auto& m2 = stats.at({"m2", "en", "standard"});
  EXPECT_DOUBLE_EQ(*m2.empty_response_rate, 0.4);
  EXPECT_DOUBLE_EQ(*m2.parse_failure_rate, 0.0);
  const auto& m3 = stats.at({"m3", "en", "standard"});
  EXPECT_EQ(*m3.parse_failure_rate, 0.0);
  EXPECT_EQ(*m3.empty_response_rate, 0.0);
  const auto& m4 = stats.at({"m4", "en", "standard"});
  EXPECT_FALSE(m4.parse_failure_rate);
  EXPECT_FALSE(m4.empty_response_rate);
}

TEST(RunJudgeTest, ParallelRunKeepsTaskOrder) {
  const auto taxonomy = Taxonomy::LoadDefault();
  const auto partition =
      BuildClusterPartition(taxonomy, taxonomy.cluster_assignment());
  const auto translations = TranslationTable::LoadDefault();
  std::vector<JudgeTask> tasks;
  for (int i = 0; i < 12; ++i) {
    JudgeTask t;
    t.task_id = "t" + std::to_string(i);
    t.sample = testing::SampleAround("s" + std::to_string(i),
                                     "a\n# note number " + std::to_string(i) +
                                         "\nb\n",
                                     "note number " + std::to_string(i));
    t.sample.predictions = {{"m", "note"}};
    t.language = "en";
    t.judge_model = "judge";
    tasks.push_back(std::move(t));
  }
  ScriptedChatClient client([](const json& body) {
    const std::string user = body["messages"][1]["content"];
    return user.find("note number 3\"") != std::string::npos ? "{}" : kReply;
  });
  RunOptions options;
  options.max_in_flight = 3;
  options.judge.sleeper = nullptr;
  const auto outcomes =
      RunJudge(tasks, taxonomy, partition, translations, client, options);
  ASSERT_EQ(outcomes.size(), 12u);
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(outcomes[i].task_id, "t" + std::to_string(i));
    EXPECT_EQ(outcomes[i].outcome.status, i == 3 ? OutcomeStatus::kEmptyResponse
                                                 : OutcomeStatus::kOk);
  }
}

TEST(TaskOutcomeJsonTest, RoundTrip) {
  TaskOutcome o;
  o.task_id = "judge/en/cot/s1";
  o.sample_id = "s1";
  o.language = "en";
  o.judge_model = "judge";
  o.strategy = Strategy::kCot;
  o.outcome.status = OutcomeStatus::kOk;
  o.outcome.raw = kReply;
  o.outcome.warnings = {"w"};
  PredictionVerdict p{"P1", "m", OrdinalLabel::kPartiallyCorrect,
                      {{"SE-MD", 0.25, std::string("vague")}},
                      std::string("because")};
  o.outcome.verdict = JudgeVerdict{{p}};
  o.calls.push_back({"", "rq", "rs", 2, OutcomeStatus::kOk,
                     ParseFailureKind::kNone, "t0", "t1"});
  const auto back = TaskOutcomeFromJson(TaskOutcomeToJson(o));
  EXPECT_EQ(back.task_id, o.task_id);
  EXPECT_EQ(back.strategy, Strategy::kCot);
  EXPECT_EQ(back.outcome.verdict, o.outcome.verdict);
  EXPECT_EQ(back.outcome.warnings, o.outcome.warnings);
  EXPECT_EQ(back.calls.at(0).attempts, 2);
  EXPECT_EQ(TaskOutcomeToJson(back), TaskOutcomeToJson(o));
}

}  // namespace
}  // namespace commenteval
