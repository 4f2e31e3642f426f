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

#include <algorithm>
#include <chrono>
#include <ctime>
#include <thread>

#include "commenteval/error.h"
#include "commenteval/hash.h"
#include "commenteval/judge.h"
#include "commenteval/parallel.h"

namespace commenteval {

using nlohmann::json;

namespace {

std::string NowUtc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

InvokeResult InvokeJudge(ChatClient& client, const std::string& model,
                         const std::vector<ChatMessage>& messages,
                         const DecodingConfig& decoding,
                         const RetryPolicy& retry, const Sleeper& sleeper) {
  const json body = ChatRequestBody(model, messages, decoding);
  InvokeResult result;
  result.request_hash = ChatRequestHash(body);
  result.started = NowUtc();
  for (int attempt = 1;; ++attempt) {
    result.attempts = attempt;
    try {
      result.raw = client.Complete(body);
      result.ok = true;
      result.http_status = 200;
      result.response_hash = Sha256Hex(result.raw);
      break;
    } catch (const TransportError& e) {
      result.error = e.what();
      result.http_status = e.http_status();
      if (!e.retryable() || attempt >= retry.max_attempts) break;
    } catch (const std::exception& e) {
      result.error = e.what();
      break;
    }
    if (sleeper) sleeper(BackoffDelay(retry, attempt));
  }
  result.finished = NowUtc();
  return result;
}

JudgeOutcome AggregateHierarchical(
    const std::vector<std::pair<std::string, JudgeOutcome>>& cluster_outcomes,
    bool include_meta_in_overall) {
  JudgeOutcome result;
  json raws = json::object();
  for (const auto& [cluster, o] : cluster_outcomes) raws[cluster] = o.raw;
  result.raw = raws.dump();
  for (const auto& [cluster, o] : cluster_outcomes) {
    for (const auto& w : o.warnings) {
      result.warnings.push_back(cluster + ": " + w);
    }
  }
  for (const auto& [cluster, o] : cluster_outcomes) {
    if (o.status != OutcomeStatus::kOk || !o.verdict) {
      result.status = o.status == OutcomeStatus::kOk
                          ? OutcomeStatus::kParseFailure
                          : o.status;
      result.failure = o.status == OutcomeStatus::kOk ? ParseFailureKind::kMalformed
                                                      : o.failure;
      result.detail = cluster + ": " + o.detail;
      return result;
    }
  }

  JudgeVerdict merged;
  auto find = [&](const std::string& id) -> PredictionVerdict* {
    for (auto& p : merged.predictions) {
      if (p.id == id) return &p;
    }
    return nullptr;
  };
  // Overall labels that count toward the minimum, per prediction id.
  std::map<std::string, std::vector<OrdinalLabel>> counted;
  std::map<std::string, std::vector<OrdinalLabel>> all;
  for (const auto& [cluster, o] : cluster_outcomes) {
    const bool counts =
        include_meta_in_overall || cluster != std::string(kMetaCluster);
    for (const auto& p : o.verdict->predictions) {
      PredictionVerdict* target = find(p.id);
      if (target == nullptr) {
        merged.predictions.push_back({p.id, p.model, p.overall, {}, {}});
        target = &merged.predictions.back();
      }
      if (target->model.empty()) target->model = p.model;
      for (const auto& e : p.errors) {
        const bool present = std::any_of(
            target->errors.begin(), target->errors.end(),
            [&](const ErrorAssignment& x) { return x.code == e.code; });
        if (!present) target->errors.push_back(e);
      }
      if (p.reasoning) {
        std::string text = "[" + cluster + "] " + *p.reasoning;
        target->reasoning =
            target->reasoning ? *target->reasoning + "\n" + text : text;
      }
      all[p.id].push_back(p.overall);
      if (counts) counted[p.id].push_back(p.overall);
    }
  }
  for (auto& p : merged.predictions) {
    const auto& labels = counted[p.id].empty() ? all[p.id] : counted[p.id];
    p.overall = *std::min_element(labels.begin(), labels.end(),
                                  [](OrdinalLabel a, OrdinalLabel b) {
                                    return ToIndex(a) < ToIndex(b);
                                  });
  }
  result.status = OutcomeStatus::kOk;
  result.failure = ParseFailureKind::kNone;
  result.verdict = std::move(merged);
  return result;
}

namespace {

JudgeOutcome TransportFailure(const InvokeResult& inv) {
  JudgeOutcome o;
  o.status = OutcomeStatus::kTransportFailure;
  o.detail = inv.error + " (" + std::to_string(inv.attempts) + " attempt(s))";
  return o;
}

CallRecord MakeCall(const std::string& cluster, const InvokeResult& inv,
                    const JudgeOutcome& o) {
  CallRecord call;
  call.cluster = cluster;
  call.request_hash = inv.request_hash;
  call.response_hash = inv.response_hash;
  call.attempts = inv.attempts;
  call.status = o.status;
  call.failure = o.failure;
  call.started = inv.started;
  call.finished = inv.finished;
  return call;
}

}  // namespace

TaskOutcome EvaluateTask(const JudgeTask& task, const Taxonomy& taxonomy,
                         const ClusterPartition& partition,
                         const TranslationTable& translations,
                         ChatClient& client, const JudgeOptions& options) {
  TaskOutcome out;
  out.task_id = task.task_id;
  out.sample_id = task.sample.id;
  out.language = task.language;
  out.judge_model = task.judge_model;
  out.strategy = task.strategy;
  ParseOptions parse;
  parse.strategy = task.strategy;
  parse.prediction_models = PredictionOrder(task.sample);

  auto run_one = [&](const std::vector<std::string>* codes,
                     const std::string& cluster) {
    const auto messages = BuildPrompt(task, taxonomy, translations, codes);
    const InvokeResult inv =
        InvokeJudge(client, task.judge_model, messages, options.decoding,
                    options.retry, options.sleeper);
    JudgeOutcome o = inv.ok ? ParseResponse(inv.raw, task.language,
                                            translations, taxonomy, parse)
                            : TransportFailure(inv);
    out.calls.push_back(MakeCall(cluster, inv, o));
    return o;
  };

  if (task.strategy != Strategy::kHierarchical) {
    out.outcome = run_one(nullptr, "");
    return out;
  }
  std::vector<std::pair<std::string, JudgeOutcome>> per_cluster;
  for (const auto& [cluster, codes] : partition.clusters) {
    if (codes.empty()) continue;
    per_cluster.emplace_back(cluster, run_one(&codes, cluster));
  }
  out.outcome =
      AggregateHierarchical(per_cluster, options.include_meta_in_overall);
  return out;
}

TokenBudget::TokenBudget(double tokens_per_minute)
    : rate_per_ms_(tokens_per_minute / 60000.0),
      capacity_(tokens_per_minute),
      available_(tokens_per_minute),
      last_ms_(std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
                   .count()) {}

void TokenBudget::Acquire(double tokens) {
  if (capacity_ <= 0.0) return;
  // A request larger than the whole budget waits for a full bucket.
  tokens = std::min(tokens, capacity_);
  while (true) {
    double wait_ms = 0.0;
    {
      std::lock_guard<std::mutex> lock(mu_);
      const std::int64_t now =
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now().time_since_epoch())
              .count();
      available_ =
          std::min(capacity_, available_ + (now - last_ms_) * rate_per_ms_);
      last_ms_ = now;
      if (available_ >= tokens) {
        available_ -= tokens;
        return;
      }
      wait_ms = (tokens - available_) / rate_per_ms_;
    }
    std::this_thread::sleep_for(
        std::chrono::milliseconds(static_cast<std::int64_t>(wait_ms) + 1));
  }
}

namespace {

class BudgetedClient final : public ChatClient {
 public:
  BudgetedClient(ChatClient& inner, TokenBudget& budget)
      : inner_(inner), budget_(budget) {}

  std::string Complete(const json& request_body) override {
    // Rough prompt size: four bytes per token.
    budget_.Acquire(static_cast<double>(request_body.dump().size()) / 4.0);
    return inner_.Complete(request_body);
  }

 private:
  ChatClient& inner_;
  TokenBudget& budget_;
};

}  // namespace

std::vector<TaskOutcome> RunJudge(const std::vector<JudgeTask>& tasks,
                                  const Taxonomy& taxonomy,
                                  const ClusterPartition& partition,
                                  const TranslationTable& translations,
                                  ChatClient& client,
                                  const RunOptions& options) {
  TokenBudget budget(options.tokens_per_minute);
  BudgetedClient budgeted(client, budget);
  ChatClient& effective =
      options.tokens_per_minute > 0.0 ? static_cast<ChatClient&>(budgeted)
                                      : client;
  std::vector<TaskOutcome> outcomes(tasks.size());
  ParallelFor(tasks.size(), options.max_in_flight, [&](std::size_t i) {
    outcomes[i] = EvaluateTask(tasks[i], taxonomy, partition, translations,
                               effective, options.judge);
  });
  return outcomes;
}

std::map<CellKey, CellStats> RunStats(const std::vector<TaskOutcome>& outcomes) {
  std::map<CellKey, CellStats> cells;
  for (const auto& o : outcomes) {
    CellStats& cell =
        cells[{o.judge_model, o.language, StrategyName(o.strategy)}];
    switch (o.outcome.status) {
      case OutcomeStatus::kTransportFailure:
        ++cell.transport_failures;
        continue;
      case OutcomeStatus::kOk:
        ++cell.ok;
        break;
      case OutcomeStatus::kEmptyResponse:
        ++cell.empty_responses;
        break;
      case OutcomeStatus::kParseFailure:
        ++cell.parse_failures;
        ++cell.failure_kinds[ParseFailureKindName(o.outcome.failure)];
        break;
    }
    ++cell.total;
  }
  for (auto& [key, cell] : cells) {
    if (cell.total == 0) continue;
    cell.parse_failure_rate =
        static_cast<double>(cell.parse_failures) / static_cast<double>(cell.total);
    cell.empty_response_rate = static_cast<double>(cell.empty_responses) /
                               static_cast<double>(cell.total);
  }
  return cells;
}

json TaskOutcomeToJson(const TaskOutcome& o) {
  json out;
  out["task_id"] = o.task_id;
  out["id"] = o.sample_id;
  out["language"] = o.language;
  out["judge_model"] = o.judge_model;
  out["strategy"] = StrategyName(o.strategy);
  out["status"] = OutcomeStatusName(o.outcome.status);
  out["failure"] = ParseFailureKindName(o.outcome.failure);
  out["detail"] = o.outcome.detail;
  out["verdict"] = nullptr;
  if (o.outcome.verdict) {
    json preds = json::array();
    for (const auto& p : o.outcome.verdict->predictions) {
      json errors = json::array();
      for (const auto& e : p.errors) {
        errors.push_back(
            {{"code", e.code},
             {"confidence", e.confidence ? json(*e.confidence) : json()},
             {"justification",
              e.justification ? json(*e.justification) : json()}});
      }
      preds.push_back({{"id", p.id},
                       {"model", p.model},
                       {"overall", LabelName(p.overall)},
                       {"reasoning", p.reasoning ? json(*p.reasoning) : json()},
                       {"errors", std::move(errors)}});
    }
    out["verdict"] = {{"predictions", std::move(preds)}};
  }
  out["warnings"] = o.outcome.warnings;
  out["raw"] = o.outcome.raw;
  out["calls"] = json::array();
  for (const auto& c : o.calls) {
    out["calls"].push_back({{"cluster", c.cluster},
                            {"request_hash", c.request_hash},
                            {"response_hash", c.response_hash},
                            {"attempts", c.attempts},
                            {"status", OutcomeStatusName(c.status)},
                            {"failure", ParseFailureKindName(c.failure)},
                            {"started", c.started},
                            {"finished", c.finished}});
  }
  return out;
}

TaskOutcome TaskOutcomeFromJson(const json& r) {
  try {
    TaskOutcome o;
    o.task_id = r.value("task_id", std::string());
    o.sample_id = r.at("id").get<std::string>();
    o.language = r.value("language", std::string());
    o.judge_model = r.value("judge_model", std::string());
    o.strategy = ParseStrategy(r.at("strategy").get<std::string>())
                     .value_or(Strategy::kStandard);
    o.outcome.status = ParseOutcomeStatus(r.at("status").get<std::string>())
                           .value_or(OutcomeStatus::kParseFailure);
    o.outcome.failure =
        ParseParseFailureKind(r.value("failure", std::string("none")))
            .value_or(ParseFailureKind::kNone);
    o.outcome.detail = r.value("detail", std::string());
    o.outcome.raw = r.value("raw", std::string());
    o.outcome.warnings =
        r.value("warnings", std::vector<std::string>());
    if (r.contains("verdict") && r["verdict"].is_object()) {
      JudgeVerdict v;
      for (const auto& p : r["verdict"].at("predictions")) {
        PredictionVerdict pv;
        pv.id = p.at("id").get<std::string>();
        pv.model = p.value("model", std::string());
        const auto label = ParseLabel(p.at("overall").get<std::string>());
        if (!label) throw Error(ErrorKind::kSchema, "bad overall label");
        pv.overall = *label;
        if (p.contains("reasoning") && p["reasoning"].is_string()) {
          pv.reasoning = p["reasoning"].get<std::string>();
        }
        for (const auto& e : p.value("errors", json::array())) {
          ErrorAssignment a;
          a.code = e.at("code").get<std::string>();
          if (e.contains("confidence") && e["confidence"].is_number()) {
            a.confidence = e["confidence"].get<double>();
          }
          if (e.contains("justification") && e["justification"].is_string()) {
            a.justification = e["justification"].get<std::string>();
          }
          pv.errors.push_back(std::move(a));
        }
        v.predictions.push_back(std::move(pv));
      }
      o.outcome.verdict = std::move(v);
    }
    for (const auto& c : r.value("calls", json::array())) {
      CallRecord call;
      call.cluster = c.value("cluster", std::string());
      call.request_hash = c.value("request_hash", std::string());
      call.response_hash = c.value("response_hash", std::string());
      call.attempts = c.value("attempts", 0);
      call.status = ParseOutcomeStatus(c.value("status", std::string("ok")))
                        .value_or(OutcomeStatus::kOk);
      call.failure =
          ParseParseFailureKind(c.value("failure", std::string("none")))
              .value_or(ParseFailureKind::kNone);
      call.started = c.value("started", std::string());
      call.finished = c.value("finished", std::string());
      o.calls.push_back(std::move(call));
    }
    return o;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema,
                std::string("malformed outcome record: ") + e.what());
  }
}

}  // namespace commenteval
