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
#include <cctype>
#include <set>

#include "commenteval/judge.h"
#include "commenteval/text.h"

namespace commenteval {

using nlohmann::ordered_json;

const char* OutcomeStatusName(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kOk: return "ok";
    case OutcomeStatus::kParseFailure: return "parse_failure";
    case OutcomeStatus::kEmptyResponse: return "empty_response";
    case OutcomeStatus::kTransportFailure: return "transport_failure";
  }
  return "parse_failure";
}

const char* ParseFailureKindName(ParseFailureKind kind) {
  switch (kind) {
    case ParseFailureKind::kNone: return "none";
    case ParseFailureKind::kMalformed: return "malformed";
    case ParseFailureKind::kTruncated: return "truncated";
    case ParseFailureKind::kRefusal: return "refusal";
  }
  return "none";
}

std::optional<OutcomeStatus> ParseOutcomeStatus(std::string_view text) {
  for (auto s : {OutcomeStatus::kOk, OutcomeStatus::kParseFailure,
                 OutcomeStatus::kEmptyResponse,
                 OutcomeStatus::kTransportFailure}) {
    if (text == OutcomeStatusName(s)) return s;
  }
  return std::nullopt;
}

std::optional<ParseFailureKind> ParseParseFailureKind(std::string_view text) {
  for (auto k : {ParseFailureKind::kNone, ParseFailureKind::kMalformed,
                 ParseFailureKind::kTruncated, ParseFailureKind::kRefusal}) {
    if (text == ParseFailureKindName(k)) return k;
  }
  return std::nullopt;
}

namespace {

std::optional<ordered_json> TryParse(std::string_view text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded() || !(doc.is_object() || doc.is_array())) {
    return std::nullopt;
  }
  return doc;
}

// Finds the region from the first opening brace to its matching close,
// skipping string literals. Returns false when the input ends first.
bool BalancedRegion(std::string_view text, std::size_t* begin,
                    std::size_t* end) {
  std::size_t start = text.find('{');
  if (start == std::string_view::npos) start = text.find('[');
  if (start == std::string_view::npos) return false;
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      if (--depth == 0) {
        *begin = start;
        *end = i + 1;
        return true;
      }
    }
  }
  *begin = start;
  *end = text.size();
  return false;
}

}  // namespace

Extraction ExtractDocument(std::string_view raw) {
  Extraction ex;
  const std::string_view body = Trim(raw);
  if (body.empty()) return ex;
  if (auto doc = TryParse(body)) {
    ex.document = std::move(doc);
    ex.has_structure = true;
    return ex;
  }

  const std::size_t fence = body.find("```");
  if (fence != std::string_view::npos) {
    std::size_t content = body.find('\n', fence);
    content = content == std::string_view::npos ? body.size() : content + 1;
    const std::size_t close = body.find("```", content);
    const std::string_view inner =
        body.substr(content, close == std::string_view::npos
                                 ? std::string_view::npos
                                 : close - content);
    if (auto doc = TryParse(Trim(inner))) {
      ex.document = std::move(doc);
      ex.has_structure = true;
      return ex;
    }
    if (close == std::string_view::npos) {
      ex.truncated = true;
      ex.has_structure = true;
      return ex;
    }
  }

  std::size_t begin = 0, end = 0;
  const bool balanced = BalancedRegion(body, &begin, &end);
  if (begin == 0 && end == 0) return ex;  // no brace at all
  ex.has_structure = true;
  if (!balanced) {
    ex.truncated = true;
    return ex;
  }
  ex.document = TryParse(body.substr(begin, end - begin));
  return ex;
}

namespace {

std::string EnglishKey(const std::string& key, std::string_view lang,
                       const TranslationTable& t) {
  if (auto english = t.EnglishField(lang, key)) return *english;
  if (auto english = t.EnglishField("en", key)) return *english;
  return key;
}

ordered_json Remap(const ordered_json& node, std::string_view lang,
                   const TranslationTable& t) {
  if (node.is_object()) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : node.items()) {
      out[EnglishKey(key, lang, t)] = Remap(value, lang, t);
    }
    return out;
  }
  if (node.is_array()) {
    ordered_json out = ordered_json::array();
    for (const auto& v : node) out.push_back(Remap(v, lang, t));
    return out;
  }
  return node;
}

bool IsBlank(const ordered_json& node) {
  if (node.is_null()) return true;
  if (node.is_string()) return Trim(node.get_ref<const std::string&>()).empty();
  if (node.is_array() || node.is_object()) return node.empty();
  return false;
}

bool EntryIsEmpty(const ordered_json& entry) {
  for (const char* key : {"overall", "errors", "reasoning"}) {
    if (entry.contains(key) && !IsBlank(entry[key])) return false;
  }
  return true;
}

std::optional<OrdinalLabel> ReadLabel(const ordered_json& node,
                                      std::string_view lang,
                                      const TranslationTable& t) {
  if (!node.is_string()) return std::nullopt;
  const auto& text = node.get_ref<const std::string&>();
  if (auto label = t.LabelFromText(lang, text)) return label;
  return ParseLabel(text);
}

std::string NormalizeCode(std::string code) {
  std::string_view view = Trim(code);
  if (view.size() > 2 && view.front() == '[' && view.back() == ']') {
    view = Trim(view.substr(1, view.size() - 2));
  }
  return std::string(view);
}

bool MatchesRefusal(std::string_view raw, std::string_view lang,
                    const TranslationTable& t) {
  const std::string folded = CaseFold(raw);
  std::vector<std::string> patterns;
  for (std::string_view l : {lang, std::string_view("en")}) {
    try {
      for (auto& p : t.List(l, "refusal_patterns")) patterns.push_back(p);
    } catch (const std::exception&) {
    }
  }
  return std::any_of(patterns.begin(), patterns.end(), [&](const auto& p) {
    return folded.find(CaseFold(p)) != std::string::npos;
  });
}

JudgeOutcome Fail(JudgeOutcome outcome, ParseFailureKind kind,
                  std::string detail) {
  outcome.status = OutcomeStatus::kParseFailure;
  outcome.failure = kind;
  outcome.detail = std::move(detail);
  outcome.verdict.reset();
  return outcome;
}

JudgeOutcome Empty(JudgeOutcome outcome, std::string detail) {
  outcome.status = OutcomeStatus::kEmptyResponse;
  outcome.failure = ParseFailureKind::kNone;
  outcome.detail = std::move(detail);
  outcome.verdict.reset();
  return outcome;
}

}  // namespace

JudgeOutcome ParseResponse(std::string_view raw, std::string_view lang,
                           const TranslationTable& t, const Taxonomy& taxonomy,
                           const ParseOptions& options) {
  JudgeOutcome outcome;
  outcome.raw = std::string(raw);
  try {
    Extraction ex = ExtractDocument(raw);
    if (!ex.document) {
      if (ex.truncated) {
        return Fail(std::move(outcome), ParseFailureKind::kTruncated,
                    "response ends inside the structured output");
      }
      if (!ex.has_structure && MatchesRefusal(raw, lang, t)) {
        return Fail(std::move(outcome), ParseFailureKind::kRefusal,
                    "response declines the task");
      }
      return Fail(std::move(outcome), ParseFailureKind::kMalformed,
                  ex.has_structure ? "structured output does not parse"
                                   : "no structured output found");
    }

    const ordered_json doc = Remap(*ex.document, lang, t);
    ordered_json entries;
    if (doc.is_array()) {
      entries = doc;
    } else if (doc.contains("predictions")) {
      entries = doc["predictions"];
      if (entries.is_null()) entries = ordered_json::array();
      if (!entries.is_array()) {
        return Fail(std::move(outcome), ParseFailureKind::kMalformed,
                    "predictions is not a list");
      }
    } else if (doc.empty()) {
      return Empty(std::move(outcome), "empty object");
    } else if (doc.contains("overall") || doc.contains("errors")) {
      entries = ordered_json::array({doc});
    } else {
      return Fail(std::move(outcome), ParseFailureKind::kMalformed,
                  "no predictions field");
    }
    if (entries.empty()) return Empty(std::move(outcome), "no predictions");
    for (const auto& entry : entries) {
      if (!entry.is_object()) {
        return Fail(std::move(outcome), ParseFailureKind::kMalformed,
                    "prediction entry is not an object");
      }
    }
    if (std::all_of(entries.begin(), entries.end(), EntryIsEmpty)) {
      return Empty(std::move(outcome), "all prediction entries are empty");
    }

    JudgeVerdict verdict;
    std::set<std::string> seen;
    const bool cot = options.strategy == Strategy::kCot;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const ordered_json& entry = entries[i];
      PredictionVerdict p;
      if (entry.contains("id") && entry["id"].is_string()) {
        p.id = Trim(entry["id"].get_ref<const std::string&>());
      } else if (entry.contains("id") && entry["id"].is_number_integer()) {
        p.id = "P" + std::to_string(entry["id"].get<long long>());
      } else {
        p.id = PredictionId(i);
        outcome.warnings.push_back("entry " + std::to_string(i + 1) +
                                   " has no id; assumed " + p.id);
      }
      if (!seen.insert(p.id).second) {
        outcome.warnings.push_back("duplicate id " + p.id);
      }
      if (p.id.size() > 1 && (p.id[0] == 'P' || p.id[0] == 'p')) {
        const std::string digits = p.id.substr(1);
        if (std::all_of(digits.begin(), digits.end(), ::isdigit)) {
          const std::size_t k = std::stoul(digits);
          if (k >= 1 && k <= options.prediction_models.size()) {
            p.model = options.prediction_models[k - 1];
          }
        }
      }
      if (p.model.empty() && !options.prediction_models.empty()) {
        outcome.warnings.push_back("id " + p.id + " matches no prediction");
      }

      const auto label = entry.contains("overall")
                             ? ReadLabel(entry["overall"], lang, t)
                             : std::nullopt;
      if (!label) {
        return Fail(std::move(outcome), ParseFailureKind::kMalformed,
                    "prediction " + p.id + " lacks a valid overall label");
      }
      p.overall = *label;

      if (entry.contains("reasoning") && entry["reasoning"].is_string() &&
          !IsBlank(entry["reasoning"])) {
        p.reasoning = entry["reasoning"].get<std::string>();
      } else if (cot) {
        outcome.warnings.push_back("prediction " + p.id + " has no reasoning");
      }
      if (cot && entry.contains("reasoning") && entry.contains("errors")) {
        std::size_t pos = 0, reasoning_pos = 0, errors_pos = 0;
        for (const auto& [key, value] : entry.items()) {
          if (key == "reasoning") reasoning_pos = pos;
          if (key == "errors") errors_pos = pos;
          ++pos;
        }
        if (reasoning_pos > errors_pos) {
          outcome.warnings.push_back("prediction " + p.id +
                                     " gives reasoning after errors");
        }
      }

      const ordered_json errors =
          entry.contains("errors") ? entry["errors"] : ordered_json::array();
      if (!errors.is_array() && !errors.is_null()) {
        outcome.warnings.push_back("prediction " + p.id +
                                   ": errors is not a list");
      }
      for (const auto& item : errors.is_array() ? errors : ordered_json::array()) {
        ErrorAssignment a;
        if (item.is_string()) {
          a.code = NormalizeCode(item.get<std::string>());
        } else if (item.is_object() && item.contains("code") &&
                   item["code"].is_string()) {
          a.code = NormalizeCode(item["code"].get<std::string>());
          if (item.contains("confidence")) {
            const auto& c = item["confidence"];
            if (c.is_number() && c.get<double>() >= 0.0 &&
                c.get<double>() <= 1.0) {
              a.confidence = c.get<double>();
            } else {
              outcome.warnings.push_back("prediction " + p.id + ": code " +
                                         a.code + " has an invalid confidence");
            }
          }
          if (item.contains("justification") &&
              item["justification"].is_string()) {
            a.justification = item["justification"].get<std::string>();
          }
        } else {
          outcome.warnings.push_back("prediction " + p.id +
                                     ": unreadable error entry");
          continue;
        }
        if (taxonomy.Find(a.code) == nullptr) {
          outcome.warnings.push_back("prediction " + p.id + ": unknown code " +
                                     a.code);
          continue;
        }
        if (cot && !a.confidence) {
          outcome.warnings.push_back("prediction " + p.id + ": code " + a.code +
                                     " has no confidence");
        }
        const bool duplicate =
            std::any_of(p.errors.begin(), p.errors.end(),
                        [&](const ErrorAssignment& e) { return e.code == a.code; });
        if (!duplicate) p.errors.push_back(std::move(a));
      }
      verdict.predictions.push_back(std::move(p));
    }
    if (!options.prediction_models.empty() &&
        verdict.predictions.size() != options.prediction_models.size()) {
      outcome.warnings.push_back(
          "judged " + std::to_string(verdict.predictions.size()) + " of " +
          std::to_string(options.prediction_models.size()) + " predictions");
    }
    outcome.status = OutcomeStatus::kOk;
    outcome.failure = ParseFailureKind::kNone;
    outcome.verdict = std::move(verdict);
    return outcome;
  } catch (const std::exception& e) {
    return Fail(std::move(outcome), ParseFailureKind::kMalformed, e.what());
  }
}

}  // namespace commenteval
