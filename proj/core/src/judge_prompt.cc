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

#include "commenteval/error.h"
#include "commenteval/judge.h"

namespace commenteval {

using nlohmann::ordered_json;

const char* StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kStandard: return "standard";
    case Strategy::kCot: return "cot";
    case Strategy::kRubric: return "rubric";
    case Strategy::kHierarchical: return "hierarchical";
  }
  return "standard";
}

std::optional<Strategy> ParseStrategy(std::string_view text) {
  for (auto s : {Strategy::kStandard, Strategy::kCot, Strategy::kRubric,
                 Strategy::kHierarchical}) {
    if (text == StrategyName(s)) return s;
  }
  return std::nullopt;
}

std::vector<std::string> PredictionOrder(const CommentSample& sample) {
  std::vector<std::string> models;
  for (const auto& [model, text] : sample.predictions) models.push_back(model);
  return models;  // std::map keeps them sorted by name
}

std::string PredictionId(std::size_t index) {
  return "P" + std::to_string(index + 1);
}

ordered_json OutputSchema(Strategy strategy, std::string_view lang,
                          const TranslationTable& t) {
  const bool cot = strategy == Strategy::kCot;
  ordered_json error;
  error[t.Field(lang, "code")] = "<code>";
  if (cot) {
    error[t.Field(lang, "confidence")] = 0.0;
    error[t.Field(lang, "justification")] = "...";
  }
  ordered_json entry;
  entry[t.Field(lang, "id")] = "P1";
  if (cot) entry[t.Field(lang, "reasoning")] = "...";
  entry[t.Field(lang, "errors")] = ordered_json::array({error});
  entry[t.Field(lang, "overall")] =
      t.Label(lang, OrdinalLabel::kCorrect) + " | " +
      t.Label(lang, OrdinalLabel::kPartiallyCorrect) + " | " +
      t.Label(lang, OrdinalLabel::kIncorrect);
  ordered_json schema;
  schema[t.Field(lang, "predictions")] = ordered_json::array({entry});
  return schema;
}

namespace {

std::string Heading(const TranslationTable& t, std::string_view lang,
                    std::string_view key) {
  return "## " + t.Text(lang, key) + "\n";
}

std::string Numbered(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += std::to_string(i + 1) + ". " + items[i] + "\n";
  }
  return out;
}

std::string BiasDirectives(const TranslationTable& t, std::string_view lang) {
  return "- " + t.Text(lang, "bias_verbosity") + "\n- " +
         t.Text(lang, "bias_position") + "\n- " +
         t.Text(lang, "bias_consistency") + "\n";
}

ordered_json TaxonomyDocument(const Taxonomy& taxonomy,
                              const std::vector<std::string>& codes,
                              std::string_view lang,
                              const TranslationTable& t) {
  ordered_json list = ordered_json::array();
  for (const auto& id : codes) {
    const ErrorCode* code = taxonomy.Find(id);
    ordered_json entry;
    entry[t.Field(lang, "code")] = code->id;
    entry[t.Field(lang, "name")] = code->Name(lang);
    if (!code->category.empty()) {
      entry[t.Field(lang, "category")] = code->category;
    }
    entry[t.Field(lang, "inclusion")] = code->Inclusion(lang);
    entry[t.Field(lang, "exclusion")] = code->Exclusion(lang);
    list.push_back(std::move(entry));
  }
  ordered_json doc;
  doc[t.Field(lang, "taxonomy")] = std::move(list);
  return doc;
}

}  // namespace

std::vector<ChatMessage> BuildPrompt(const JudgeTask& task,
                                     const Taxonomy& taxonomy,
                                     const TranslationTable& t,
                                     const std::vector<std::string>* cluster_codes) {
  const std::string& lang = task.language;
  if (task.sample.predictions.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sample " + task.sample.id + " has no predictions to judge");
  }
  std::vector<std::string> codes =
      cluster_codes != nullptr ? *cluster_codes : taxonomy.JudgeAssignableIds();
  for (const auto& id : codes) {
    if (taxonomy.Find(id) == nullptr) {
      throw Error(ErrorKind::kInvalidArgument, "unknown code " + id);
    }
  }

  std::string system = t.Text(lang, "system_role") + "\n" +
                       t.Text(lang, "task_description") + "\n\n";
  system += Heading(t, lang, "section_principles") + BiasDirectives(t, lang);
  system += "\n" + Heading(t, lang, "section_labels");
  system += "- " + t.Text(lang, "label_correct_def") + "\n";
  system += "- " + t.Text(lang, "label_partial_def") + "\n";
  system += "- " + t.Text(lang, "label_incorrect_def") + "\n";
  system += "\n" + Heading(t, lang, "section_output");
  system += t.Text(lang, "output_instruction") + "\n";
  system += OutputSchema(task.strategy, lang, t).dump(2) + "\n";

  std::string user = Heading(t, lang, "section_steps");
  if (task.strategy == Strategy::kCot) {
    const auto steps = t.List(lang, "cot_steps");
    if (steps.size() != 7) {
      throw Error(ErrorKind::kMissingTranslation,
                  "cot_steps for '" + lang + "' must list seven steps");
    }
    user += t.Text(lang, "cot_intro") + "\n" + Numbered(steps);
  } else {
    user += Numbered(t.List(lang, "standard_steps"));
  }
  user += BiasDirectives(t, lang);

  if (task.strategy == Strategy::kRubric) {
    user += "\n" + Heading(t, lang, "section_rubric");
    user += FormatRubric(taxonomy, lang, t, &codes).Render();
  } else {
    user += "\n" + Heading(t, lang, "section_taxonomy");
    user += TaxonomyDocument(taxonomy, codes, lang, t).dump(2) + "\n";
  }
  if (cluster_codes != nullptr) {
    user += t.Text(lang, "hierarchical_focus") + "\n";
  }

  user += "\n" + Heading(t, lang, "section_input");
  user += t.Text(lang, "fim_marker_note") + "\n";
  ordered_json input;
  input[t.Field(lang, "original_comment")] = task.sample.ground_truth;
  input[t.Field(lang, "code_context")] = std::string(task.sample.prefix()) +
                                         "<FILL_ME>" +
                                         std::string(task.sample.suffix());
  ordered_json predictions = ordered_json::array();
  const auto order = PredictionOrder(task.sample);
  for (std::size_t i = 0; i < order.size(); ++i) {
    ordered_json p;
    p[t.Field(lang, "id")] = PredictionId(i);
    p[t.Field(lang, "text")] = task.sample.predictions.at(order[i]);
    predictions.push_back(std::move(p));
  }
  input[t.Field(lang, "predictions")] = std::move(predictions);
  user += input.dump(2) + "\n";

  return {{"system", system}, {"user", user}};
}

}  // namespace commenteval
