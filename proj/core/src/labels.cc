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

#include "commenteval/labels.h"

#include "commenteval/text.h"

namespace commenteval {

const char* LabelName(OrdinalLabel label) {
  switch (label) {
    case OrdinalLabel::kIncorrect: return "incorrect";
    case OrdinalLabel::kPartiallyCorrect: return "partially_correct";
    case OrdinalLabel::kCorrect: return "correct";
  }
  return "incorrect";
}

std::optional<OrdinalLabel> ParseLabel(std::string_view text) {
  std::string folded = CaseFold(Trim(text));
  for (char& c : folded) {
    if (c == ' ' || c == '-') c = '_';
  }
  if (folded == "correct") return OrdinalLabel::kCorrect;
  if (folded == "partially_correct" || folded == "partial" ||
      folded == "partially") {
    return OrdinalLabel::kPartiallyCorrect;
  }
  if (folded == "incorrect") return OrdinalLabel::kIncorrect;
  return std::nullopt;
}

}  // namespace commenteval
