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
#ifndef COMMENTEVAL_LABELS_H_
#define COMMENTEVAL_LABELS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace commenteval {

// Expert accuracy scale. Values are ordinal: lower means worse.
enum class OrdinalLabel : int {
  kIncorrect = 0,
  kPartiallyCorrect = 1,
  kCorrect = 2,
};

inline constexpr int kOrdinalLabelCount = 3;
inline constexpr std::array<OrdinalLabel, 3> kAllOrdinalLabels = {
    OrdinalLabel::kIncorrect, OrdinalLabel::kPartiallyCorrect,
    OrdinalLabel::kCorrect};

// "incorrect", "partially_correct", "correct".
const char* LabelName(OrdinalLabel label);

// Accepts the canonical names plus "partially correct", "partial" and any
// letter case.
std::optional<OrdinalLabel> ParseLabel(std::string_view text);

inline int ToIndex(OrdinalLabel label) { return static_cast<int>(label); }

}  // namespace commenteval

#endif  // COMMENTEVAL_LABELS_H_
