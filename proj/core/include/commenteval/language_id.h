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
#ifndef COMMENTEVAL_LANGUAGE_ID_H_
#define COMMENTEVAL_LANGUAGE_ID_H_

#include <functional>
#include <string>
#include <string_view>

namespace commenteval {

struct LanguageGuess {
  std::string tag;
  double confidence = 0.0;  // [0, 1]
};

// May throw; VerifyLanguage turns exceptions into detector_error rejections.
using LanguageDetector = std::function<LanguageGuess(std::string_view)>;

enum class VerifyReason { kNone, kWrongLanguage, kLowConfidence, kDetectorError };

const char* VerifyReasonName(VerifyReason reason);

struct LanguageVerdict {
  bool accepted = false;
  VerifyReason reason = VerifyReason::kNone;
  LanguageGuess guess;
  std::string detail;
};

inline constexpr double kDefaultMinLanguageConfidence = 0.5;

LanguageVerdict VerifyLanguage(
    std::string_view text, const LanguageDetector& detector,
    std::string_view expected_tag,
    double min_confidence = kDefaultMinLanguageConfidence);

// Script and stop-word detector for en, nl, el, pl and zh. Good enough to
// flag obvious mismatches; plug in a real identifier for production runs.
LanguageDetector MakeHeuristicDetector();

}  // namespace commenteval

#endif  // COMMENTEVAL_LANGUAGE_ID_H_
