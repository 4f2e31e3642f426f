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

#include "commenteval/language_id.h"

#include <array>
#include <set>
#include <string>
#include <utility>

#include "commenteval/text.h"
#include "commenteval/tokenizer.h"

namespace commenteval {

const char* VerifyReasonName(VerifyReason reason) {
  switch (reason) {
    case VerifyReason::kNone: return "none";
    case VerifyReason::kWrongLanguage: return "wrong_language";
    case VerifyReason::kLowConfidence: return "low_confidence";
    case VerifyReason::kDetectorError: return "detector_error";
  }
  return "none";
}

LanguageVerdict VerifyLanguage(std::string_view text,
                               const LanguageDetector& detector,
                               std::string_view expected_tag,
                               double min_confidence) {
  LanguageVerdict verdict;
  try {
    verdict.guess = detector(text);
  } catch (const std::exception& e) {
    verdict.reason = VerifyReason::kDetectorError;
    verdict.detail = e.what();
    return verdict;
  }
  if (verdict.guess.tag != expected_tag) {
    verdict.reason = VerifyReason::kWrongLanguage;
    verdict.detail = "detected '" + verdict.guess.tag + "', expected '" +
                     std::string(expected_tag) + "'";
    return verdict;
  }
  if (verdict.guess.confidence < min_confidence) {
    verdict.reason = VerifyReason::kLowConfidence;
    verdict.detail = "confidence " + std::to_string(verdict.guess.confidence) +
                     " < " + std::to_string(min_confidence);
    return verdict;
  }
  verdict.accepted = true;
  return verdict;
}

namespace {

const std::set<std::string, std::less<>>& StopWords(int lang) {
  static const std::array<std::set<std::string, std::less<>>, 3> kWords = {{
      {"the", "and", "is", "to", "of", "a", "in", "for", "this", "that", "it",
       "with", "if", "be", "are", "not", "on", "as", "by", "from", "or", "an",
       "returns", "return", "value", "we", "when", "which", "will", "should",
       "all", "can", "used", "use", "get", "set", "new", "into", "then"},
      {"de", "het", "een", "en", "van", "is", "dat", "niet", "voor", "op",
       "met", "te", "zijn", "als", "er", "dit", "deze", "wordt", "worden",
       "naar", "bij", "om", "ook", "kan", "aan", "door", "wij", "geeft",
       "waarde", "alle", "moet", "nieuwe", "uit", "indien", "wanneer"},
      {"i", "w", "na", "z", "się", "nie", "do", "to", "jest", "że", "o",
       "jak", "dla", "oraz", "lub", "przez", "jeśli", "czy", "od", "po",
       "ten", "ta", "są", "tylko", "tego", "być", "funkcja", "zwraca",
       "wartość", "jeżeli", "gdy", "który", "która", "które", "dane"},
  }};
  return kWords[lang];
}

bool IsPolishLetter(char32_t cp) {
  switch (cp) {
    case 0x0105: case 0x0107: case 0x0119: case 0x0142: case 0x0144:
    case 0x015B: case 0x017A: case 0x017C: case 0x0104: case 0x0106:
    case 0x0118: case 0x0141: case 0x0143: case 0x015A: case 0x0179:
    case 0x017B:
      return true;
    default:
      return false;
  }
}

bool IsLatinLetter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
         (cp >= 0xC0 && cp <= 0x024F && cp != 0xD7 && cp != 0xF7);
}

LanguageGuess Detect(std::string_view text) {
  double greek = 0, cjk = 0, latin = 0, polish_marks = 0;
  for (const auto& cp : SplitCodePoints(text)) {
    if (IsGreek(cp.value)) {
      greek += 1;
    } else if (IsCjk(cp.value)) {
      cjk += 1;
    } else if (IsLatinLetter(cp.value)) {
      latin += 1;
      if (IsPolishLetter(cp.value)) polish_marks += 1;
    }
  }
  const double letters = greek + cjk + latin;
  if (letters == 0) return {"", 0.0};
  if (greek >= cjk && greek >= latin) return {"el", greek / letters};
  if (cjk >= latin) return {"zh", cjk / letters};

  static constexpr std::array<const char*, 3> kTags = {"en", "nl", "pl"};
  std::array<double, 3> hits = {0, 0, 0};
  hits[2] += polish_marks;
  for (const auto& tok : PunctuationTokenizer().Tokenize(text)) {
    const std::string word = CaseFold(tok.text);
    for (int lang = 0; lang < 3; ++lang) {
      if (StopWords(lang).count(word) > 0) hits[lang] += 1;
    }
  }
  const double total = hits[0] + hits[1] + hits[2];
  const double script_share = latin / letters;
  if (total == 0) return {"en", script_share / 3.0};
  int best = 0;
  for (int lang = 1; lang < 3; ++lang) {
    if (hits[lang] > hits[best]) best = lang;
  }
  return {kTags[best], script_share * hits[best] / total};
}

}  // namespace

LanguageDetector MakeHeuristicDetector() { return Detect; }

}  // namespace commenteval
