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

#include "commenteval/comment_syntax.h"

#include <algorithm>
#include <cctype>

#include "commenteval/data_paths.h"
#include "commenteval/error.h"
#include "commenteval/text.h"

namespace commenteval {
namespace {

bool IsHorizontalSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// Narrows [begin, end) to the comment body: drops repeats of the delimiter's
// decoration character (e.g. the extra slash of "///" or star of "/**") and
// surrounding whitespace.
std::pair<std::size_t, std::size_t> BodyRange(std::string_view content,
                                              std::size_t begin,
                                              std::size_t end, char lead,
                                              char trail) {
  if (std::ispunct(static_cast<unsigned char>(lead))) {
    while (begin < end && content[begin] == lead) ++begin;
  }
  while (begin < end && IsHorizontalSpace(content[begin])) ++begin;
  while (end > begin && IsHorizontalSpace(content[end - 1])) --end;
  if (std::ispunct(static_cast<unsigned char>(trail))) {
    while (end > begin && content[end - 1] == trail) --end;
    while (end > begin && IsHorizontalSpace(content[end - 1])) --end;
  }
  return {begin, end};
}

enum class MatchKind { kNone, kLine, kBlock, kString };

struct Match {
  MatchKind kind = MatchKind::kNone;
  std::size_t index = 0;
  std::size_t length = 0;
};

Match LongestOpener(std::string_view content, std::size_t pos,
                    const CommentSyntax& syntax) {
  Match best;
  auto consider = [&](MatchKind kind, std::size_t index,
                      const std::string& opener) {
    if (opener.empty() || opener.size() <= best.length) return;
    if (content.compare(pos, opener.size(), opener) == 0) {
      best = {kind, index, opener.size()};
    }
  };
  for (std::size_t i = 0; i < syntax.block.size(); ++i) {
    consider(MatchKind::kBlock, i, syntax.block[i].open);
  }
  for (std::size_t i = 0; i < syntax.line.size(); ++i) {
    consider(MatchKind::kLine, i, syntax.line[i]);
  }
  for (std::size_t i = 0; i < syntax.strings.size(); ++i) {
    consider(MatchKind::kString, i, syntax.strings[i].open);
  }
  return best;
}

std::size_t SkipString(std::string_view content, std::size_t pos,
                       const StringRule& rule) {
  const bool single_line = rule.open.size() == 1;
  while (pos < content.size()) {
    if (!rule.escape.empty() &&
        content.compare(pos, rule.escape.size(), rule.escape) == 0) {
      pos += rule.escape.size() + 1;
      continue;
    }
    if (content.compare(pos, rule.close.size(), rule.close) == 0) {
      return pos + rule.close.size();
    }
    if (single_line && content[pos] == '\n') return pos;
    ++pos;
  }
  return content.size();
}

}  // namespace

SyntaxTable SyntaxTable::FromJson(const nlohmann::json& doc) {
  SyntaxTable table;
  const nlohmann::json& langs =
      doc.contains("languages") ? doc.at("languages") : doc;
  for (const auto& [name, entry] : langs.items()) {
    CommentSyntax syntax;
    syntax.extensions =
        entry.value("extensions", std::vector<std::string>{});
    syntax.line = entry.value("line", std::vector<std::string>{});
    for (const auto& pair : entry.value("block", nlohmann::json::array())) {
      syntax.block.push_back({pair.at(0).get<std::string>(),
                              pair.at(1).get<std::string>()});
    }
    for (const auto& rule : entry.value("strings", nlohmann::json::array())) {
      syntax.strings.push_back(
          {rule.at(0).get<std::string>(), rule.at(1).get<std::string>(),
           rule.size() > 2 ? rule.at(2).get<std::string>() : std::string()});
    }
    table.Add(name, std::move(syntax));
  }
  return table;
}

SyntaxTable SyntaxTable::Load(const std::filesystem::path& path) {
  return FromJson(nlohmann::json::parse(ReadFile(path)));
}

SyntaxTable SyntaxTable::LoadDefault() {
  return Load(DataFile("comment_syntax.json"));
}

const CommentSyntax* SyntaxTable::Find(std::string_view pl_tag) const {
  const auto it = languages_.find(pl_tag);
  return it == languages_.end() ? nullptr : &it->second;
}

std::optional<std::string> SyntaxTable::LanguageForPath(
    std::string_view path) const {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string_view ext = path.substr(dot);
  for (const auto& [name, syntax] : languages_) {
    for (const auto& e : syntax.extensions) {
      if (e == ext) return name;
    }
  }
  return std::nullopt;
}

std::vector<std::string> SyntaxTable::Languages() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : languages_) out.push_back(name);
  return out;
}

void SyntaxTable::Add(std::string pl_tag, CommentSyntax syntax) {
  languages_[std::move(pl_tag)] = std::move(syntax);
}

std::vector<CommentSpan> ExtractComments(const SourceFile& file,
                                         const SyntaxTable& table) {
  const CommentSyntax* syntax = table.Find(file.pl_tag);
  if (syntax == nullptr) {
    throw Error(ErrorKind::kUnsupportedLanguage,
                "no comment syntax for '" + file.pl_tag + "'");
  }
  const std::string_view content = file.content;
  std::vector<CommentSpan> spans;
  auto emit = [&](std::pair<std::size_t, std::size_t> range,
                  CommentSyntaxKind kind) {
    if (range.first >= range.second) return;
    spans.push_back({range.first, range.second,
                     std::string(content.substr(range.first,
                                                range.second - range.first)),
                     kind});
  };

  std::size_t pos = 0;
  while (pos < content.size()) {
    const Match m = LongestOpener(content, pos, *syntax);
    switch (m.kind) {
      case MatchKind::kNone:
        ++pos;
        break;
      case MatchKind::kString:
        pos = SkipString(content, pos + m.length, syntax->strings[m.index]);
        break;
      case MatchKind::kLine: {
        const std::size_t body = pos + m.length;
        std::size_t eol = content.find('\n', body);
        if (eol == std::string_view::npos) eol = content.size();
        const std::string& opener = syntax->line[m.index];
        emit(BodyRange(content, body, eol, opener.back(), '\0'),
             CommentSyntaxKind::kLine);
        pos = eol;
        break;
      }
      case MatchKind::kBlock: {
        const DelimiterPair& pair = syntax->block[m.index];
        const std::size_t body = pos + m.length;
        std::size_t close = content.find(pair.close, body);
        std::size_t next = content.size();
        if (close == std::string_view::npos) {
          close = content.size();
        } else {
          next = close + pair.close.size();
        }
        emit(BodyRange(content, body, close, pair.open.back(),
                       pair.close.front()),
             CommentSyntaxKind::kBlock);
        pos = next;
        break;
      }
    }
  }
  return spans;
}

}  // namespace commenteval
