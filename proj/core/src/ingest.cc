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

#include "commenteval/ingest.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "commenteval/error.h"
#include "commenteval/hash.h"
#include "commenteval/http.h"
#include "commenteval/parallel.h"
#include "commenteval/text.h"

namespace commenteval {

std::string ContentKey(std::string_view content) {
  return Sha256Hex(NormalizeWhitespace(content));
}

namespace {

struct KeywordOutcome {
  std::vector<SourceFile> files;
  std::optional<IngestWarning> warning;
};

KeywordOutcome SearchWithRetry(const std::string& word, SearchClient& client,
                               const IngestOptions& options) {
  KeywordOutcome outcome;
  for (int attempt = 1;; ++attempt) {
    try {
      outcome.files = client.Search(word, options.per_word_limit);
      if (outcome.files.size() > options.per_word_limit) {
        outcome.files.resize(options.per_word_limit);
      }
      return outcome;
    } catch (const TransportError& e) {
      if (!e.retryable() || attempt >= options.retry.max_attempts) {
        outcome.warning = IngestWarning{
            word, std::string(e.what()) + " after " + std::to_string(attempt) +
                      " attempt(s)"};
        return outcome;
      }
      if (options.sleeper) options.sleeper(BackoffDelay(options.retry, attempt));
    }
  }
}

}  // namespace

IngestResult IngestKeywords(const std::vector<std::string>& words,
                            SearchClient& client,
                            const IngestOptions& options) {
  std::vector<KeywordOutcome> outcomes(words.size());
  ParallelFor(words.size(), options.max_in_flight, [&](std::size_t i) {
    outcomes[i] = SearchWithRetry(words[i], client, options);
  });

  // Keyed by normalized content; the smallest id wins so the result does not
  // depend on keyword order or completion order.
  std::map<std::string, SourceFile> unique;
  IngestResult result;
  for (auto& outcome : outcomes) {
    if (outcome.warning) result.warnings.push_back(*outcome.warning);
    for (auto& file : outcome.files) {
      if (file.content.empty()) continue;
      const std::string key = ContentKey(file.content);
      auto it = unique.find(key);
      if (it == unique.end()) {
        unique.emplace(key, std::move(file));
      } else if (file.id < it->second.id) {
        it->second = std::move(file);
      }
    }
  }
  for (auto& [key, file] : unique) result.files.push_back(std::move(file));
  std::sort(result.files.begin(), result.files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.id < b.id; });
  return result;
}

GitHubSearchClient::GitHubSearchClient(Options options, SyntaxTable syntax)
    : options_(std::move(options)), syntax_(std::move(syntax)) {
  if (const char* token = std::getenv(options_.token_env.c_str())) {
    token_ = token;
  }
}

namespace {

std::string UrlEncode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

void ThrowForStatus(const HttpResponse& response, const std::string& what) {
  if (response.status == 200) return;
  // The search API signals rate limiting with 403 plus an exhausted quota.
  const bool rate_limited =
      response.status == 403 && response.Header("x-ratelimit-remaining") == "0";
  throw TransportError(what + ": HTTP " + std::to_string(response.status),
                       response.status,
                       rate_limited || IsRetryableStatus(response.status));
}

}  // namespace

std::vector<SourceFile> GitHubSearchClient::Search(const std::string& keyword,
                                                   std::size_t limit) {
  HttpClient http(options_.api_base);
  std::vector<std::pair<std::string, std::string>> headers = {
      {"Accept", "application/vnd.github+json"},
      {"User-Agent", "commenteval"}};
  if (!token_.empty()) headers.emplace_back("Authorization", "Bearer " + token_);

  std::vector<SourceFile> files;
  const std::size_t per_page = std::min<std::size_t>(limit, 100);
  for (int page = 1; files.size() < limit && per_page > 0; ++page) {
    std::string query = "\"" + keyword + "\"";
    if (!options_.search_qualifiers.empty()) {
      query += " " + options_.search_qualifiers;
    }
    HttpRequest request;
    request.path = "/search/code?q=" + UrlEncode(query) +
                   "&per_page=" + std::to_string(per_page) +
                   "&page=" + std::to_string(page);
    request.headers = headers;
    const HttpResponse response = http.Send(request);
    ThrowForStatus(response, "code search for '" + keyword + "'");
    const auto doc = nlohmann::json::parse(response.body);
    const auto& items = doc.at("items");
    if (items.empty()) break;
    for (const auto& item : items) {
      if (files.size() >= limit) break;
      const std::string path = item.value("path", std::string());
      const auto pl = syntax_.LanguageForPath(path);
      if (!pl) continue;
      std::string url = item.value("url", std::string());
      if (StartsWith(url, options_.api_base)) {
        url = url.substr(options_.api_base.size());
      }
      HttpRequest fetch;
      fetch.path = url;
      fetch.headers = headers;
      fetch.headers[0].second = "application/vnd.github.raw";
      const HttpResponse body = http.Send(fetch);
      ThrowForStatus(body, "fetch " + path);
      if (body.body.empty()) continue;
      SourceFile file;
      file.origin = item.value("html_url", path);
      file.id = Sha256Hex(file.origin).substr(0, 16);
      file.language_tag = options_.language_tag;
      file.pl_tag = *pl;
      file.content = body.body;
      files.push_back(std::move(file));
    }
    if (items.size() < per_page) break;
  }
  return files;
}

}  // namespace commenteval
