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
#ifndef COMMENTEVAL_INGEST_H_
#define COMMENTEVAL_INGEST_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "commenteval/comment_syntax.h"
#include "commenteval/corpus.h"
#include "commenteval/retry.h"

namespace commenteval {

// Keyword search over a code host. Implementations must be safe to call from
// several threads. Rate limiting is reported as a retryable TransportError.
class SearchClient {
 public:
  virtual ~SearchClient() = default;
  virtual std::vector<SourceFile> Search(const std::string& keyword,
                                         std::size_t limit) = 0;
};

struct IngestOptions {
  std::size_t per_word_limit = 100;
  std::size_t max_in_flight = 4;
  RetryPolicy retry;
  Sleeper sleeper = RealSleeper();
};

struct IngestWarning {
  std::string keyword;
  std::string message;
};

struct IngestResult {
  std::vector<SourceFile> files;  // sorted by id
  std::vector<IngestWarning> warnings;
};

// Deduplication key: SHA-256 of the whitespace-normalized content.
std::string ContentKey(std::string_view content);

// Queries every keyword, keeps at most per_word_limit hits per keyword and
// deduplicates across keywords. When copies collide the smallest id wins, so
// the result does not depend on completion order.
IngestResult IngestKeywords(const std::vector<std::string>& words,
                            SearchClient& client,
                            const IngestOptions& options = {});

// Code search against a GitHub-compatible REST API. The token is read from
// the environment variable named in Options::token_env.
class GitHubSearchClient final : public SearchClient {
 public:
  struct Options {
    std::string api_base = "https://api.github.com";
    std::string token_env = "GITHUB_TOKEN";
    std::string language_tag;        // natural language of the corpus
    std::string search_qualifiers;   // appended to every query
  };

  GitHubSearchClient(Options options, SyntaxTable syntax);

  std::vector<SourceFile> Search(const std::string& keyword,
                                 std::size_t limit) override;

 private:
  Options options_;
  SyntaxTable syntax_;
  std::string token_;
};

}  // namespace commenteval

#endif  // COMMENTEVAL_INGEST_H_
