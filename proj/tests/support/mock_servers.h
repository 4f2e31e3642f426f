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

#ifndef COMMENTEVAL_TESTS_SUPPORT_MOCK_SERVERS_H_
#define COMMENTEVAL_TESTS_SUPPORT_MOCK_SERVERS_H_

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/scorer_backend.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace commenteval::testing {

// Loopback HTTP server on an ephemeral port, stopped on destruction.
class MockServer {
 public:
  MockServer();
  virtual ~MockServer();

  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  std::string base_url() const;
  std::size_t requests() const { return requests_.load(); }

 protected:
  void Start();
  httplib::Server& server() { return *server_; }
  std::atomic<std::size_t> requests_{0};

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

// Serves a ScorerBackend over the scorer wire protocol. /loglik replies
// carry span-length values. Requests whose text exceeds context_window
// tokens get a structured 413.
class MockScorerServer final : public MockServer {
 public:
  explicit MockScorerServer(ScorerBackend& backend);

  // The next n requests answer 503.
  void FailNext(int n) { fail_next_ = n; }

 private:
  ScorerBackend& backend_;
  std::atomic<int> fail_next_{0};
};

// Chat-completions endpoint. The handler maps a request body to
// (HTTP status, message content).
class MockChatServer final : public MockServer {
 public:
  using Handler =
      std::function<std::pair<int, std::string>(const nlohmann::json& body)>;

  explicit MockChatServer(Handler handler);

  std::vector<nlohmann::json> bodies() const;
  std::vector<std::string> authorizations() const;

 private:
  Handler handler_;
  mutable std::mutex mu_;
  std::vector<nlohmann::json> bodies_;
  std::vector<std::string> authorizations_;
};

// Minimal code-search forge: /search/code answers from a keyword table and
// item urls resolve to raw file bodies.
class MockForgeServer final : public MockServer {
 public:
  struct Item {
    std::string path;
    std::string content;
  };

  explicit MockForgeServer(std::map<std::string, std::vector<Item>> items);

  // The next n search requests answer 403 with an exhausted rate limit.
  void RateLimitNext(int n) { rate_limit_next_ = n; }
  std::vector<std::string> queries() const;

 private:
  std::map<std::string, std::vector<Item>> items_;
  std::atomic<int> rate_limit_next_{0};
  mutable std::mutex mu_;
  std::vector<std::string> queries_;
};

}  // namespace commenteval::testing

#endif  // COMMENTEVAL_TESTS_SUPPORT_MOCK_SERVERS_H_
