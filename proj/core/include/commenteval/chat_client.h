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

#ifndef COMMENTEVAL_CHAT_CLIENT_H_
#define COMMENTEVAL_CHAT_CLIENT_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commenteval/http.h"

namespace commenteval {

struct ChatMessage {
  std::string role;  // "system" or "user"
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

struct DecodingConfig {
  double temperature = 0.0;
  std::int64_t seed = 42;
  int max_output_tokens = 10000;
};

// Request document sent to a chat-completions endpoint. Its serialization is
// stable, so the hash identifies a request across runs.
nlohmann::json ChatRequestBody(const std::string& model,
                               const std::vector<ChatMessage>& messages,
                               const DecodingConfig& decoding);
std::string ChatRequestHash(const nlohmann::json& body);

class ChatClient {
 public:
  virtual ~ChatClient() = default;

  // Returns the assistant text. Throws TransportError; retryable() tells
  // whether another attempt may succeed.
  virtual std::string Complete(const nlohmann::json& request_body) = 0;
};

// POST {base_url}/chat/completions with a bearer token read from an
// environment variable (no header when the variable is unset).
class HttpChatClient final : public ChatClient {
 public:
  HttpChatClient(std::string base_url, std::string api_key_env = "JUDGE_API_KEY",
                 std::chrono::seconds timeout = std::chrono::seconds(600));

  std::string Complete(const nlohmann::json& request_body) override;

 private:
  HttpClient http_;
  std::string api_key_;
};

}  // namespace commenteval

#endif  // COMMENTEVAL_CHAT_CLIENT_H_
