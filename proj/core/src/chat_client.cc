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

#include "commenteval/chat_client.h"

#include <cstdlib>

#include "commenteval/error.h"
#include "commenteval/hash.h"

namespace commenteval {

using nlohmann::json;

json ChatRequestBody(const std::string& model,
                     const std::vector<ChatMessage>& messages,
                     const DecodingConfig& decoding) {
  json body;
  body["model"] = model;
  body["messages"] = json::array();
  for (const auto& m : messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  body["temperature"] = decoding.temperature;
  body["seed"] = decoding.seed;
  body["max_tokens"] = decoding.max_output_tokens;
  return body;
}

std::string ChatRequestHash(const json& body) {
  return Sha256Hex(
      body.dump(-1, ' ', false, json::error_handler_t::replace));
}

HttpChatClient::HttpChatClient(std::string base_url, std::string api_key_env,
                               std::chrono::seconds timeout)
    : http_(std::move(base_url), timeout) {
  if (const char* key = std::getenv(api_key_env.c_str())) api_key_ = key;
}

std::string HttpChatClient::Complete(const json& request_body) {
  HttpRequest request;
  request.method = "POST";
  request.path = "/chat/completions";
  // Invalid UTF-8 in model text is replaced rather than aborting the call.
  request.body =
      request_body.dump(-1, ' ', false, json::error_handler_t::replace);
  if (!api_key_.empty()) {
    request.headers.emplace_back("Authorization", "Bearer " + api_key_);
  }
  const HttpResponse response = http_.Send(request);
  if (response.status != 200) {
    throw TransportError(
        "chat completion: HTTP " + std::to_string(response.status),
        response.status, IsRetryableStatus(response.status));
  }
  try {
    const json reply = json::parse(response.body);
    const json& content = reply.at("choices").at(0).at("message").at("content");
    return content.is_null() ? std::string() : content.get<std::string>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("chat completion: malformed reply: ") +
                             e.what(),
                         response.status, false);
  }
}

}  // namespace commenteval
