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

#ifndef COMMENTEVAL_HTTP_H_
#define COMMENTEVAL_HTTP_H_

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace commenteval {

struct HttpRequest {
  std::string method = "GET";
  std::string path;  // appended to the base URL path
  std::string body;
  std::string content_type = "application/json";
  std::vector<std::pair<std::string, std::string>> headers;
};

struct HttpResponse {
  int status = 0;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  std::string Header(const std::string& name) const;
};

// Thin blocking client over cpp-httplib. base_url may carry a path prefix,
// e.g. "https://openrouter.ai/api/v1".
class HttpClient {
 public:
  explicit HttpClient(std::string base_url,
                      std::chrono::seconds timeout = std::chrono::seconds(120));

  // Throws TransportError (retryable) when no response is received. HTTP
  // error statuses are returned, not thrown.
  HttpResponse Send(const HttpRequest& request) const;

  const std::string& base_url() const { return base_url_; }

 private:
  std::string base_url_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  std::chrono::seconds timeout_;
};

// True for statuses worth retrying: 408, 425, 429 and 5xx.
bool IsRetryableStatus(int status);

}  // namespace commenteval

#endif  // COMMENTEVAL_HTTP_H_
