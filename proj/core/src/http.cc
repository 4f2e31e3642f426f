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

#include "commenteval/http.h"

#include <httplib.h>

#include <algorithm>
#include <cctype>

#include "commenteval/error.h"
#include "commenteval/retry.h"

namespace commenteval {

std::string HttpResponse::Header(const std::string& name) const {
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  const std::string wanted = lower(name);
  for (const auto& [k, v] : headers) {
    if (lower(k) == wanted) return v;
  }
  return {};
}

HttpClient::HttpClient(std::string base_url, std::chrono::seconds timeout)
    : base_url_(std::move(base_url)), timeout_(timeout) {
  const auto scheme_end = base_url_.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "base URL needs a scheme: " + base_url_);
  }
  const auto path_start = base_url_.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    scheme_host_port_ = base_url_;
  } else {
    scheme_host_port_ = base_url_.substr(0, path_start);
    path_prefix_ = base_url_.substr(path_start);
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
}

HttpResponse HttpClient::Send(const HttpRequest& request) const {
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  client.set_follow_location(true);

  httplib::Headers headers;
  for (const auto& [k, v] : request.headers) headers.emplace(k, v);
  const std::string path = path_prefix_ + request.path;

  httplib::Result result;
  if (request.method == "GET") {
    result = client.Get(path, headers);
  } else if (request.method == "POST") {
    result = client.Post(path, headers, request.body, request.content_type);
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unsupported HTTP method " + request.method);
  }
  if (!result) {
    throw TransportError(
        request.method + " " + base_url_ + request.path + ": " +
            httplib::to_string(result.error()),
        0, /*retryable=*/true);
  }
  HttpResponse out;
  out.status = result->status;
  out.body = result->body;
  for (const auto& [k, v] : result->headers) out.headers.emplace_back(k, v);
  return out;
}

bool IsRetryableStatus(int status) {
  return status == 408 || status == 425 || status == 429 ||
         (status >= 500 && status <= 599);
}

Sleeper RealSleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

std::chrono::milliseconds BackoffDelay(const RetryPolicy& policy, int attempt) {
  double ms = static_cast<double>(policy.initial_backoff.count());
  for (int i = 1; i < attempt; ++i) ms *= policy.multiplier;
  ms = std::min(ms, static_cast<double>(policy.max_backoff.count()));
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

}  // namespace commenteval
