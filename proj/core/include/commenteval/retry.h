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

#ifndef COMMENTEVAL_RETRY_H_
#define COMMENTEVAL_RETRY_H_

#include <chrono>
#include <functional>

namespace commenteval {

struct RetryPolicy {
  int max_attempts = 5;  // including the first attempt
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{30000};
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

Sleeper RealSleeper();

// Delay before attempt number attempt + 1, where attempt counts from 1.
std::chrono::milliseconds BackoffDelay(const RetryPolicy& policy, int attempt);

}  // namespace commenteval

#endif  // COMMENTEVAL_RETRY_H_
