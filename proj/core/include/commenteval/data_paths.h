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

#ifndef COMMENTEVAL_DATA_PATHS_H_
#define COMMENTEVAL_DATA_PATHS_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace commenteval {

// Resolution order: $COMMENTEVAL_DATA_DIR, the source tree data directory,
// then the installed share directory.
std::filesystem::path DataDir();
std::filesystem::path DataFile(std::string_view name);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace commenteval

#endif  // COMMENTEVAL_DATA_PATHS_H_
