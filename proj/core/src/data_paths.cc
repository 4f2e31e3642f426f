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

#include "commenteval/data_paths.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commenteval/error.h"

namespace commenteval {

std::filesystem::path DataDir() {
  if (const char* env = std::getenv("COMMENTEVAL_DATA_DIR");
      env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path build_dir = COMMENTEVAL_BUILD_DATA_DIR;
  if (std::filesystem::exists(build_dir / "taxonomy.json")) return build_dir;
  return COMMENTEVAL_INSTALL_DATA_DIR;
}

std::filesystem::path DataFile(std::string_view name) {
  return DataDir() / std::filesystem::path(name);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace commenteval
