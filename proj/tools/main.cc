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

#include <iostream>

#include <CLI11.hpp>

#include "commands.h"
#include "commenteval/error.h"

int main(int argc, char** argv) {
  CLI::App app{"Evaluate generated code comments across natural languages"};
  app.set_version_flag("--version", commenteval::cli::ToolVersion());
  app.require_subcommand(1);
  commenteval::cli::RegisterCorpusCommands(app);
  commenteval::cli::RegisterScoreCommands(app);
  commenteval::cli::RegisterJudgeCommands(app);
  commenteval::cli::RegisterReportCommands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const commenteval::Error& e) {
    std::cerr << "error (" << commenteval::ErrorKindName(e.kind())
              << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
