/* Copyright 2026 The Eukleia Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef EUKLEIA_CLI_HPP
#define EUKLEIA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eukleia::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kParseError = 2,
    kStepError = 3,
    kCounterexample = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics about the invocation itself to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// EUKLEIA_CORPUS_DIR when set, otherwise the corpus bundled with the build.
std::string corpus_dir();

}  // namespace eukleia::cli

#endif  // EUKLEIA_CLI_HPP
