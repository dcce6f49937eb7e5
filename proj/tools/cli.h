// Copyright 2026 The qcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCUT_TOOLS_CLI_H
#define QCUT_TOOLS_CLI_H

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qcut::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailed = 1,
    kValidation = 2,
    kUnsupportedSplit = 3,
    kObservable = 4,
    kSizeLimit = 5,
};

/// Runs one `qcut` command line. Output and diagnostics go to the given
/// streams; the return value is the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Bundled demo circuits: "cccx", "cccx-split", "mcx6".
std::optional<std::string> demo_circuit(std::string_view name);

}  // namespace qcut::cli

#endif
