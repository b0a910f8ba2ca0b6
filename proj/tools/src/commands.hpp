// Copyright 2026 The simgraph Authors
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

#ifndef SIMGRAPH_TOOLS_COMMANDS_HPP_
#define SIMGRAPH_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace simgraph::cli {

// Process exit codes.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitInput = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simgraph::cli

#endif  // SIMGRAPH_TOOLS_COMMANDS_HPP_
