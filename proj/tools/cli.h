// Copyright 2026 The Polysum Authors.
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


// The polysum command-line tool, as a library so tests can drive it
// in-process.

#ifndef POLYSUM_TOOLS_CLI_H_
#define POLYSUM_TOOLS_CLI_H_

#include <ostream>

namespace polysum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,       // IO, usage and other failures
  kExitRejected = 2,    // proof rejected / relation violated
  kExitMalformed = 3,   // malformed input file or gate definition
  kExitInfeasible = 4,  // infeasible hardware configuration
};

// Runs one command line (argv[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace polysum::cli

#endif  // POLYSUM_TOOLS_CLI_H_
