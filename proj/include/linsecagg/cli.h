// Copyright 2026 The linsecagg Authors
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

#ifndef LINSECAGG_CLI_H_
#define LINSECAGG_CLI_H_

#include <iosfwd>

namespace linsecagg {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,           // success, condition true, secure, achievable
  kExitFalse = 1,        // condition false, insecure, not achievable, invalid
  kExitInputError = 2,   // unreadable or malformed input, failed precondition
  kExitBudget = 3,       // enumeration budget or size guard exceeded
  kExitInternal = 4,     // an internal consistency check failed
};

// Runs one command. JSON reports go to `out`; diagnostics and the optional
// --pretty summary go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linsecagg

#endif  // LINSECAGG_CLI_H_
