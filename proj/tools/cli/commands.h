// Copyright 2026 The urllc-power Authors
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

#ifndef URLLC_TOOLS_CLI_COMMANDS_H_
#define URLLC_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace urllc::cli {

// Process exit codes. Errors also print one line to `err`:
//   urllc: error[<category>] <field>: <message>
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitValidation = 4,
  kExitIo = 5,
  kExitAudit = 6,
};

// Entry point of the urllc tool; args excludes the program name. Results go
// to --out, or to `out` when --out is absent or "-".
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urllc::cli

#endif  // URLLC_TOOLS_CLI_COMMANDS_H_
