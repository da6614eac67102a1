// Copyright 2026 The contractsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTRACTSIM_CLI_H_
#define CONTRACTSIM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace contractsim {

inline constexpr int kExitOk = 0;
// ParseError, ConfigError, malformed input files, bad flags.
inline constexpr int kExitInvalidInput = 1;
// Unreadable input or unwritable output.
inline constexpr int kExitIoFailure = 2;

// Entry point for the `contractsim` tool; args[0] is the program name.
// Subcommands: fuzz, replay, serve.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace contractsim

#endif  // CONTRACTSIM_CLI_H_
