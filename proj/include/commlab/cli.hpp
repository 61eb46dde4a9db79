// Copyright 2026 The commlab Authors
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

#ifndef COMMLAB_CLI_HPP_
#define COMMLAB_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace commlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameterError = 2;
inline constexpr int kExitInconclusive = 3;

// Runs one `commlab` invocation; args excludes the program name. The report
// (or a JSON error object) goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace commlab

#endif  // COMMLAB_CLI_HPP_
