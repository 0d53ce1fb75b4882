// Copyright 2026 The twelverep Authors
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

#ifndef TWELVEREP_CLI_HPP
#define TWELVEREP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace twelverep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitNegative = 2;

// Runs one subcommand. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
//
//   0  success
//   1  malformed input, unusable flags, exhausted search budget
//   2  negative answer: verification failed, graph not representable,
//      no valid labeling
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace twelverep::cli

#endif  // TWELVEREP_CLI_HPP
