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

#ifndef TWELVEREP_ERRORS_HPP
#define TWELVEREP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace twelverep {

enum class ErrorCode {
  kInvalidGraph,
  kInvalidSelection,
  kParseError,
  kIncompleteAlphabet,
  kLetterOutOfRange,
  kAlphabetMismatch,
  kTooManyOccurrences,
  kPreconditionViolated,
  kBudgetExceeded,
  kRepresentantRequired,
  kNotRepresentable,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twelverep

#endif  // TWELVEREP_ERRORS_HPP
