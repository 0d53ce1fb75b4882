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

#include "twelverep/errors.hpp"

namespace twelverep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIncompleteAlphabet: return "IncompleteAlphabet";
    case ErrorCode::kLetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kTooManyOccurrences: return "TooManyOccurrences";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRepresentantRequired: return "RepresentantRequired";
    case ErrorCode::kNotRepresentable: return "NotRepresentable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace twelverep
