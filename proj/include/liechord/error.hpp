// Copyright 2026 The liechord Authors.
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

#ifndef LIECHORD_ERROR_HPP
#define LIECHORD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liechord {

// Every failure the library can signal. The CLI maps these onto exit codes:
// MalformedInput / DimensionMismatch / SingularMatrix / BudgetExceeded /
// InvariantViolated -> 2, NotSemisimple / NotSemisimpleFamily -> 3.
enum class ErrorCode {
  MalformedInput,
  DimensionMismatch,
  SingularMatrix,
  NotSemisimple,
  NotSemisimpleFamily,
  BudgetExceeded,
  InvariantViolated,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotSemisimpleFamily: return "NotSemisimpleFamily";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace liechord

#endif  // LIECHORD_ERROR_HPP
