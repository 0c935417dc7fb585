// Copyright 2026 The rolebind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROLEBIND_ERRORS_HPP
#define ROLEBIND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rolebind {

enum class ErrorCode {
  ParseError,
  SchemaError,
  UnknownRole,
  UnknownAccount,
  UnknownTask,
  RoleLimitExceeded,
  ScopeResolutionError,
  OverlapError,
  NotEnabled,
  NotAuthorized,
  ConstraintViolated,
  WrongState,
  NotAnEndorser,
  AlreadyVoted,
  TargetNotBound,
  StateSpaceLimitExceeded,
  UnsupportedStatement,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error with a source position. `expected` lists the token kinds the
/// parser would have accepted at that point.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message,
             std::vector<std::string> expected = {})
      : Error(ErrorCode::ParseError, std::move(message)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace rolebind

#endif  // ROLEBIND_ERRORS_HPP
