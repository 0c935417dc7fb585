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

#include "errors.hpp"

namespace rolebind {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownRole: return "UnknownRole";
    case ErrorCode::UnknownAccount: return "UnknownAccount";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::RoleLimitExceeded: return "RoleLimitExceeded";
    case ErrorCode::ScopeResolutionError: return "ScopeResolutionError";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::NotEnabled: return "NotEnabled";
    case ErrorCode::NotAuthorized: return "NotAuthorized";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::WrongState: return "WrongState";
    case ErrorCode::NotAnEndorser: return "NotAnEndorser";
    case ErrorCode::AlreadyVoted: return "AlreadyVoted";
    case ErrorCode::TargetNotBound: return "TargetNotBound";
    case ErrorCode::StateSpaceLimitExceeded: return "StateSpaceLimitExceeded";
    case ErrorCode::UnsupportedStatement: return "UnsupportedStatement";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace rolebind
