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

#ifndef ROLEBIND_PARSER_HPP
#define ROLEBIND_PARSER_HPP

#include <string>

#include "types.hpp"

namespace rolebind {

/// Parses binding-policy text (".pol" format): a '{' ... '}' block of
/// semicolon-terminated case-creator and nominate/release statements.
/// Throws ParseError with a 1-based line/column on syntax errors.
Policy parse_policy(const std::string& text);

/// Canonical rendering: one statement per line, single spaces, parentheses
/// only where the grammar needs them. parse(render(p)) == p structurally.
std::string render_policy(const Policy& policy);

/// Canonical rendering of a set expression (used by diagnostics and tests).
std::string render_set_expr(const SetExpr& expr);

}  // namespace rolebind

#endif  // ROLEBIND_PARSER_HPP
