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

#ifndef ROLEBIND_DNF_HPP
#define ROLEBIND_DNF_HPP

#include <optional>
#include <string>

#include "types.hpp"

namespace rolebind {

/// Normalizes a set expression into minimal DNF over role-table bitmasks:
/// conjunction distributed over disjunction, duplicates merged, absorbed
/// supersets removed. Role names resolve with the given statement scope.
DnfConstraint to_dnf(const SetExpr& expr, const RoleTable& table,
                     const std::optional<std::string>& scope);

/// Three-outcome endorsement vote rule over accumulated accept/reject masks.
/// Requires endorsedBy and rejectedBy to be disjoint.
EndorsementOutcome endorsement_outcome(const DnfConstraint& constraint,
                                       const Mask256& endorsedBy,
                                       const Mask256& rejectedBy);

/// Binding-constraint test: IN holds iff some conjunction set is fully
/// included in nomineeRoles; NOT_IN is the negation.
bool binding_check(Polarity polarity, const DnfConstraint& constraint,
                   const Mask256& nomineeRoles);

}  // namespace rolebind

#endif  // ROLEBIND_DNF_HPP
