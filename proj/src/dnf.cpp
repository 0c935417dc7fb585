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

#include "dnf.hpp"

#include <algorithm>

#include "errors.hpp"

namespace rolebind {
namespace {

std::vector<Mask256> dnf_masks(const SetExpr& expr, const RoleTable& table,
                               const std::optional<std::string>& scope) {
  if (expr.is_role()) {
    auto idx = table.resolve(expr.role_name(), scope);
    return {Mask256::bit(static_cast<unsigned>(idx))};
  }
  auto left = dnf_masks(expr.lhs(), table, scope);
  auto right = dnf_masks(expr.rhs(), table, scope);
  if (expr.op() == SetOp::Or) {
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
  // And: distribute, merging duplicate roles via bitwise OR.
  std::vector<Mask256> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) out.push_back(a | b);
  return out;
}

}  // namespace

DnfConstraint to_dnf(const SetExpr& expr, const RoleTable& table,
                     const std::optional<std::string>& scope) {
  auto masks = dnf_masks(expr, table, scope);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  // Absorption: drop any mask that strictly contains another.
  std::vector<Mask256> minimal;
  for (const auto& m : masks) {
    bool absorbed = false;
    for (const auto& other : masks) {
      if (!(other == m) && m.contains(other)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) minimal.push_back(m);
  }
  return DnfConstraint{std::move(minimal)};
}

EndorsementOutcome endorsement_outcome(const DnfConstraint& constraint,
                                       const Mask256& endorsedBy,
                                       const Mask256& rejectedBy) {
  if (!(endorsedBy & rejectedBy).none())
    throw Error(ErrorCode::OverlapError,
                "endorsedBy and rejectedBy masks overlap");
  for (const auto& cs : constraint.conjunctionSets)
    if (endorsedBy.contains(cs)) return EndorsementOutcome::Satisfied;
  bool allRejected = true;
  for (const auto& cs : constraint.conjunctionSets) {
    if ((rejectedBy & cs).none()) {
      allRejected = false;
      break;
    }
  }
  return allRejected ? EndorsementOutcome::Unsatisfiable
                     : EndorsementOutcome::Pending;
}

bool binding_check(Polarity polarity, const DnfConstraint& constraint,
                   const Mask256& nomineeRoles) {
  bool included = false;
  for (const auto& cs : constraint.conjunctionSets) {
    if (nomineeRoles.contains(cs)) {
      included = true;
      break;
    }
  }
  return polarity == Polarity::In ? included : !included;
}

}  // namespace rolebind
