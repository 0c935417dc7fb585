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

#include "types.hpp"

#include "errors.hpp"

namespace rolebind {

SetExpr SetExpr::role(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Role;
  n->name = std::move(name);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::combine(SetOp op, SetExpr lhs, SetExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->op = op;
  n->lhs = std::make_shared<const SetExpr>(std::move(lhs));
  n->rhs = std::make_shared<const SetExpr>(std::move(rhs));
  return SetExpr(std::move(n));
}

bool SetExpr::operator==(const SetExpr& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->kind == Kind::Role) return node_->name == o.node_->name;
  return node_->op == o.node_->op && *node_->lhs == *o.node_->lhs &&
         *node_->rhs == *o.node_->rhs;
}

std::optional<std::size_t> RoleTable::find(const RoleRef& ref) const {
  for (const auto& e : entries_)
    if (e.ref == ref) return e.index;
  return std::nullopt;
}

std::size_t RoleTable::resolve(const std::string& name,
                               const std::optional<std::string>& scope) const {
  if (scope) {
    if (auto idx = find(RoleRef{scope, name})) return *idx;
  }
  if (auto idx = find(RoleRef{std::nullopt, name})) return *idx;
  // Unique role with that name in some other scope.
  std::optional<std::size_t> hit;
  for (const auto& e : entries_) {
    if (e.ref.name == name) {
      if (hit)
        throw Error(ErrorCode::ScopeResolutionError,
                    "role name '" + name + "' is ambiguous across scopes");
      hit = e.index;
    }
  }
  if (hit) return *hit;
  throw Error(ErrorCode::UnknownRole, "unknown role '" + name + "'");
}

}  // namespace rolebind
