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

#include "role_table.hpp"

#include <functional>
#include <map>
#include <set>

#include "errors.hpp"

namespace rolebind {
namespace {

struct Declarations {
  std::set<std::string> rootNames;
  std::map<std::string, std::set<std::string>> scopeNames;  // scope -> names

  // Resolution rule: the scoped role if declared under the statement's scope,
  // else the root role, else the unique role with that name in another scope,
  // else a fresh root role.
  RoleRef resolve(const std::string& name,
                  const std::optional<std::string>& scope) const {
    if (scope) {
      auto it = scopeNames.find(*scope);
      if (it != scopeNames.end() && it->second.count(name))
        return RoleRef{scope, name};
    }
    if (rootNames.count(name)) return RoleRef{std::nullopt, name};
    std::vector<std::string> hits;
    for (const auto& [s, names] : scopeNames)
      if (names.count(name)) hits.push_back(s);
    if (hits.size() == 1) return RoleRef{hits.front(), name};
    if (hits.size() > 1)
      throw Error(ErrorCode::ScopeResolutionError,
                  "role name '" + name + "' is ambiguous across scopes");
    return RoleRef{std::nullopt, name};
  }
};

Declarations collect_declarations(const Policy& policy,
                                  const ProcessDescriptor* process) {
  Declarations d;
  for (const auto& creator : policy.caseCreators) d.rootNames.insert(creator);
  for (const auto& stmt : policy.statements) {
    if (stmt.scope)
      d.scopeNames[*stmt.scope].insert(stmt.nominee);
    else
      d.rootNames.insert(stmt.nominee);
  }
  if (process) {
    for (const auto& role : process->roles) {
      if (role.ref.scope)
        d.scopeNames[*role.ref.scope].insert(role.ref.name);
      else
        d.rootNames.insert(role.ref.name);
    }
  }
  return d;
}

void for_each_role(const SetExpr& expr,
                   const std::function<void(const std::string&)>& fn) {
  if (expr.is_role()) {
    fn(expr.role_name());
    return;
  }
  for_each_role(expr.lhs(), fn);
  for_each_role(expr.rhs(), fn);
}

}  // namespace

RoleTable build_role_table(const Policy& policy,
                           const ProcessDescriptor* process) {
  const Declarations decls = collect_declarations(policy, process);
  RoleTable table;

  auto ensure = [&](const RoleRef& ref, bool creator) {
    if (auto idx = table.find(ref)) return *idx;
    if (table.size() >= 256)
      throw Error(ErrorCode::RoleLimitExceeded,
                  "policies are limited to 256 roles");
    table.add({ref, table.size(), creator, false});
    return table.size() - 1;
  };
  auto mention = [&](const std::string& name,
                     const std::optional<std::string>& scope) {
    ensure(decls.resolve(name, scope), false);
  };

  for (const auto& creator : policy.caseCreators)
    ensure(RoleRef{std::nullopt, creator}, true);

  for (const auto& stmt : policy.statements) {
    mention(stmt.nominator, stmt.scope);
    mention(stmt.nominee, stmt.scope);
    if (stmt.binding)
      for_each_role(stmt.binding->expr,
                    [&](const std::string& n) { mention(n, stmt.scope); });
    if (stmt.endorsement)
      for_each_role(*stmt.endorsement,
                    [&](const std::string& n) { mention(n, stmt.scope); });
  }

  if (process) {
    for (const auto& role : process->roles) {
      auto idx = ensure(role.ref, false);
      table.set_multi(idx, role.isMulti);
    }
  }
  return table;
}

}  // namespace rolebind
