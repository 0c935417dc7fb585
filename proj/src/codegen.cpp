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

#include "codegen.hpp"

#include <map>
#include <set>
#include <sstream>

#include "dnf.hpp"
#include "errors.hpp"

namespace rolebind {

using nlohmann::ordered_json;

namespace {

constexpr char kPragma[] = "pragma solidity ^0.5.0;\n\n";

/// "(1 << a)" for single-role sets, "((1 << a) | (1 << b))" otherwise.
std::string mask_shift_expr(const Mask256& mask) {
  auto bits = mask.bits();
  if (bits.size() == 1) return "(1 << " + std::to_string(bits[0]) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) out += " | ";
    out += "(1 << " + std::to_string(bits[i]) + ")";
  }
  return out + ")";
}

std::string statement_key_expr(const char* nominatorParam,
                               const char* nomineeParam) {
  return std::string("((1 << ") + nominatorParam + ") | (1 << " +
         nomineeParam + "))";
}

Mask256 statement_key_mask(std::size_t nominator, std::size_t nominee) {
  Mask256 m = Mask256::bit(static_cast<unsigned>(nominator));
  m.set(static_cast<unsigned>(nominee));
  return m;
}

struct ResolvedStatement {
  std::size_t nominator;
  std::size_t nominee;
  const BindingStatement* stmt;
};

std::vector<ResolvedStatement> resolve_statements(const Policy& policy,
                                                  const RoleTable& table,
                                                  StatementKind kind) {
  std::vector<ResolvedStatement> out;
  for (const auto& stmt : policy.statements) {
    if (stmt.kind != kind) continue;
    out.push_back({table.resolve(stmt.nominator, stmt.scope),
                   table.resolve(stmt.nominee, stmt.scope), &stmt});
  }
  return out;
}

void emit_can_function(std::ostringstream& out, ordered_json& functions,
                       const std::string& fnName, const char* params,
                       const char* nominatorParam,
                       const std::vector<ResolvedStatement>& statements) {
  // One conditional and nominee mask per distinct nominator, in first-
  // appearance order.
  std::vector<std::size_t> nominatorOrder;
  std::map<std::size_t, Mask256> masks;
  for (const auto& rs : statements) {
    if (!masks.count(rs.nominator)) nominatorOrder.push_back(rs.nominator);
    masks[rs.nominator].set(static_cast<unsigned>(rs.nominee));
  }
  ordered_json used = ordered_json::array();
  out << "    function " << fnName << "(" << params
      << ") public pure returns(bool) {\n";
  for (auto nominator : nominatorOrder) {
    out << "        if (" << nominatorParam << " == " << nominator << ")\n";
    out << "            return " << masks[nominator].to_decimal() << " & (1 << "
        << (fnName == "canNominate" ? "rNominee" : "rReleasee")
        << ") != 0;\n";
    used.push_back(masks[nominator].to_decimal());
  }
  out << "        return false;\n";
  out << "    }\n";
  functions.push_back({{"name", fnName}, {"roleMasksUsed", used}});
}

void emit_constraint_function(std::ostringstream& out, ordered_json& functions,
                              const std::string& fnName, const char* params,
                              const char* nominatorParam,
                              const char* nomineeParam, const char* rolesVar,
                              const RoleTable& table,
                              const std::vector<ResolvedStatement>& statements) {
  ordered_json used = ordered_json::array();
  out << "    function " << fnName << "(" << params
      << ") public pure returns(bool) {\n";
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& rs : statements) {
    if (!rs.stmt->binding) continue;
    if (!seen.insert({rs.nominator, rs.nominee}).second) continue;
    DnfConstraint dnf = to_dnf(rs.stmt->binding->expr, table, rs.stmt->scope);
    out << "        if (" << statement_key_expr(nominatorParam, nomineeParam)
        << " == " << statement_key_mask(rs.nominator, rs.nominee).to_decimal()
        << ")\n";
    std::string test;
    for (std::size_t i = 0; i < dnf.conjunctionSets.size(); ++i) {
      const std::string expr = mask_shift_expr(dnf.conjunctionSets[i]);
      if (i) test += " || ";
      test += std::string(rolesVar) + " & " + expr + " == " + expr;
      used.push_back(dnf.conjunctionSets[i].to_decimal());
    }
    if (rs.stmt->binding->polarity == Polarity::NotIn)
      test = "!(" + test + ")";
    out << "            return " << test << ";\n";
  }
  out << "        return true;\n";
  out << "    }\n";
  functions.push_back({{"name", fnName}, {"roleMasksUsed", used}});
}

void emit_vote_function(std::ostringstream& out, ordered_json& functions,
                        const std::string& fnName, const char* params,
                        const char* nominatorParam, const char* nomineeParam,
                        const char* satisfiedState, const char* unsatState,
                        const char* pendingState, const char* fallthroughState,
                        const RoleTable& table,
                        const std::vector<ResolvedStatement>& statements) {
  ordered_json used = ordered_json::array();
  out << "    function " << fnName << "(" << params
      << ") public pure returns(uint) {\n";
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& rs : statements) {
    if (!rs.stmt->endorsement) continue;
    if (!seen.insert({rs.nominator, rs.nominee}).second) continue;
    DnfConstraint dnf = to_dnf(*rs.stmt->endorsement, table, rs.stmt->scope);
    out << "        if (" << statement_key_expr(nominatorParam, nomineeParam)
        << " == " << statement_key_mask(rs.nominator, rs.nominee).to_decimal()
        << ") {\n";
    std::string satisfied, unsat;
    for (std::size_t i = 0; i < dnf.conjunctionSets.size(); ++i) {
      const std::string mask = dnf.conjunctionSets[i].to_decimal();
      if (i) {
        satisfied += " || ";
        unsat += " && ";
      }
      satisfied += "(endorsedBy & " + mask + ") == " + mask;
      unsat += "(rejectedBy & " + mask + ") != 0";
      used.push_back(mask);
    }
    out << "            if (" << satisfied << ")\n";
    out << "                return " << satisfiedState << ";\n";
    out << "            if (" << unsat << ")\n";
    out << "                return " << unsatState << ";\n";
    out << "            return " << pendingState << ";\n";
    out << "        }\n";
  }
  out << "        return " << fallthroughState << ";\n";
  out << "    }\n";
  functions.push_back({{"name", fnName}, {"roleMasksUsed", used}});
}

}  // namespace

GeneratedContract gen_binding_policy(const Policy& policy,
                                     const RoleTable& table,
                                     const std::string& baseName) {
  if (table.size() > 256)
    throw Error(ErrorCode::RoleLimitExceeded,
                "policies are limited to 256 roles");
  const std::string contractName = baseName + "_BindingPolicy";
  auto nominations = resolve_statements(policy, table, StatementKind::Nominates);
  auto releases = resolve_statements(policy, table, StatementKind::Releases);

  ordered_json functions = ordered_json::array();
  std::ostringstream out;
  out << kPragma;
  out << "// Role states: 0 = UNBOUND, 1 = NOMINATED, 2 = BOUND, 3 = RELEASING.\n";
  out << "contract " << contractName << " {\n\n";
  emit_can_function(out, functions, "canNominate",
                    "uint rNominator, uint rNominee", "rNominator",
                    nominations);
  out << "\n";
  emit_constraint_function(out, functions, "assertNConstraint",
                           "uint rNominator, uint rNominee, uint nomineeRoles",
                           "rNominator", "rNominee", "nomineeRoles", table,
                           nominations);
  out << "\n";
  emit_vote_function(out, functions, "assertNVote",
                     "uint rNominator, uint rNominee, uint endorsedBy, "
                     "uint rejectedBy",
                     "rNominator", "rNominee", "2", "0", "1", "2", table,
                     nominations);
  out << "\n";
  emit_can_function(out, functions, "canRelease",
                    "uint rReleaser, uint rReleasee", "rReleaser", releases);
  out << "\n";
  emit_constraint_function(out, functions, "assertRConstraint",
                           "uint rReleaser, uint rReleasee, uint targetRoles",
                           "rReleaser", "rReleasee", "targetRoles", table,
                           releases);
  out << "\n";
  emit_vote_function(out, functions, "assertRVote",
                     "uint rReleaser, uint rReleasee, uint endorsedBy, "
                     "uint rejectedBy",
                     "rReleaser", "rReleasee", "0", "2", "3", "0", table,
                     releases);
  out << "}\n";

  ordered_json manifest;
  manifest["contract"] = contractName;
  manifest["functions"] = std::move(functions);
  return GeneratedContract{contractName, out.str(), std::move(manifest)};
}

GeneratedContract gen_task_role_map(const ProcessDescriptor& process,
                                    const RoleTable& table) {
  const std::string contractName = process.name + "_TaskRoleMap";
  std::ostringstream out;
  ordered_json taskList = ordered_json::array();
  out << kPragma;
  out << "contract " << contractName << " {\n\n";
  for (std::size_t i = 0; i < process.tasks.size(); ++i)
    out << "    // task " << i << ": " << process.tasks[i].id << " -> "
        << process.tasks[i].role.display() << "\n";
  out << "    function roleOfTask(uint task) public pure returns(uint) {\n";
  for (std::size_t i = 0; i < process.tasks.size(); ++i) {
    auto idx = table.find(process.tasks[i].role);
    if (!idx)
      throw Error(ErrorCode::UnknownRole,
                  "task role '" + process.tasks[i].role.display() +
                      "' is not in the role table");
    out << "        if (task == " << i << ") return " << *idx << ";\n";
    taskList.push_back({{"task", i},
                        {"id", process.tasks[i].id},
                        {"role", *idx}});
  }
  out << "        revert();\n";
  out << "    }\n";
  out << "}\n";

  ordered_json manifest;
  manifest["contract"] = contractName;
  manifest["functions"] = ordered_json::array(
      {{{"name", "roleOfTask"}, {"roleMasksUsed", ordered_json::array()}}});
  manifest["tasks"] = std::move(taskList);
  return GeneratedContract{contractName, out.str(), std::move(manifest)};
}

}  // namespace rolebind
