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

#include "process_map.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "role_table.hpp"

#include "json.hpp"

namespace rolebind {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& message) {
  throw Error(ErrorCode::SchemaError, path + ": " + message);
}

std::string require_string(const json& j, const std::string& path,
                           const char* key) {
  if (!j.contains(key)) schema_error(path + "/" + key, "missing key");
  if (!j[key].is_string()) schema_error(path + "/" + key, "expected a string");
  return j[key].get<std::string>();
}

}  // namespace

ProcessDescriptor load_process(const std::string& jsonText) {
  json j = json::parse(jsonText, nullptr, false);
  if (j.is_discarded())
    schema_error("", "not well-formed JSON");
  if (!j.is_object()) schema_error("", "expected a JSON object");

  ProcessDescriptor d;
  d.name = require_string(j, "", "name");

  if (j.contains("subprocesses")) {
    if (!j["subprocesses"].is_array())
      schema_error("/subprocesses", "expected an array");
    for (std::size_t i = 0; i < j["subprocesses"].size(); ++i) {
      const auto& s = j["subprocesses"][i];
      if (!s.is_string())
        schema_error("/subprocesses/" + std::to_string(i),
                     "expected a string");
      d.subprocesses.push_back(s.get<std::string>());
    }
  }

  if (!j.contains("roles") || !j["roles"].is_array())
    schema_error("/roles", "expected an array");
  for (std::size_t i = 0; i < j["roles"].size(); ++i) {
    const auto& r = j["roles"][i];
    const std::string path = "/roles/" + std::to_string(i);
    if (!r.is_object()) schema_error(path, "expected an object");
    ProcessDescriptor::RoleDecl decl;
    decl.ref.name = require_string(r, path, "name");
    if (r.contains("scope")) {
      if (!r["scope"].is_string()) schema_error(path + "/scope", "expected a string");
      decl.ref.scope = r["scope"].get<std::string>();
      if (std::find(d.subprocesses.begin(), d.subprocesses.end(),
                    *decl.ref.scope) == d.subprocesses.end())
        schema_error(path + "/scope",
                     "scope '" + *decl.ref.scope + "' is not a declared subprocess");
    }
    if (r.contains("multi")) {
      if (!r["multi"].is_boolean()) schema_error(path + "/multi", "expected a boolean");
      decl.isMulti = r["multi"].get<bool>();
    }
    for (const auto& existing : d.roles)
      if (existing.ref == decl.ref)
        schema_error(path, "duplicate role '" + decl.ref.display() + "'");
    d.roles.push_back(std::move(decl));
  }

  if (!j.contains("tasks") || !j["tasks"].is_array())
    schema_error("/tasks", "expected an array");
  std::set<std::string> taskIds;
  for (std::size_t i = 0; i < j["tasks"].size(); ++i) {
    const auto& t = j["tasks"][i];
    const std::string path = "/tasks/" + std::to_string(i);
    if (!t.is_object()) schema_error(path, "expected an object");
    ProcessDescriptor::Task task;
    task.id = require_string(t, path, "id");
    if (!taskIds.insert(task.id).second)
      schema_error(path + "/id", "duplicate task id '" + task.id + "'");
    task.role.name = require_string(t, path, "role");
    if (t.contains("scope")) {
      if (!t["scope"].is_string()) schema_error(path + "/scope", "expected a string");
      task.role.scope = t["scope"].get<std::string>();
    }
    bool declared = false;
    for (const auto& r : d.roles)
      if (r.ref == task.role) declared = true;
    if (!declared)
      schema_error(path + "/role",
                   "task role '" + task.role.display() + "' is not declared");
    d.tasks.push_back(std::move(task));
  }
  return d;
}

const RoleRef& role_of_task(const ProcessDescriptor& process,
                            const std::string& taskId) {
  for (const auto& t : process.tasks)
    if (t.id == taskId) return t.role;
  throw Error(ErrorCode::UnknownTask, "unknown task '" + taskId + "'");
}

std::vector<std::string> cross_validate(const Policy& policy,
                                        const ProcessDescriptor& process) {
  std::vector<std::string> diagnostics;
  RoleTable table = build_role_table(policy, &process);

  // (c) statement scopes must name declared subprocesses.
  std::set<std::string> reported;
  for (const auto& stmt : policy.statements) {
    if (!stmt.scope) continue;
    if (std::find(process.subprocesses.begin(), process.subprocesses.end(),
                  *stmt.scope) == process.subprocesses.end() &&
        reported.insert(*stmt.scope).second)
      diagnostics.push_back("scope '" + *stmt.scope +
                            "' is not a declared subprocess");
  }

  // (a) process roles nobody can ever bind.
  for (const auto& decl : process.roles) {
    auto idx = table.find(decl.ref);
    if (!idx) continue;
    if (table.entry(*idx).isCaseCreator) continue;
    bool nominated = false;
    for (const auto& stmt : policy.statements) {
      if (stmt.kind != StatementKind::Nominates) continue;
      if (table.resolve(stmt.nominee, stmt.scope) == *idx) {
        nominated = true;
        break;
      }
    }
    if (!nominated)
      diagnostics.push_back("role " + decl.ref.display() +
                            " has no nominator");
  }

  // (b) policy roles the process does not declare.
  for (const auto& entry : table.entries()) {
    bool declared = false;
    for (const auto& decl : process.roles)
      if (decl.ref == entry.ref) declared = true;
    if (!declared)
      diagnostics.push_back("policy role " + entry.ref.display() +
                            " is absent from the process");
  }
  return diagnostics;
}

}  // namespace rolebind
