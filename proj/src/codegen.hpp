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

#ifndef ROLEBIND_CODEGEN_HPP
#define ROLEBIND_CODEGEN_HPP

#include <string>

#include "json.hpp"

#include "process_map.hpp"
#include "types.hpp"

namespace rolebind {

struct GeneratedContract {
  std::string name;
  std::string source;
  /// functionName -> list of decimal role masks used, for traceability.
  nlohmann::ordered_json manifest;
};

/// Emits the BindingPolicy contract source: canNominate/assertNConstraint/
/// assertNVote plus the release counterparts, all masks computed from the
/// shared DNF encoding. Deterministic byte-for-byte.
GeneratedContract gen_binding_policy(const Policy& policy,
                                     const RoleTable& table,
                                     const std::string& baseName);

/// Emits the TaskRoleMap contract: task index (declaration order) to role
/// index lookup.
GeneratedContract gen_task_role_map(const ProcessDescriptor& process,
                                    const RoleTable& table);

}  // namespace rolebind

#endif  // ROLEBIND_CODEGEN_HPP
