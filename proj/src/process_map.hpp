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

#ifndef ROLEBIND_PROCESS_MAP_HPP
#define ROLEBIND_PROCESS_MAP_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace rolebind {

/// Lightweight process descriptor: the task->role map plus the role and
/// sub-process declarations a policy can be checked against.
struct ProcessDescriptor {
  struct RoleDecl {
    RoleRef ref;
    bool isMulti{false};
  };
  struct Task {
    std::string id;
    RoleRef role;
  };

  std::string name;
  std::vector<std::string> subprocesses;
  std::vector<RoleDecl> roles;
  std::vector<Task> tasks;
};

/// Parses and validates the descriptor JSON. Throws SchemaError with a
/// JSON-pointer-style path on malformed input.
ProcessDescriptor load_process(const std::string& jsonText);

/// Declared role of a task; throws UnknownTask.
const RoleRef& role_of_task(const ProcessDescriptor& process,
                            const std::string& taskId);

/// Alignment diagnostics between a policy and a descriptor: process roles
/// nobody can bind, policy roles missing from the process, undeclared
/// statement scopes. Empty means aligned.
std::vector<std::string> cross_validate(const Policy& policy,
                                        const ProcessDescriptor& process);

}  // namespace rolebind

#endif  // ROLEBIND_PROCESS_MAP_HPP
