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

#ifndef ROLEBIND_ROLE_TABLE_HPP
#define ROLEBIND_ROLE_TABLE_HPP

#include "process_map.hpp"
#include "types.hpp"

namespace rolebind {

/// Collects every role mentioned by the policy (and declared by the process
/// descriptor, when given) into a dense table. Indices follow first-mention
/// order: case-creator declarations, then statements top to bottom, then
/// process-only roles. Throws RoleLimitExceeded past 256 entries.
RoleTable build_role_table(const Policy& policy,
                           const ProcessDescriptor* process = nullptr);

}  // namespace rolebind

#endif  // ROLEBIND_ROLE_TABLE_HPP
