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

#ifndef ROLEBIND_RUNTIME_HPP
#define ROLEBIND_RUNTIME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "process_map.hpp"
#include "types.hpp"

namespace rolebind {

/// Opaque identity; any non-empty token. Equality is exact string match.
using Account = std::string;

enum class BindingState { Unbound, Nominated, Bound, Releasing };

const char* binding_state_name(BindingState s);

struct RoleBindingRecord {
  BindingState state{BindingState::Unbound};
  std::vector<Account> boundAccounts;  // size <= 1 unless the role is multi
  std::optional<Account> pendingAccount;
  bool pendingIsRelease{false};
  Mask256 endorsedBy;
  Mask256 rejectedBy;
  std::optional<DnfConstraint> pendingConstraint;
};

struct LogEntry {
  std::uint64_t seq{0};
  std::string op;
  nlohmann::ordered_json details;
  std::string outcome;
};

/// Per-case role lifecycle state. Policy and table are copied in so a case is
/// self-contained; distinct cases may run concurrently without coordination.
class CaseState {
 public:
  CaseState(Policy policy, RoleTable table, std::string caseId);

  const std::string& case_id() const { return caseId_; }
  const Policy& policy() const { return policy_; }
  const RoleTable& table() const { return table_; }
  const std::vector<RoleBindingRecord>& records() const { return records_; }
  const std::vector<LogEntry>& log() const { return log_; }

  const RoleBindingRecord& record(const RoleRef& role) const;

  /// Bitmask of roles currently bound to the account (nomineeRoles).
  Mask256 account_roles(const Account& account) const;

  friend CaseState create_case(const Policy&, const RoleTable&,
                               const Account&, const std::string&);
  friend BindingState nominate(CaseState&, const Account&, const Account&,
                               const RoleRef&);
  friend BindingState vote(CaseState&, const Account&, const RoleRef&, bool);
  friend BindingState release(CaseState&, const Account&, const RoleRef&,
                              const Account&);
  friend CaseState case_from_json(const Policy&, const RoleTable&,
                                  const std::string&);

 private:
  std::size_t role_index(const RoleRef& role) const;
  void append_log(const std::string& op, nlohmann::ordered_json details,
                  const std::string& outcome);

  std::string caseId_;
  Policy policy_;
  RoleTable table_;
  std::vector<RoleBindingRecord> records_;
  std::vector<LogEntry> log_;
};

/// Binds every case-creator role to the creating account.
CaseState create_case(const Policy& policy, const RoleTable& table,
                      const Account& creator,
                      const std::string& caseId = "case");

/// Nomination: authorization via a matching statement, binding-constraint
/// check, then either immediate BOUND or NOMINATED pending endorsement.
BindingState nominate(CaseState& cs, const Account& nominator,
                      const Account& nominee, const RoleRef& role);

/// Accept/reject vote on the pending nomination or release of a role.
BindingState vote(CaseState& cs, const Account& voter, const RoleRef& role,
                  bool accept);

/// Release request; symmetric to nominate via the RELEASING state.
BindingState release(CaseState& cs, const Account& requester,
                     const RoleRef& role, const Account& target);

/// Task gating: the task's role must be BOUND to this account.
bool can_perform(const CaseState& cs, const Account& account,
                 const std::string& taskId, const ProcessDescriptor& process);

/// Canonical JSON serialization; replaying a log reproduces it byte-for-byte.
std::string case_to_json(const CaseState& cs);
CaseState case_from_json(const Policy& policy, const RoleTable& table,
                         const std::string& jsonText);

struct SimulationResult {
  CaseState state;
  std::vector<std::string> events;
};

/// Replays a simulation script (one operation per line; '#' comments;
/// double quotes around tokens with spaces). Without an initial state the
/// first operation must be `create <creator>`.
SimulationResult run_script(const Policy& policy, const RoleTable& table,
                            const ProcessDescriptor* process,
                            const std::string& script,
                            const std::string* initialStateJson = nullptr);

}  // namespace rolebind

#endif  // ROLEBIND_RUNTIME_HPP
