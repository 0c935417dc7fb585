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

#include "runtime.hpp"

#include <algorithm>
#include <sstream>

#include "dnf.hpp"
#include "errors.hpp"

namespace rolebind {

using nlohmann::ordered_json;

const char* binding_state_name(BindingState s) {
  switch (s) {
    case BindingState::Unbound: return "UNBOUND";
    case BindingState::Nominated: return "NOMINATED";
    case BindingState::Bound: return "BOUND";
    case BindingState::Releasing: return "RELEASING";
  }
  return "?";
}

namespace {

BindingState state_from_name(const std::string& name) {
  if (name == "UNBOUND") return BindingState::Unbound;
  if (name == "NOMINATED") return BindingState::Nominated;
  if (name == "BOUND") return BindingState::Bound;
  if (name == "RELEASING") return BindingState::Releasing;
  throw Error(ErrorCode::SchemaError, "unknown binding state '" + name + "'");
}

void require_account(const Account& account) {
  if (account.empty())
    throw Error(ErrorCode::UnknownAccount, "empty account id");
}

Mask256 mask_from_decimal_or_throw(const std::string& text) {
  auto m = Mask256::from_decimal(text);
  if (!m) throw Error(ErrorCode::SchemaError, "bad mask '" + text + "'");
  return *m;
}

}  // namespace

CaseState::CaseState(Policy policy, RoleTable table, std::string caseId)
    : caseId_(std::move(caseId)),
      policy_(std::move(policy)),
      table_(std::move(table)),
      records_(table_.size()) {}

std::size_t CaseState::role_index(const RoleRef& role) const {
  if (auto idx = table_.find(role)) return *idx;
  throw Error(ErrorCode::UnknownRole, "unknown role '" + role.display() + "'");
}

const RoleBindingRecord& CaseState::record(const RoleRef& role) const {
  return records_.at(role_index(role));
}

Mask256 CaseState::account_roles(const Account& account) const {
  Mask256 m;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& rec = records_[i];
    if (std::find(rec.boundAccounts.begin(), rec.boundAccounts.end(),
                  account) != rec.boundAccounts.end())
      m.set(static_cast<unsigned>(i));
  }
  return m;
}

void CaseState::append_log(const std::string& op, ordered_json details,
                           const std::string& outcome) {
  log_.push_back({log_.size() + 1, op, std::move(details), outcome});
}

CaseState create_case(const Policy& policy, const RoleTable& table,
                      const Account& creator, const std::string& caseId) {
  require_account(creator);
  CaseState cs(policy, table, caseId);
  for (const auto& entry : table.entries()) {
    if (!entry.isCaseCreator) continue;
    auto& rec = cs.records_[entry.index];
    rec.state = BindingState::Bound;
    rec.boundAccounts.push_back(creator);
  }
  cs.append_log("create", {{"creator", creator}, {"caseId", caseId}},
                "created");
  return cs;
}

BindingState nominate(CaseState& cs, const Account& nominator,
                      const Account& nominee, const RoleRef& role) {
  require_account(nominator);
  require_account(nominee);
  std::size_t idx = cs.role_index(role);
  const auto& entry = cs.table_.entry(idx);
  auto& rec = cs.records_[idx];

  bool nominable =
      rec.state == BindingState::Unbound ||
      (rec.state == BindingState::Bound && entry.isMulti);
  if (!nominable)
    throw Error(ErrorCode::WrongState, "role " + role.display() +
                                           " is not nominable in state " +
                                           binding_state_name(rec.state));
  if (std::find(rec.boundAccounts.begin(), rec.boundAccounts.end(), nominee) !=
      rec.boundAccounts.end())
    throw Error(ErrorCode::WrongState,
                "account already bound to role " + role.display());

  // Authorization: the nominator must hold a role with a statement
  // "<that role> nominates <role>". The first matching statement supplies
  // the constraints.
  const Mask256 nominatorRoles = cs.account_roles(nominator);
  const BindingStatement* statement = nullptr;
  for (const auto& stmt : cs.policy_.statements) {
    if (stmt.kind != StatementKind::Nominates) continue;
    if (cs.table_.resolve(stmt.nominee, stmt.scope) != idx) continue;
    auto nr = cs.table_.resolve(stmt.nominator, stmt.scope);
    if (nominatorRoles.test(static_cast<unsigned>(nr))) {
      statement = &stmt;
      break;
    }
  }
  if (!statement)
    throw Error(ErrorCode::NotAuthorized,
                "account '" + nominator + "' holds no role that may nominate " +
                    role.display());

  if (statement->binding) {
    DnfConstraint dnf =
        to_dnf(statement->binding->expr, cs.table_, statement->scope);
    if (!binding_check(statement->binding->polarity, dnf,
                       cs.account_roles(nominee)))
      throw Error(ErrorCode::ConstraintViolated,
                  "binding constraint on " + role.display() +
                      " rejects account '" + nominee + "'");
  }

  if (statement->endorsement) {
    rec.state = BindingState::Nominated;
    rec.pendingAccount = nominee;
    rec.pendingIsRelease = false;
    rec.endorsedBy = Mask256{};
    rec.rejectedBy = Mask256{};
    rec.pendingConstraint =
        to_dnf(*statement->endorsement, cs.table_, statement->scope);
  } else {
    rec.state = BindingState::Bound;
    rec.boundAccounts.push_back(nominee);
  }
  cs.append_log("nominate",
                {{"role", role.display()},
                 {"nominator", nominator},
                 {"nominee", nominee}},
                binding_state_name(rec.state));
  return rec.state;
}

namespace {

/// Applies the vote outcome to a record with a pending operation.
BindingState resolve_pending(RoleBindingRecord& rec,
                             EndorsementOutcome outcome) {
  if (outcome == EndorsementOutcome::Pending) return rec.state;
  if (outcome == EndorsementOutcome::Satisfied) {
    if (rec.pendingIsRelease) {
      rec.boundAccounts.erase(std::remove(rec.boundAccounts.begin(),
                                          rec.boundAccounts.end(),
                                          *rec.pendingAccount),
                              rec.boundAccounts.end());
    } else {
      rec.boundAccounts.push_back(*rec.pendingAccount);
    }
  }
  rec.state = rec.boundAccounts.empty() ? BindingState::Unbound
                                        : BindingState::Bound;
  rec.pendingAccount.reset();
  rec.pendingIsRelease = false;
  rec.endorsedBy = Mask256{};
  rec.rejectedBy = Mask256{};
  rec.pendingConstraint.reset();
  return rec.state;
}

}  // namespace

BindingState vote(CaseState& cs, const Account& voter, const RoleRef& role,
                  bool accept) {
  require_account(voter);
  std::size_t idx = cs.role_index(role);
  auto& rec = cs.records_[idx];
  if (rec.state != BindingState::Nominated &&
      rec.state != BindingState::Releasing)
    throw Error(ErrorCode::WrongState,
                "role " + role.display() + " has no pending vote");

  const Mask256 voterRoles = cs.account_roles(voter);
  const Mask256 relevant = rec.pendingConstraint->relevant_roles();
  if ((voterRoles & relevant).none())
    throw Error(ErrorCode::NotAnEndorser,
                "account '" + voter + "' holds no endorsing role for " +
                    role.display());
  const Mask256 voted = rec.endorsedBy | rec.rejectedBy;
  // Voting is per role: bits that already voted (through any account) are
  // not moved again.
  if ((voterRoles & relevant & ~voted).none())
    throw Error(ErrorCode::AlreadyVoted,
                "all endorsing roles of '" + voter + "' have already voted");
  if (accept)
    rec.endorsedBy |= voterRoles & ~voted;
  else
    rec.rejectedBy |= voterRoles & ~voted;

  EndorsementOutcome outcome =
      endorsement_outcome(*rec.pendingConstraint, rec.endorsedBy,
                          rec.rejectedBy);
  ordered_json details = {{"role", role.display()},
                          {"voter", voter},
                          {"accept", accept},
                          {"endorsedBy", rec.endorsedBy.to_decimal()},
                          {"rejectedBy", rec.rejectedBy.to_decimal()}};
  BindingState next = resolve_pending(rec, outcome);
  cs.append_log("vote", std::move(details), binding_state_name(next));
  return next;
}

BindingState release(CaseState& cs, const Account& requester,
                     const RoleRef& role, const Account& target) {
  require_account(requester);
  require_account(target);
  std::size_t idx = cs.role_index(role);
  auto& rec = cs.records_[idx];
  if (rec.state != BindingState::Bound)
    throw Error(ErrorCode::WrongState,
                "role " + role.display() + " is not BOUND");
  if (std::find(rec.boundAccounts.begin(), rec.boundAccounts.end(), target) ==
      rec.boundAccounts.end())
    throw Error(ErrorCode::TargetNotBound,
                "account '" + target + "' is not bound to " + role.display());

  const Mask256 requesterRoles = cs.account_roles(requester);
  const BindingStatement* statement = nullptr;
  for (const auto& stmt : cs.policy_.statements) {
    if (stmt.kind != StatementKind::Releases) continue;
    if (cs.table_.resolve(stmt.nominee, stmt.scope) != idx) continue;
    auto nr = cs.table_.resolve(stmt.nominator, stmt.scope);
    if (requesterRoles.test(static_cast<unsigned>(nr))) {
      statement = &stmt;
      break;
    }
  }
  if (!statement)
    throw Error(ErrorCode::NotAuthorized,
                "account '" + requester + "' holds no role that may release " +
                    role.display());

  if (statement->endorsement) {
    rec.state = BindingState::Releasing;
    rec.pendingAccount = target;
    rec.pendingIsRelease = true;
    rec.endorsedBy = Mask256{};
    rec.rejectedBy = Mask256{};
    rec.pendingConstraint =
        to_dnf(*statement->endorsement, cs.table_, statement->scope);
  } else {
    rec.boundAccounts.erase(std::remove(rec.boundAccounts.begin(),
                                        rec.boundAccounts.end(), target),
                            rec.boundAccounts.end());
    rec.state = rec.boundAccounts.empty() ? BindingState::Unbound
                                          : BindingState::Bound;
  }
  cs.append_log("release",
                {{"role", role.display()},
                 {"requester", requester},
                 {"target", target}},
                binding_state_name(rec.state));
  return rec.state;
}

bool can_perform(const CaseState& cs, const Account& account,
                 const std::string& taskId, const ProcessDescriptor& process) {
  const RoleRef& role = role_of_task(process, taskId);
  const auto& rec = cs.record(role);
  if (rec.state != BindingState::Bound) return false;
  return std::find(rec.boundAccounts.begin(), rec.boundAccounts.end(),
                   account) != rec.boundAccounts.end();
}

std::string case_to_json(const CaseState& cs) {
  ordered_json j;
  j["caseId"] = cs.case_id();
  j["records"] = ordered_json::array();
  for (std::size_t i = 0; i < cs.records().size(); ++i) {
    const auto& rec = cs.records()[i];
    ordered_json r;
    r["role"] = cs.table().entry(i).ref.display();
    r["state"] = binding_state_name(rec.state);
    r["boundAccounts"] = rec.boundAccounts;
    r["pendingAccount"] =
        rec.pendingAccount ? ordered_json(*rec.pendingAccount) : nullptr;
    r["pendingIsRelease"] = rec.pendingIsRelease;
    r["endorsedBy"] = rec.endorsedBy.to_decimal();
    r["rejectedBy"] = rec.rejectedBy.to_decimal();
    if (rec.pendingConstraint) {
      ordered_json sets = ordered_json::array();
      for (const auto& cs2 : rec.pendingConstraint->conjunctionSets)
        sets.push_back(cs2.to_decimal());
      r["pendingConstraint"] = sets;
    } else {
      r["pendingConstraint"] = nullptr;
    }
    j["records"].push_back(std::move(r));
  }
  j["log"] = ordered_json::array();
  for (const auto& entry : cs.log()) {
    j["log"].push_back({{"seq", entry.seq},
                        {"op", entry.op},
                        {"details", entry.details},
                        {"outcome", entry.outcome}});
  }
  return j.dump(2) + "\n";
}

CaseState case_from_json(const Policy& policy, const RoleTable& table,
                         const std::string& jsonText) {
  ordered_json j = ordered_json::parse(jsonText, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::SchemaError, "case state: not well-formed JSON");
  CaseState cs(policy, table, j.value("caseId", std::string("case")));
  const auto& records = j.at("records");
  if (records.size() != table.size())
    throw Error(ErrorCode::SchemaError,
                "case state: record count does not match the role table");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& r = records[i];
    if (r.at("role").get<std::string>() != table.entry(i).ref.display())
      throw Error(ErrorCode::SchemaError,
                  "case state: role order does not match the role table");
    auto& rec = cs.records_[i];
    rec.state = state_from_name(r.at("state").get<std::string>());
    rec.boundAccounts = r.at("boundAccounts").get<std::vector<std::string>>();
    if (!r.at("pendingAccount").is_null())
      rec.pendingAccount = r.at("pendingAccount").get<std::string>();
    rec.pendingIsRelease = r.value("pendingIsRelease", false);
    rec.endorsedBy =
        mask_from_decimal_or_throw(r.at("endorsedBy").get<std::string>());
    rec.rejectedBy =
        mask_from_decimal_or_throw(r.at("rejectedBy").get<std::string>());
    if (!r.at("pendingConstraint").is_null()) {
      DnfConstraint c;
      for (const auto& s : r.at("pendingConstraint"))
        c.conjunctionSets.push_back(
            mask_from_decimal_or_throw(s.get<std::string>()));
      rec.pendingConstraint = std::move(c);
    }
  }
  for (const auto& entry : j.at("log")) {
    cs.log_.push_back({entry.at("seq").get<std::uint64_t>(),
                       entry.at("op").get<std::string>(),
                       entry.at("details"),
                       entry.at("outcome").get<std::string>()});
  }
  return cs;
}

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  bool inQuotes = false, has = false;
  for (char c : line) {
    if (inQuotes) {
      if (c == '"') {
        inQuotes = false;
      } else {
        current.push_back(c);
      }
      continue;
    }
    if (c == '#') break;
    if (c == '"') {
      inQuotes = true;
      has = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty() || has) tokens.push_back(current);
      current.clear();
      has = false;
      continue;
    }
    current.push_back(c);
  }
  if (!current.empty() || has) tokens.push_back(current);
  return tokens;
}

RoleRef parse_role_token(const std::string& token, const RoleTable& table) {
  auto pos = token.find("::");
  std::string name = token;
  std::optional<std::string> scope;
  if (pos != std::string::npos) {
    scope = token.substr(0, pos);
    name = token.substr(pos + 2);
  }
  return table.entry(table.resolve(name, scope)).ref;
}

std::string quote_if_spaced(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

SimulationResult run_script(const Policy& policy, const RoleTable& table,
                            const ProcessDescriptor* process,
                            const std::string& script,
                            const std::string* initialStateJson) {
  std::optional<CaseState> cs;
  if (initialStateJson) cs = case_from_json(policy, table, *initialStateJson);
  std::vector<std::string> events;

  std::istringstream in(script);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& op = tokens[0];
    auto need = [&](std::size_t n) {
      if (tokens.size() != n)
        throw Error(ErrorCode::InvalidArgument,
                    "script line " + std::to_string(lineNo) +
                        ": wrong argument count for '" + op + "'");
    };
    if (op == "create") {
      need(2);
      if (cs)
        throw Error(ErrorCode::InvalidArgument,
                    "script line " + std::to_string(lineNo) +
                        ": case already created");
      cs = create_case(policy, table, tokens[1]);
      events.push_back("create creator=" + tokens[1]);
      continue;
    }
    if (!cs)
      throw Error(ErrorCode::InvalidArgument,
                  "script line " + std::to_string(lineNo) +
                      ": no case; the script must start with 'create'");
    if (op == "nominate") {
      need(4);
      RoleRef role = parse_role_token(tokens[1], table);
      BindingState s = nominate(*cs, tokens[2], tokens[3], role);
      events.push_back("nominate " + quote_if_spaced(role.display()) + " by=" +
                       tokens[2] + " nominee=" + tokens[3] + " -> " +
                       binding_state_name(s));
    } else if (op == "release") {
      need(4);
      RoleRef role = parse_role_token(tokens[1], table);
      BindingState s = release(*cs, tokens[2], role, tokens[3]);
      events.push_back("release " + quote_if_spaced(role.display()) +
                       " by=" + tokens[2] + " target=" + tokens[3] + " -> " +
                       binding_state_name(s));
    } else if (op == "vote") {
      need(4);
      RoleRef role = parse_role_token(tokens[1], table);
      bool accept;
      if (tokens[3] == "accept")
        accept = true;
      else if (tokens[3] == "reject")
        accept = false;
      else
        throw Error(ErrorCode::InvalidArgument,
                    "script line " + std::to_string(lineNo) +
                        ": vote must end with accept|reject");
      BindingState s = vote(*cs, tokens[2], role, accept);
      events.push_back("vote " + quote_if_spaced(role.display()) + " voter=" +
                       tokens[2] + " " + tokens[3] + " -> " +
                       binding_state_name(s));
    } else if (op == "task") {
      need(3);
      if (!process)
        throw Error(ErrorCode::InvalidArgument,
                    "script line " + std::to_string(lineNo) +
                        ": 'task' requires a process descriptor");
      bool ok = can_perform(*cs, tokens[2], tokens[1], *process);
      events.push_back("task " + quote_if_spaced(tokens[1]) + " account=" +
                       tokens[2] + " -> " + (ok ? "allow" : "deny"));
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "script line " + std::to_string(lineNo) +
                      ": unknown operation '" + op + "'");
    }
  }
  if (!cs)
    throw Error(ErrorCode::InvalidArgument, "script contains no operations");
  return SimulationResult{std::move(*cs), std::move(events)};
}

}  // namespace rolebind
