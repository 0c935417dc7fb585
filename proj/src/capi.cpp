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

#include "rolebind.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "codegen.hpp"
#include "dnf.hpp"
#include "errors.hpp"
#include "nomination_net.hpp"
#include "parser.hpp"
#include "petri.hpp"
#include "process_map.hpp"
#include "role_table.hpp"
#include "runtime.hpp"
#include "types.hpp"

using namespace rolebind;

struct rb_policy {
  Policy value;
};
struct rb_process {
  ProcessDescriptor value;
};
struct rb_role_table {
  RoleTable value;
};
struct rb_net {
  PetriNet value;
  std::vector<std::string> warnings;
};
struct rb_case {
  CaseState value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& message) {
  if (err) *err = dup_string(message);
}

rb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return RB_ERR_PARSE;
    case ErrorCode::SchemaError: return RB_ERR_SCHEMA;
    case ErrorCode::UnknownRole: return RB_ERR_UNKNOWN_ROLE;
    case ErrorCode::UnknownAccount: return RB_ERR_UNKNOWN_ACCOUNT;
    case ErrorCode::UnknownTask: return RB_ERR_UNKNOWN_TASK;
    case ErrorCode::RoleLimitExceeded: return RB_ERR_ROLE_LIMIT;
    case ErrorCode::ScopeResolutionError: return RB_ERR_SCOPE_RESOLUTION;
    case ErrorCode::OverlapError: return RB_ERR_OVERLAP;
    case ErrorCode::NotEnabled: return RB_ERR_NOT_ENABLED;
    case ErrorCode::NotAuthorized: return RB_ERR_NOT_AUTHORIZED;
    case ErrorCode::ConstraintViolated: return RB_ERR_CONSTRAINT_VIOLATED;
    case ErrorCode::WrongState: return RB_ERR_WRONG_STATE;
    case ErrorCode::NotAnEndorser: return RB_ERR_NOT_AN_ENDORSER;
    case ErrorCode::AlreadyVoted: return RB_ERR_ALREADY_VOTED;
    case ErrorCode::TargetNotBound: return RB_ERR_TARGET_NOT_BOUND;
    case ErrorCode::StateSpaceLimitExceeded: return RB_ERR_STATE_SPACE_LIMIT;
    case ErrorCode::UnsupportedStatement: return RB_ERR_UNSUPPORTED_STATEMENT;
    case ErrorCode::InvalidArgument: return RB_ERR_INVALID_ARGUMENT;
  }
  return RB_ERR_INVALID_ARGUMENT;
}

/// Runs fn, translating exceptions into statuses and error messages.
template <typename Fn>
rb_status guard(char** err, Fn&& fn) {
  try {
    fn();
    return RB_OK;
  } catch (const ParseError& e) {
    set_err(err, "line " + std::to_string(e.line()) + ", column " +
                     std::to_string(e.column()) + ": " + e.what());
    return RB_ERR_PARSE;
  } catch (const Error& e) {
    set_err(err, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return RB_ERR_INVALID_ARGUMENT;
  }
}

RoleRef role_from_token(const std::string& token, const RoleTable& table) {
  auto pos = token.find("::");
  std::optional<std::string> scope;
  std::string name = token;
  if (pos != std::string::npos) {
    scope = token.substr(0, pos);
    name = token.substr(pos + 2);
  }
  return table.entry(table.resolve(name, scope)).ref;
}

}  // namespace

extern "C" {

const char* rb_status_name(rb_status status) {
  switch (status) {
    case RB_OK: return "OK";
    case RB_ERR_PARSE: return "ParseError";
    case RB_ERR_SCHEMA: return "SchemaError";
    case RB_ERR_UNKNOWN_ROLE: return "UnknownRole";
    case RB_ERR_UNKNOWN_ACCOUNT: return "UnknownAccount";
    case RB_ERR_UNKNOWN_TASK: return "UnknownTask";
    case RB_ERR_ROLE_LIMIT: return "RoleLimitExceeded";
    case RB_ERR_SCOPE_RESOLUTION: return "ScopeResolutionError";
    case RB_ERR_OVERLAP: return "OverlapError";
    case RB_ERR_NOT_ENABLED: return "NotEnabled";
    case RB_ERR_NOT_AUTHORIZED: return "NotAuthorized";
    case RB_ERR_CONSTRAINT_VIOLATED: return "ConstraintViolated";
    case RB_ERR_WRONG_STATE: return "WrongState";
    case RB_ERR_NOT_AN_ENDORSER: return "NotAnEndorser";
    case RB_ERR_ALREADY_VOTED: return "AlreadyVoted";
    case RB_ERR_TARGET_NOT_BOUND: return "TargetNotBound";
    case RB_ERR_STATE_SPACE_LIMIT: return "StateSpaceLimitExceeded";
    case RB_ERR_UNSUPPORTED_STATEMENT: return "UnsupportedStatement";
    case RB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  }
  return "UnknownStatus";
}

void rb_string_free(char* s) { std::free(s); }

rb_status rb_policy_parse(const char* text, rb_policy** out, char** err) {
  if (!text || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] { *out = new rb_policy{parse_policy(text)}; });
}

rb_status rb_policy_render(const rb_policy* policy, char** out_text) {
  if (!policy || !out_text) return RB_ERR_INVALID_ARGUMENT;
  return guard(nullptr,
               [&] { *out_text = dup_string(render_policy(policy->value)); });
}

void rb_policy_free(rb_policy* policy) { delete policy; }

rb_status rb_process_load(const char* json_text, rb_process** out,
                          char** err) {
  if (!json_text || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] { *out = new rb_process{load_process(json_text)}; });
}

void rb_process_free(rb_process* process) { delete process; }

rb_status rb_cross_validate(const rb_policy* policy, const rb_process* process,
                            char** out_diagnostics, char** err) {
  if (!policy || !process || !out_diagnostics) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    std::ostringstream out;
    for (const auto& d : cross_validate(policy->value, process->value))
      out << d << "\n";
    *out_diagnostics = dup_string(out.str());
  });
}

rb_status rb_role_table_build(const rb_policy* policy,
                              const rb_process* process, rb_role_table** out,
                              char** err) {
  if (!policy || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    *out = new rb_role_table{
        build_role_table(policy->value, process ? &process->value : nullptr)};
  });
}

size_t rb_role_table_size(const rb_role_table* table) {
  return table ? table->value.size() : 0;
}

rb_status rb_role_table_describe(const rb_role_table* table, char** out_text) {
  if (!table || !out_text) return RB_ERR_INVALID_ARGUMENT;
  std::ostringstream out;
  for (const auto& e : table->value.entries()) {
    out << e.index << "\t" << e.ref.display() << "\t";
    if (e.isCaseCreator) out << "case-creator";
    if (e.isMulti) out << (e.isCaseCreator ? ",multi" : "multi");
    out << "\n";
  }
  *out_text = dup_string(out.str());
  return RB_OK;
}

void rb_role_table_free(rb_role_table* table) { delete table; }

rb_status rb_net_build(const rb_policy* policy, const rb_role_table* table,
                       rb_net** out, char** err) {
  if (!policy || !table || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    auto net = new rb_net{};
    net->value = build_nomination_net(policy->value, table->value,
                                      /*strict=*/false, &net->warnings);
    *out = net;
  });
}

rb_status rb_net_export_dot(const rb_net* net, int with_initial_marking,
                            char** out_text) {
  if (!net || !out_text) return RB_ERR_INVALID_ARGUMENT;
  const Marking* marking =
      with_initial_marking ? &net->value.initial_marking() : nullptr;
  *out_text = dup_string(export_dot(net->value, marking));
  return RB_OK;
}

rb_status rb_net_check(const rb_net* net, size_t marking_cap,
                       int* out_consistent, char** out_report_text,
                       char** out_report_json, char** err) {
  if (!net || !out_consistent) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    ConsistencyResult result = check_consistency(
        net->value, marking_cap == 0 ? kDefaultMarkingCap : marking_cap);
    result.warnings = net->warnings;
    *out_consistent = result.verdict == Verdict::Consistent ? 1 : 0;
    if (out_report_text)
      *out_report_text = dup_string(consistency_report_text(result));
    if (out_report_json)
      *out_report_json = dup_string(consistency_report_json(result));
  });
}

void rb_net_free(rb_net* net) { delete net; }

rb_status rb_codegen_binding_policy(const rb_policy* policy,
                                    const rb_role_table* table,
                                    const char* base_name, char** out_name,
                                    char** out_source, char** out_manifest,
                                    char** err) {
  if (!policy || !table || !base_name) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    GeneratedContract contract =
        gen_binding_policy(policy->value, table->value, base_name);
    if (out_name) *out_name = dup_string(contract.name);
    if (out_source) *out_source = dup_string(contract.source);
    if (out_manifest)
      *out_manifest = dup_string(contract.manifest.dump(2) + "\n");
  });
}

rb_status rb_codegen_task_role_map(const rb_process* process,
                                   const rb_role_table* table, char** out_name,
                                   char** out_source, char** out_manifest,
                                   char** err) {
  if (!process || !table) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    GeneratedContract contract =
        gen_task_role_map(process->value, table->value);
    if (out_name) *out_name = dup_string(contract.name);
    if (out_source) *out_source = dup_string(contract.source);
    if (out_manifest)
      *out_manifest = dup_string(contract.manifest.dump(2) + "\n");
  });
}

rb_status rb_case_create(const rb_policy* policy, const rb_role_table* table,
                         const char* creator, rb_case** out, char** err) {
  if (!policy || !table || !creator || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    *out = new rb_case{create_case(policy->value, table->value, creator)};
  });
}

rb_status rb_case_from_json(const rb_policy* policy,
                            const rb_role_table* table, const char* json_text,
                            rb_case** out, char** err) {
  if (!policy || !table || !json_text || !out) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    *out = new rb_case{case_from_json(policy->value, table->value, json_text)};
  });
}

rb_status rb_case_to_json(const rb_case* cs, char** out_text) {
  if (!cs || !out_text) return RB_ERR_INVALID_ARGUMENT;
  return guard(nullptr,
               [&] { *out_text = dup_string(case_to_json(cs->value)); });
}

rb_status rb_case_nominate(rb_case* cs, const char* nominator,
                           const char* nominee, const char* role, char** err) {
  if (!cs || !nominator || !nominee || !role) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    nominate(cs->value, nominator, nominee,
             role_from_token(role, cs->value.table()));
  });
}

rb_status rb_case_vote(rb_case* cs, const char* voter, const char* role,
                       int accept, char** err) {
  if (!cs || !voter || !role) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    vote(cs->value, voter, role_from_token(role, cs->value.table()),
         accept != 0);
  });
}

rb_status rb_case_release(rb_case* cs, const char* requester, const char* role,
                          const char* target, char** err) {
  if (!cs || !requester || !role || !target) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    release(cs->value, requester, role_from_token(role, cs->value.table()),
            target);
  });
}

rb_status rb_case_can_perform(const rb_case* cs, const rb_process* process,
                              const char* account, const char* task_id,
                              int* out_allowed, char** err) {
  if (!cs || !process || !account || !task_id || !out_allowed)
    return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    *out_allowed =
        can_perform(cs->value, account, task_id, process->value) ? 1 : 0;
  });
}

void rb_case_free(rb_case* cs) { delete cs; }

rb_status rb_simulate(const rb_policy* policy, const rb_role_table* table,
                      const rb_process* process, const char* script,
                      const char* initial_state_json, char** out_events,
                      char** out_state_json, char** err) {
  if (!policy || !table || !script) return RB_ERR_INVALID_ARGUMENT;
  return guard(err, [&] {
    std::string initial;
    const std::string* initialPtr = nullptr;
    if (initial_state_json) {
      initial = initial_state_json;
      initialPtr = &initial;
    }
    SimulationResult result =
        run_script(policy->value, table->value,
                   process ? &process->value : nullptr, script, initialPtr);
    if (out_events) {
      std::ostringstream events;
      for (const auto& e : result.events) events << e << "\n";
      *out_events = dup_string(events.str());
    }
    if (out_state_json) *out_state_json = dup_string(case_to_json(result.state));
  });
}

}  // extern "C"
