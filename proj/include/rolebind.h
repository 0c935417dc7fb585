/* Copyright 2026 The rolebind Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the rolebind shared library: binding-policy parsing, consistency
 * verification, runtime simulation, and contract generation behind opaque
 * handles. Every function returns RB_OK or an error status; functions with an
 * `err` out-parameter fill it with a malloc'd message on failure (free with
 * rb_string_free). All returned strings are owned by the caller. */

#ifndef ROLEBIND_H
#define ROLEBIND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rb_status {
  RB_OK = 0,
  RB_ERR_PARSE = 1,
  RB_ERR_SCHEMA = 2,
  RB_ERR_UNKNOWN_ROLE = 3,
  RB_ERR_UNKNOWN_ACCOUNT = 4,
  RB_ERR_UNKNOWN_TASK = 5,
  RB_ERR_ROLE_LIMIT = 6,
  RB_ERR_SCOPE_RESOLUTION = 7,
  RB_ERR_OVERLAP = 8,
  RB_ERR_NOT_ENABLED = 9,
  RB_ERR_NOT_AUTHORIZED = 10,
  RB_ERR_CONSTRAINT_VIOLATED = 11,
  RB_ERR_WRONG_STATE = 12,
  RB_ERR_NOT_AN_ENDORSER = 13,
  RB_ERR_ALREADY_VOTED = 14,
  RB_ERR_TARGET_NOT_BOUND = 15,
  RB_ERR_STATE_SPACE_LIMIT = 16,
  RB_ERR_UNSUPPORTED_STATEMENT = 17,
  RB_ERR_INVALID_ARGUMENT = 18
} rb_status;

typedef struct rb_policy rb_policy;
typedef struct rb_process rb_process;
typedef struct rb_role_table rb_role_table;
typedef struct rb_net rb_net;
typedef struct rb_case rb_case;

const char* rb_status_name(rb_status status);
void rb_string_free(char* s);

/* --- policy ------------------------------------------------------------ */

rb_status rb_policy_parse(const char* text, rb_policy** out, char** err);
rb_status rb_policy_render(const rb_policy* policy, char** out_text);
void rb_policy_free(rb_policy* policy);

/* --- process descriptor ------------------------------------------------- */

rb_status rb_process_load(const char* json_text, rb_process** out, char** err);
void rb_process_free(rb_process* process);

/* Newline-separated alignment diagnostics; empty string when aligned. */
rb_status rb_cross_validate(const rb_policy* policy, const rb_process* process,
                            char** out_diagnostics, char** err);

/* --- role table --------------------------------------------------------- */

/* `process` may be NULL. */
rb_status rb_role_table_build(const rb_policy* policy,
                              const rb_process* process,
                              rb_role_table** out, char** err);
size_t rb_role_table_size(const rb_role_table* table);
/* Human-readable listing: "index<TAB>role<TAB>flags" lines. */
rb_status rb_role_table_describe(const rb_role_table* table, char** out_text);
void rb_role_table_free(rb_role_table* table);

/* --- nomination net ----------------------------------------------------- */

rb_status rb_net_build(const rb_policy* policy, const rb_role_table* table,
                       rb_net** out, char** err);
rb_status rb_net_export_dot(const rb_net* net, int with_initial_marking,
                            char** out_text);
/* marking_cap == 0 selects the default cap (10^6 markings).
 * out_consistent: 1 = CONSISTENT, 0 = INCONSISTENT. Either report pointer
 * may be NULL. */
rb_status rb_net_check(const rb_net* net, size_t marking_cap,
                       int* out_consistent, char** out_report_text,
                       char** out_report_json, char** err);
void rb_net_free(rb_net* net);

/* --- codegen ------------------------------------------------------------ */

rb_status rb_codegen_binding_policy(const rb_policy* policy,
                                    const rb_role_table* table,
                                    const char* base_name, char** out_name,
                                    char** out_source, char** out_manifest,
                                    char** err);
rb_status rb_codegen_task_role_map(const rb_process* process,
                                   const rb_role_table* table,
                                   char** out_name, char** out_source,
                                   char** out_manifest, char** err);

/* --- runtime ------------------------------------------------------------ */

rb_status rb_case_create(const rb_policy* policy, const rb_role_table* table,
                         const char* creator, rb_case** out, char** err);
rb_status rb_case_from_json(const rb_policy* policy,
                            const rb_role_table* table, const char* json_text,
                            rb_case** out, char** err);
rb_status rb_case_to_json(const rb_case* cs, char** out_text);

/* Roles are written "Name" or "Scope::Name". */
rb_status rb_case_nominate(rb_case* cs, const char* nominator,
                           const char* nominee, const char* role, char** err);
rb_status rb_case_vote(rb_case* cs, const char* voter, const char* role,
                       int accept, char** err);
rb_status rb_case_release(rb_case* cs, const char* requester, const char* role,
                          const char* target, char** err);
rb_status rb_case_can_perform(const rb_case* cs, const rb_process* process,
                              const char* account, const char* task_id,
                              int* out_allowed, char** err);
void rb_case_free(rb_case* cs);

/* --- simulation --------------------------------------------------------- */

/* Replays a script (one operation per line). `process` and
 * `initial_state_json` may be NULL. Outputs the newline-separated event log
 * and the final case state JSON. */
rb_status rb_simulate(const rb_policy* policy, const rb_role_table* table,
                      const rb_process* process, const char* script,
                      const char* initial_state_json, char** out_events,
                      char** out_state_json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* ROLEBIND_H */
