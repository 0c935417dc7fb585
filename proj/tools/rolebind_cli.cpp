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

// rolebind command-line front end. Talks to the core library exclusively
// through the C API so the binary exercises the same surface other language
// bindings would.
//
// Exit codes (stable): 0 success, 1 usage error, 2 parse/input error,
// 3 inconsistent policy, 4 runtime operation rejected.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rolebind.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitRuntime = 4;

struct CliError {
  int exitCode;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot open file: " + path};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot write file: " + path};
  out << content;
}

/// Owns a malloc'd string from the C API.
struct CStr {
  char* p{nullptr};
  ~CStr() { rb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

/// Raises CliError for a failed C-API call. Parse-shaped failures (bad policy
/// or descriptor text) exit 2; rejected runtime operations exit 4.
[[noreturn]] void fail(rb_status status, const CStr& err) {
  std::string msg = err.str().empty() ? rb_status_name(status) : err.str();
  switch (status) {
    case RB_ERR_PARSE:
    case RB_ERR_SCHEMA:
    case RB_ERR_UNKNOWN_ROLE:
    case RB_ERR_SCOPE_RESOLUTION:
    case RB_ERR_ROLE_LIMIT:
    case RB_ERR_OVERLAP:
    case RB_ERR_UNSUPPORTED_STATEMENT:
      throw CliError{kExitParse, msg};
    default:
      throw CliError{kExitRuntime, msg};
  }
}

template <typename Fn>
void check(Fn&& call) {
  CStr err;
  rb_status status = call(&err.p);
  if (status != RB_OK) fail(status, err);
}

using PolicyPtr = std::unique_ptr<rb_policy, decltype(&rb_policy_free)>;
using ProcessPtr = std::unique_ptr<rb_process, decltype(&rb_process_free)>;
using TablePtr = std::unique_ptr<rb_role_table, decltype(&rb_role_table_free)>;
using NetPtr = std::unique_ptr<rb_net, decltype(&rb_net_free)>;

PolicyPtr load_policy(const std::string& path) {
  std::string text = read_file(path);
  rb_policy* policy = nullptr;
  check([&](char** err) { return rb_policy_parse(text.c_str(), &policy, err); });
  return PolicyPtr(policy, rb_policy_free);
}

ProcessPtr load_descriptor(const std::string& path) {
  std::string text = read_file(path);
  rb_process* process = nullptr;
  check([&](char** err) { return rb_process_load(text.c_str(), &process, err); });
  return ProcessPtr(process, rb_process_free);
}

TablePtr build_table(const rb_policy* policy, const rb_process* process) {
  rb_role_table* table = nullptr;
  check([&](char** err) {
    return rb_role_table_build(policy, process, &table, err);
  });
  return TablePtr(table, rb_role_table_free);
}

size_t marking_cap_from_env() {
  const char* cap = std::getenv("ROLEBIND_STATE_CAP");
  if (!cap || !*cap) return 0;  // 0 = library default
  char* end = nullptr;
  unsigned long long v = std::strtoull(cap, &end, 10);
  if (end == cap || *end != '\0' || v == 0)
    throw CliError{kExitUsage, "ROLEBIND_STATE_CAP must be a positive integer"};
  return static_cast<size_t>(v);
}

int cmd_parse(const std::string& policyPath) {
  PolicyPtr policy = load_policy(policyPath);
  TablePtr table = build_table(policy.get(), nullptr);
  CStr rendered, roles;
  check([&](char** err) {
    (void)err;
    return rb_policy_render(policy.get(), &rendered.p);
  });
  check([&](char** err) {
    (void)err;
    return rb_role_table_describe(table.get(), &roles.p);
  });
  std::cout << rendered.str();
  std::cout << "roles (" << rb_role_table_size(table.get()) << "):\n"
            << roles.str();
  return kExitOk;
}

int cmd_verify(const std::string& policyPath, const std::string& dotPath,
               bool json) {
  PolicyPtr policy = load_policy(policyPath);
  TablePtr table = build_table(policy.get(), nullptr);
  rb_net* netRaw = nullptr;
  check([&](char** err) {
    return rb_net_build(policy.get(), table.get(), &netRaw, err);
  });
  NetPtr net(netRaw, rb_net_free);

  if (!dotPath.empty()) {
    CStr dot;
    check([&](char** err) {
      (void)err;
      return rb_net_export_dot(net.get(), 1, &dot.p);
    });
    write_file(dotPath, dot.str());
  }

  int consistent = 0;
  CStr text, jsonReport;
  check([&](char** err) {
    return rb_net_check(net.get(), marking_cap_from_env(), &consistent,
                        &text.p, &jsonReport.p, err);
  });
  std::cout << (json ? jsonReport.str() : text.str());
  return consistent ? kExitOk : kExitInconsistent;
}

int cmd_compile(const std::string& policyPath, const std::string& processPath,
                const std::string& outDir) {
  PolicyPtr policy = load_policy(policyPath);
  ProcessPtr process = load_descriptor(processPath);
  TablePtr table = build_table(policy.get(), process.get());

  CStr diagnostics;
  check([&](char** err) {
    return rb_cross_validate(policy.get(), process.get(), &diagnostics.p, err);
  });
  if (!diagnostics.str().empty()) std::cerr << diagnostics.str();

  const std::string base =
      std::filesystem::path(policyPath).stem().string();
  CStr bpName, bpSource, bpManifest;
  check([&](char** err) {
    return rb_codegen_binding_policy(policy.get(), table.get(), base.c_str(),
                                     &bpName.p, &bpSource.p, &bpManifest.p,
                                     err);
  });
  CStr trName, trSource, trManifest;
  check([&](char** err) {
    return rb_codegen_task_role_map(process.get(), table.get(), &trName.p,
                                    &trSource.p, &trManifest.p, err);
  });

  std::filesystem::create_directories(outDir);
  auto dir = std::filesystem::path(outDir);
  write_file((dir / (bpName.str() + ".sol")).string(), bpSource.str());
  write_file((dir / (bpName.str() + ".manifest.json")).string(),
             bpManifest.str());
  write_file((dir / (trName.str() + ".sol")).string(), trSource.str());
  write_file((dir / (trName.str() + ".manifest.json")).string(),
             trManifest.str());
  std::cout << "wrote " << bpName.str() << ".sol\n";
  std::cout << "wrote " << trName.str() << ".sol\n";
  return kExitOk;
}

int cmd_simulate(const std::string& policyPath, const std::string& processPath,
                 const std::string& scriptPath, const std::string& statePath,
                 const std::string& fromPath) {
  PolicyPtr policy = load_policy(policyPath);
  ProcessPtr process = load_descriptor(processPath);
  TablePtr table = build_table(policy.get(), process.get());
  std::string script = read_file(scriptPath);

  std::string initial;
  const char* initialPtr = nullptr;
  if (!fromPath.empty()) {
    initial = read_file(fromPath);
    initialPtr = initial.c_str();
  }

  CStr events, state;
  check([&](char** err) {
    return rb_simulate(policy.get(), table.get(), process.get(),
                       script.c_str(), initialPtr, &events.p, &state.p, err);
  });
  std::cout << events.str();
  if (!statePath.empty()) write_file(statePath, state.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rolebind: binding-policy verification and contract generation"};
  app.require_subcommand(1);

  std::string policyPath, processPath, scriptPath;
  std::string dotPath, outDir, statePath, fromPath;
  bool json = false;

  auto* parse = app.add_subcommand("parse", "Parse a policy and print it");
  parse->add_option("policy", policyPath, "policy file (.pol)")->required();

  auto* verify = app.add_subcommand("verify", "Check policy consistency");
  verify->add_option("policy", policyPath, "policy file (.pol)")->required();
  verify->add_option("--dot", dotPath, "write the nomination net as DOT");
  verify->add_flag("--json", json, "machine-readable report");

  auto* compile = app.add_subcommand("compile", "Generate Solidity contracts");
  compile->add_option("policy", policyPath, "policy file (.pol)")->required();
  compile->add_option("process", processPath, "process descriptor (.json)")
      ->required();
  compile->add_option("-o,--out", outDir, "output directory")->required();

  auto* simulate = app.add_subcommand("simulate", "Replay a case script");
  simulate->add_option("policy", policyPath, "policy file (.pol)")->required();
  simulate->add_option("process", processPath, "process descriptor (.json)")
      ->required();
  simulate->add_option("script", scriptPath, "simulation script")->required();
  simulate->add_option("--state", statePath, "write final case state JSON");
  simulate->add_option("--from", fromPath, "resume from a case state JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(policyPath);
    if (*verify) return cmd_verify(policyPath, dotPath, json);
    if (*compile) return cmd_compile(policyPath, processPath, outDir);
    if (*simulate)
      return cmd_simulate(policyPath, processPath, scriptPath, statePath,
                          fromPath);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exitCode;
  }
  return kExitUsage;
}
