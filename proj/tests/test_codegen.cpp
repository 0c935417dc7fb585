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

#include "doctest.h"

#include <fstream>
#include <sstream>

#include "codegen.hpp"
#include "parser.hpp"
#include "process_map.hpp"
#include "role_table.hpp"
#include "support/oracles.hpp"

using namespace rolebind;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_fixture(const std::string& name) {
  return read_file(std::string(ROLEBIND_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("canNominate uses the mask-and-shift shape") {
  // D has index 3 and nominates B (1) and C (2): nMask = 6.
  Policy p = parse_policy(
      "{ A is case-creator; A nominates B; A nominates C; A nominates D;\n"
      "  D nominates B; D nominates C; }");
  RoleTable t = build_role_table(p);
  REQUIRE(t.resolve("D", std::nullopt) == 3);
  GeneratedContract c = gen_binding_policy(p, t, "sample");
  CHECK(c.source.find("if (rNominator == 3)") != std::string::npos);
  CHECK(c.source.find("return 6 & (1 << rNominee) != 0;") !=
        std::string::npos);
}

TEST_CASE("generated output matches the goldens byte for byte") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  ProcessDescriptor d = load_process(read_fixture("order2cash.json"));
  RoleTable t = build_role_table(p, &d);

  GeneratedContract bp = gen_binding_policy(p, t, "order2cash");
  CHECK(bp.name == "order2cash_BindingPolicy");
  CHECK(bp.source ==
        read_file(std::string(ROLEBIND_GOLDEN_DIR) +
                  "/order2cash_BindingPolicy.sol"));

  GeneratedContract tr = gen_task_role_map(d, t);
  CHECK(tr.name == "order2cash_TaskRoleMap");
  CHECK(tr.source == read_file(std::string(ROLEBIND_GOLDEN_DIR) +
                               "/order2cash_TaskRoleMap.sol"));
}

TEST_CASE("generation is deterministic across runs") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  RoleTable t = build_role_table(p);
  GeneratedContract a = gen_binding_policy(p, t, "order2cash");
  GeneratedContract b = gen_binding_policy(p, t, "order2cash");
  CHECK(a.source == b.source);
  CHECK(a.manifest == b.manifest);
}

TEST_CASE("manifest lists functions and mask provenance") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  RoleTable t = build_role_table(p);
  GeneratedContract c = gen_binding_policy(p, t, "order2cash");
  REQUIRE(c.manifest.contains("functions"));
  std::vector<std::string> names;
  for (const auto& f : c.manifest["functions"])
    names.push_back(f["name"].get<std::string>());
  CHECK(names == std::vector<std::string>{"canNominate", "assertNConstraint",
                                          "assertNVote", "canRelease",
                                          "assertRConstraint", "assertRVote"});
  // canNominate of the Supplier: nominators Customer (34), Supplier (204),
  // Carrier (16).
  auto used = c.manifest["functions"][0]["roleMasksUsed"];
  CHECK(used == nlohmann::ordered_json::array({"34", "204", "16"}));
}

TEST_CASE("generated functions evaluate like the statements say") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  RoleTable t = build_role_table(p);
  GeneratedContract c = gen_binding_policy(p, t, "order2cash");
  auto sol = testing::SolContract::parse(c.source);

  // Customer (0) nominates Supplier (1); nobody nominates the Customer.
  CHECK(sol.call("canNominate", {0, 1}) == 1);
  CHECK(sol.call("canNominate", {1, 0}) == 0);
  // Supplier (1) nominates Candidate (2) and Carrier (3).
  CHECK(sol.call("canNominate", {1, 2}) == 1);
  CHECK(sol.call("canNominate", {1, 3}) == 1);
  CHECK(sol.call("canNominate", {2, 3}) == 0);

  // Carrier constraint: nominee must hold Candidate (bit 2).
  CHECK(sol.call("assertNConstraint", {1, 3, 1u << 2}) == 1);
  CHECK(sol.call("assertNConstraint", {1, 3, 1u << 4}) == 0);
  // Unconstrained statements default to true.
  CHECK(sol.call("assertNConstraint", {0, 1, 0}) == 1);

  // Carrier vote needs the Customer (bit 0): 1 pending, 2 ok, 0 rejected.
  CHECK(sol.call("assertNVote", {1, 3, 0, 0}) == 1);
  CHECK(sol.call("assertNVote", {1, 3, 1, 0}) == 2);
  CHECK(sol.call("assertNVote", {1, 3, 0, 1}) == 0);

  // No release statements: closed world.
  CHECK(sol.call("canRelease", {0, 1}) == 0);
  CHECK(sol.call("assertRVote", {0, 1, 0, 0}) == 0);
}

TEST_CASE("task map reverts on unknown tasks") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  ProcessDescriptor d = load_process(read_fixture("order2cash.json"));
  RoleTable t = build_role_table(p, &d);
  GeneratedContract c = gen_task_role_map(d, t);
  auto sol = testing::SolContract::parse(c.source);
  CHECK(sol.call("roleOfTask", {0}) == 0);
  CHECK(sol.call("roleOfTask", {4}) == 3);
  CHECK(sol.call("roleOfTask", {8}) == 7);
  CHECK_THROWS(sol.call("roleOfTask", {9}));
  REQUIRE(c.manifest.contains("tasks"));
  CHECK(c.manifest["tasks"].size() == 9);
}
