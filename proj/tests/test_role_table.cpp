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

#include "errors.hpp"
#include "parser.hpp"
#include "process_map.hpp"
#include "role_table.hpp"

using namespace rolebind;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(ROLEBIND_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("order-to-cash roles index in first-mention order") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  RoleTable t = build_role_table(p);
  REQUIRE(t.size() == 8);
  const char* expected[] = {
      "Customer",
      "Supplier",
      "Shipment::Candidate",
      "Shipment::Carrier",
      "Carrier Invoicing::Invoicer",
      "Carrier Invoicing::Invoicee",
      "Supplier Invoicing::Invoicer",
      "Supplier Invoicing::Invoicee",
  };
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(t.entry(i).ref.display() == expected[i]);
    CHECK(t.entry(i).index == i);
  }
  CHECK(t.entry(0).isCaseCreator);
  for (std::size_t i = 1; i < 8; ++i) CHECK(!t.entry(i).isCaseCreator);
}

TEST_CASE("scoped statements fall back to root roles") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  RoleTable t = build_role_table(p);
  // "Under Carrier Invoicing, ... endorsed-by Supplier and Customer" must
  // refer to the root Supplier/Customer, not create scoped copies.
  CHECK(t.resolve("Supplier", std::string("Carrier Invoicing")) == 1);
  CHECK(t.resolve("Customer", std::string("Carrier Invoicing")) == 0);
  // "Carrier" inside Carrier Invoicing resolves to the unique scoped role.
  CHECK(t.resolve("Carrier", std::string("Carrier Invoicing")) == 3);
}

TEST_CASE("ambiguous cross-scope references are errors") {
  Policy p = parse_policy(
      "{ A is case-creator;\n"
      "  Under S1, A nominates X;\n"
      "  Under S2, A nominates X;\n"
      "  Under S3, A nominates Y endorsed-by X; }");
  try {
    build_role_table(p);
    FAIL("expected ScopeResolutionError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ScopeResolutionError);
  }
}

TEST_CASE("undeclared names become fresh root roles; lookup stays strict") {
  // The builder is permissive so constraint-only roles get indices; strict
  // diagnosis is the job of cross_validate and the consistency check.
  Policy p = parse_policy(
      "{ A is case-creator; A nominates B in Ghost; }");
  RoleTable t = build_role_table(p);
  CHECK(t.size() == 3);
  CHECK(t.resolve("Ghost", std::nullopt) == 2);
  try {
    t.resolve("Phantom", std::nullopt);
    FAIL("expected UnknownRole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownRole);
  }
}

TEST_CASE("process descriptor contributes multi flags and extra roles") {
  Policy p = parse_policy(read_fixture("order2cash.pol"));
  ProcessDescriptor d = load_process(read_fixture("order2cash.json"));
  RoleTable t = build_role_table(p, &d);
  REQUIRE(t.size() == 8);
  CHECK(t.entry(2).isMulti);  // Shipment::Candidate (multi-instance task)
  for (std::size_t i = 0; i < 8; ++i)
    if (i != 2) CHECK(!t.entry(i).isMulti);
}

TEST_CASE("role limit is 256") {
  Policy p;
  p.caseCreators.push_back("R0");
  for (int i = 1; i <= 256; ++i) {
    BindingStatement s;
    s.nominator = "R0";
    s.nominee = "R" + std::to_string(i);
    p.statements.push_back(std::move(s));
  }
  try {
    build_role_table(p);
    FAIL("expected RoleLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RoleLimitExceeded);
  }
}
