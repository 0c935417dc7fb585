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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "nomination_net.hpp"
#include "parser.hpp"
#include "petri.hpp"
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

PetriNet net_of(const std::string& fixture) {
  Policy p = parse_policy(read_fixture(fixture));
  return build_nomination_net(p, build_role_table(p));
}

}  // namespace

TEST_CASE("four-role endorsed policy maps to a 14/9/30 net") {
  PetriNet net = net_of("fig5.pol");
  CHECK(net.place_count() == 14);
  CHECK(net.transition_count() == 9);
  CHECK(net.arc_count() == 30);

  // M0: the case creator is bound, everyone else unbound.
  const Marking& m0 = net.initial_marking();
  auto marked = [&](const char* label) {
    auto p = net.find_place(label);
    REQUIRE(p);
    return m0[*p] != 0;
  };
  CHECK(marked("b_A"));
  CHECK(marked("u_B"));
  CHECK(marked("u_C"));
  CHECK(marked("u_D"));
  CHECK(!marked("u_A"));
  CHECK(!marked("b_D"));
  std::size_t tokens = 0;
  for (auto t : m0) tokens += t;
  CHECK(tokens == 4);

  ConsistencyResult r = check_consistency(net);
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(r.counterexample.empty());
  CHECK(r.reachableMarkings > 0);
}

TEST_CASE("mutual endorsement deadlocks") {
  PetriNet net = net_of("fig7.pol");
  ConsistencyResult r = check_consistency(net);
  CHECK(r.verdict == Verdict::Inconsistent);
  CHECK(r.counterexample == std::vector<std::string>{"nm_K", "nm_L"});
  std::set<std::string> stuck(r.stuckMarking.begin(), r.stuckMarking.end());
  CHECK(stuck ==
        std::set<std::string>{"b_J", "n_K", "disj_K", "n_L", "disj_L"});
}

TEST_CASE("read arcs preserve the nominator's bound token") {
  PetriNet net = net_of("fig5.pol");
  auto nmB = net.find_transition("nm_B");
  REQUIRE(nmB);
  auto bA = net.find_place("b_A");
  REQUIRE(bA);
  const auto& in = net.inputs(*nmB);
  const auto& out = net.outputs(*nmB);
  CHECK(std::count(in.begin(), in.end(), *bA) == 1);
  CHECK(std::count(out.begin(), out.end(), *bA) == 1);
}

TEST_CASE("firing semantics") {
  PetriNet net = net_of("fig5.pol");
  Marking m0 = net.initial_marking();
  auto nmB = net.find_transition("nm_B");
  auto nmD = net.find_transition("nm_D");
  REQUIRE(nmB);
  REQUIRE(nmD);
  CHECK(net.is_enabled(m0, *nmB));
  CHECK(!net.is_enabled(m0, *nmD));  // C (the nominator) is not bound yet
  Marking m1 = fire(net, m0, *nmB);
  CHECK(m1[*net.find_place("n_B")] == 1);
  CHECK(m1[*net.find_place("u_B")] == 0);
  CHECK(m1[*net.find_place("b_A")] == 1);  // read arc gave the token back
  CHECK_THROWS_AS(fire(net, m0, *nmD), Error);
}

TEST_CASE("release statements are skipped with a warning") {
  Policy p = parse_policy(
      "{ A is case-creator; A nominates B; A releases B; }");
  RoleTable t = build_role_table(p);
  std::vector<std::string> warnings;
  PetriNet net = build_nomination_net(p, t, false, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("release") != std::string::npos);
  try {
    build_nomination_net(p, t, true);
    FAIL("expected UnsupportedStatement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStatement);
  }
}

TEST_CASE("dot export is deterministic and carries the marking") {
  PetriNet net = net_of("fig5.pol");
  std::string a = export_dot(net, &net.initial_marking());
  std::string b = export_dot(net, &net.initial_marking());
  CHECK(a == b);
  CHECK(a.find("digraph") != std::string::npos);
  CHECK(a.find("b_A") != std::string::npos);
  CHECK(a.find("nm_B") != std::string::npos);
}

TEST_CASE("marking cap aborts the exploration") {
  PetriNet net = net_of("order2cash.pol");
  try {
    check_consistency(net, 3);
    FAIL("expected StateSpaceLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceLimitExceeded);
  }
}

TEST_CASE("order-to-cash policy is consistent") {
  PetriNet net = net_of("order2cash.pol");
  ConsistencyResult r = check_consistency(net);
  CHECK(r.verdict == Verdict::Consistent);
}
