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

#include <random>

#include "dnf.hpp"
#include "errors.hpp"
#include "mask.hpp"
#include "support/oracles.hpp"

using namespace rolebind;

namespace {

RoleTable table_of(const std::vector<std::string>& names) {
  RoleTable t;
  for (std::size_t i = 0; i < names.size(); ++i)
    t.add({RoleRef{std::nullopt, names[i]}, i, i == 0, false});
  return t;
}

Mask256 mask_of(std::initializer_list<unsigned> bits) {
  Mask256 m;
  for (unsigned b : bits) m.set(b);
  return m;
}

}  // namespace

TEST_CASE("mask decimal round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Mask256 m;
    std::uniform_int_distribution<unsigned> bit(0, 255);
    std::uniform_int_distribution<int> count(0, 12);
    int n = count(rng);
    for (int j = 0; j < n; ++j) m.set(bit(rng));
    auto back = Mask256::from_decimal(m.to_decimal());
    REQUIRE(back);
    CHECK(*back == m);
  }
  CHECK(Mask256{}.to_decimal() == "0");
  // 2^255
  CHECK(Mask256::bit(255).to_decimal() ==
        "578960446186580977117854925043439539266349923328202820197287920039565"
        "64819968");
  CHECK(!Mask256::from_decimal("not a number"));
}

TEST_CASE("to_dnf distributes and over or") {
  auto t = table_of({"A", "B", "C", "D"});
  // (A or B) and (C or D) -> AC | AD | BC | BD
  SetExpr e = SetExpr::combine(
      SetOp::And,
      SetExpr::combine(SetOp::Or, SetExpr::role("A"), SetExpr::role("B")),
      SetExpr::combine(SetOp::Or, SetExpr::role("C"), SetExpr::role("D")));
  DnfConstraint c = to_dnf(e, t, std::nullopt);
  REQUIRE(c.conjunctionSets.size() == 4);
  CHECK(c.relevant_roles() == mask_of({0, 1, 2, 3}));
}

TEST_CASE("to_dnf removes absorbed supersets") {
  auto t = table_of({"A", "B"});
  // A or (A and B) -> A
  SetExpr e = SetExpr::combine(
      SetOp::Or, SetExpr::role("A"),
      SetExpr::combine(SetOp::And, SetExpr::role("A"), SetExpr::role("B")));
  DnfConstraint c = to_dnf(e, t, std::nullopt);
  REQUIRE(c.conjunctionSets.size() == 1);
  CHECK(c.conjunctionSets[0] == mask_of({0}));
}

TEST_CASE("endorsement outcomes on (A and B) or (B and C)") {
  DnfConstraint c{{mask_of({0, 1}), mask_of({1, 2})}};
  CHECK(endorsement_outcome(c, Mask256{}, Mask256{}) ==
        EndorsementOutcome::Pending);
  CHECK(endorsement_outcome(c, mask_of({0, 1}), Mask256{}) ==
        EndorsementOutcome::Satisfied);
  // B rejecting kills both conjunction sets.
  CHECK(endorsement_outcome(c, Mask256{}, mask_of({1})) ==
        EndorsementOutcome::Unsatisfiable);
  // A rejecting still leaves B and C open.
  CHECK(endorsement_outcome(c, Mask256{}, mask_of({0})) ==
        EndorsementOutcome::Pending);
  CHECK(endorsement_outcome(c, mask_of({1, 2}), mask_of({0})) ==
        EndorsementOutcome::Satisfied);
}

TEST_CASE("overlapping vote masks are rejected") {
  DnfConstraint c{{mask_of({0})}};
  CHECK_THROWS_AS(endorsement_outcome(c, mask_of({0}), mask_of({0})), Error);
}

TEST_CASE("endorsement_outcome matches the brute-force oracle") {
  std::mt19937 rng(20260824);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    DnfConstraint c = testing::random_dnf(rng, 6, 4);
    auto bits = c.relevant_roles().bits();
    // All disjoint (endorsed, rejected) assignments over the relevant roles.
    for (std::uint64_t e = 0; e < (1u << bits.size()); ++e) {
      for (std::uint64_t r = 0; r < (1u << bits.size()); ++r) {
        if (e & r) continue;
        Mask256 em, rm;
        for (std::size_t i = 0; i < bits.size(); ++i) {
          if (e & (1u << i)) em.set(bits[i]);
          if (r & (1u << i)) rm.set(bits[i]);
        }
        CHECK(endorsement_outcome(c, em, rm) ==
              testing::oracle_outcome(c, em, rm));
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("binding_check IN and NOT_IN") {
  DnfConstraint c{{mask_of({1, 2}), mask_of({3})}};
  CHECK(binding_check(Polarity::In, c, mask_of({1, 2, 5})));
  CHECK(binding_check(Polarity::In, c, mask_of({3})));
  CHECK(!binding_check(Polarity::In, c, mask_of({1, 5})));
  CHECK(!binding_check(Polarity::NotIn, c, mask_of({3})));
  CHECK(binding_check(Polarity::NotIn, c, mask_of({1, 5})));
}
