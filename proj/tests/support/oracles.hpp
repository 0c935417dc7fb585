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

// Test-only oracles and generators. Everything here is deliberately written
// against the problem definition, not against the library internals, so a bug
// in the production path cannot hide in the oracle.

#ifndef ROLEBIND_TESTS_ORACLES_HPP
#define ROLEBIND_TESTS_ORACLES_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "types.hpp"

namespace rolebind::testing {

/// Brute-force three-outcome endorsement rule: enumerates every completion of
/// the not-yet-voted relevant roles instead of using the monotone shortcut.
EndorsementOutcome oracle_outcome(const DnfConstraint& constraint,
                                  const Mask256& endorsedBy,
                                  const Mask256& rejectedBy);

/// Random DNF constraint over role indices [0, roleCount): 1..maxSets
/// conjunction sets of 1..3 roles each. Not absorption-minimized on purpose.
DnfConstraint random_dnf(std::mt19937& rng, unsigned roleCount,
                         unsigned maxSets);

/// Random negation-free set expression over the given role names.
SetExpr random_set_expr(std::mt19937& rng,
                        const std::vector<std::string>& names, int depth);

/// Random nomination-only policy: case-creator R0 plus roles R1..Rk, each
/// nominated by exactly one earlier role, optionally endorsed by a DNF over
/// earlier roles (<= maxSets conjunction sets of <= 2 roles).
Policy random_nomination_policy(std::mt19937& rng, unsigned maxRoles,
                                unsigned maxSets);

/// Interpreter for the Solidity subset the code generator emits: pure
/// functions over uint parameters; if/return/revert statements; expressions
/// with !, <<, &, |, ==, !=, &&, || at Solidity precedence.
class SolContract {
 public:
  static SolContract parse(const std::string& source);

  bool has_function(const std::string& name) const;
  /// Evaluates a function; bool results come back as 0/1. Throws on revert().
  std::uint64_t call(const std::string& name,
                     const std::vector<std::uint64_t>& args) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace rolebind::testing

#endif  // ROLEBIND_TESTS_ORACLES_HPP
