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

#ifndef ROLEBIND_NOMINATION_NET_HPP
#define ROLEBIND_NOMINATION_NET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "petri.hpp"
#include "types.hpp"

namespace rolebind {

enum class Verdict { Consistent, Inconsistent };

struct ConsistencyResult {
  Verdict verdict{Verdict::Consistent};
  /// Shortest firing sequence from M0 to the stuck marking (INCONSISTENT only).
  std::vector<std::string> counterexample;
  /// Labels of the marked places of the stuck marking.
  std::vector<std::string> stuckMarking;
  std::size_t reachableMarkings{0};
  /// Release statements excluded from the net, one note per statement.
  std::vector<std::string> warnings;
};

/// Per-role state net (unbound/nominated/bound), nomination read-arcs, and
/// one conjunction transition per DNF conjunction set of each endorsed
/// statement. Release statements are skipped with a warning unless `strict`,
/// in which case they raise UnsupportedStatement.
PetriNet build_nomination_net(const Policy& policy, const RoleTable& table,
                              bool strict = false,
                              std::vector<std::string>* warnings = nullptr);

inline constexpr std::size_t kDefaultMarkingCap = 1000000;

/// Exhaustive reachability check of the home-marking property: the all-bound
/// marking must stay reachable from every reachable marking. Counterexamples
/// are shortest, with deterministic tie-breaking by transition label.
ConsistencyResult check_consistency(const PetriNet& net,
                                    std::size_t markingCap = kDefaultMarkingCap);

std::string consistency_report_text(const ConsistencyResult& result);
std::string consistency_report_json(const ConsistencyResult& result);

}  // namespace rolebind

#endif  // ROLEBIND_NOMINATION_NET_HPP
