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

#include "nomination_net.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "dnf.hpp"
#include "errors.hpp"

#include "json.hpp"

namespace rolebind {
namespace {

struct MarkingHash {
  std::size_t operator()(const Marking& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string conj_label(const std::string& nomineeLabel, const Mask256& cs,
                       const RoleTable& table) {
  std::string label = "eex_" + nomineeLabel + "{";
  bool first = true;
  for (unsigned bit : cs.bits()) {
    if (!first) label += ",";
    label += table.entry(bit).ref.display();
    first = false;
  }
  return label + "}";
}

}  // namespace

PetriNet build_nomination_net(const Policy& policy, const RoleTable& table,
                              bool strict,
                              std::vector<std::string>* warnings) {
  PetriNet net;

  // Step 1+2: the merged per-role state nets u -> nm -> n -> en -> b.
  std::vector<std::size_t> uPlace(table.size()), nPlace(table.size()),
      bPlace(table.size()), nmTrans(table.size()), enTrans(table.size());
  for (const auto& entry : table.entries()) {
    const std::string label = entry.ref.display();
    std::size_t i = entry.index;
    uPlace[i] = net.add_place("u_" + label);
    nPlace[i] = net.add_place("n_" + label);
    bPlace[i] = net.add_place("b_" + label);
    nmTrans[i] = net.add_transition("nm_" + label);
    enTrans[i] = net.add_transition("en_" + label);
    net.add_input_arc(uPlace[i], nmTrans[i]);
    net.add_output_arc(nmTrans[i], nPlace[i]);
    net.add_input_arc(nPlace[i], enTrans[i]);
    net.add_output_arc(enTrans[i], bPlace[i]);
  }

  for (const auto& stmt : policy.statements) {
    if (stmt.kind == StatementKind::Releases) {
      if (strict)
        throw Error(ErrorCode::UnsupportedStatement,
                    "release statements have no net mapping: " +
                        stmt.nominator + " releases " + stmt.nominee);
      if (warnings)
        warnings->push_back("release statement not mapped to the net: " +
                            stmt.nominator + " releases " + stmt.nominee);
      continue;
    }
    std::size_t nominator = table.resolve(stmt.nominator, stmt.scope);
    std::size_t nominee = table.resolve(stmt.nominee, stmt.scope);

    // Step 3: read-arc pair between the nominator's bound place and the
    // nominee's nomination transition.
    net.add_input_arc(bPlace[nominator], nmTrans[nominee]);
    net.add_output_arc(nmTrans[nominee], bPlace[nominator]);

    // Step 4: endorsement subnet.
    if (!stmt.endorsement) continue;
    const std::string neLabel = table.entry(nominee).ref.display();
    std::size_t disj, eex;
    if (auto existing = net.find_place("disj_" + neLabel)) {
      disj = *existing;
      eex = *net.find_place("eex_" + neLabel);
    } else {
      disj = net.add_place("disj_" + neLabel);
      eex = net.add_place("eex_" + neLabel);
    }
    net.add_output_arc(nmTrans[nominee], disj);
    net.add_input_arc(eex, enTrans[nominee]);

    DnfConstraint dnf = to_dnf(*stmt.endorsement, table, stmt.scope);
    for (const auto& cs : dnf.conjunctionSets) {
      const std::string label = conj_label(neLabel, cs, table);
      std::size_t t;
      if (auto existing = net.find_transition(label))
        t = *existing;
      else
        t = net.add_transition(label);
      for (unsigned bit : cs.bits()) {
        net.add_input_arc(bPlace[bit], t);
        net.add_output_arc(t, bPlace[bit]);
      }
      net.add_input_arc(disj, t);
      // The output arc into the eex place completes the token flow from
      // conjunction outcome to the endorse transition.
      net.add_output_arc(t, eex);
    }
  }

  // Step 5: initial marking.
  for (const auto& entry : table.entries())
    net.initial_marking()[entry.isCaseCreator ? bPlace[entry.index]
                                              : uPlace[entry.index]] = 1;
  return net;
}

ConsistencyResult check_consistency(const PetriNet& net,
                                    std::size_t markingCap) {
  ConsistencyResult result;

  // Deterministic exploration: successors in transition-label order.
  std::vector<std::size_t> order(net.transition_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return net.transition_labels()[a] < net.transition_labels()[b];
  });

  // Target marking M*: one token in every b place, zero elsewhere.
  Marking target(net.place_count(), 0);
  for (std::size_t p = 0; p < net.place_count(); ++p)
    if (net.place_labels()[p].rfind("b_", 0) == 0) target[p] = 1;

  std::unordered_map<Marking, std::size_t, MarkingHash> ids;
  std::vector<Marking> markings;
  std::vector<std::vector<std::size_t>> successors;  // node -> node ids
  std::vector<std::size_t> parent, parentTransition;
  std::vector<bool> dead;

  auto intern = [&](const Marking& m, std::size_t from,
                    std::size_t via) -> std::size_t {
    auto it = ids.find(m);
    if (it != ids.end()) return it->second;
    if (markings.size() >= markingCap)
      throw Error(ErrorCode::StateSpaceLimitExceeded,
                  "reachable-marking cap exceeded (" +
                      std::to_string(markingCap) + ")");
    for (auto v : m) {
      if (v > 1)
        throw Error(ErrorCode::InvalidArgument,
                    "1-safety violated during exploration");
    }
    std::size_t id = markings.size();
    ids.emplace(m, id);
    markings.push_back(m);
    successors.emplace_back();
    parent.push_back(from);
    parentTransition.push_back(via);
    dead.push_back(false);
    return id;
  };

  std::size_t root = intern(net.initial_marking(), SIZE_MAX, SIZE_MAX);
  (void)root;
  for (std::size_t node = 0; node < markings.size(); ++node) {
    Marking current = markings[node];
    bool any = false;
    for (std::size_t t : order) {
      if (!net.is_enabled(current, t)) continue;
      any = true;
      std::size_t succ = intern(fire(net, current, t), node, t);
      successors[node].push_back(succ);
    }
    dead[node] = !any;
  }
  result.reachableMarkings = markings.size();

  // Backward reachability from M*.
  std::vector<bool> reachesTarget(markings.size(), false);
  auto targetIt = ids.find(target);
  if (targetIt != ids.end()) {
    std::vector<std::vector<std::size_t>> predecessors(markings.size());
    for (std::size_t n = 0; n < markings.size(); ++n)
      for (auto s : successors[n]) predecessors[s].push_back(n);
    std::deque<std::size_t> queue{targetIt->second};
    reachesTarget[targetIt->second] = true;
    while (!queue.empty()) {
      std::size_t n = queue.front();
      queue.pop_front();
      for (auto p : predecessors[n]) {
        if (!reachesTarget[p]) {
          reachesTarget[p] = true;
          queue.push_back(p);
        }
      }
    }
  }

  // Node ids follow BFS discovery order, so the first bad node is at minimal
  // distance; prefer a stuck (dead) one for the counterexample.
  std::size_t bad = SIZE_MAX;
  for (std::size_t n = 0; n < markings.size(); ++n) {
    if (reachesTarget[n]) continue;
    if (bad == SIZE_MAX) bad = n;
    if (dead[n]) {
      bad = n;
      break;
    }
  }

  if (bad == SIZE_MAX) {
    result.verdict = Verdict::Consistent;
    return result;
  }
  result.verdict = Verdict::Inconsistent;
  std::vector<std::string> path;
  for (std::size_t n = bad; parent[n] != SIZE_MAX; n = parent[n])
    path.push_back(net.transition_labels()[parentTransition[n]]);
  std::reverse(path.begin(), path.end());
  result.counterexample = std::move(path);
  for (std::size_t p = 0; p < net.place_count(); ++p)
    if (markings[bad][p] > 0)
      result.stuckMarking.push_back(net.place_labels()[p]);
  return result;
}

std::string consistency_report_text(const ConsistencyResult& result) {
  std::ostringstream out;
  out << "verdict: "
      << (result.verdict == Verdict::Consistent ? "CONSISTENT"
                                                : "INCONSISTENT")
      << "\n";
  out << "reachable markings: " << result.reachableMarkings << "\n";
  if (result.verdict == Verdict::Inconsistent) {
    out << "counterexample:";
    for (const auto& t : result.counterexample) out << " " << t;
    out << "\nstuck marking:";
    for (const auto& p : result.stuckMarking) out << " " << p;
    out << "\n";
  }
  for (const auto& w : result.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string consistency_report_json(const ConsistencyResult& result) {
  nlohmann::ordered_json j;
  j["verdict"] =
      result.verdict == Verdict::Consistent ? "CONSISTENT" : "INCONSISTENT";
  j["reachableMarkings"] = result.reachableMarkings;
  if (result.verdict == Verdict::Inconsistent) {
    j["counterexample"] = result.counterexample;
    j["stuckMarking"] = result.stuckMarking;
  }
  j["warnings"] = result.warnings;
  return j.dump(2) + "\n";
}

}  // namespace rolebind
