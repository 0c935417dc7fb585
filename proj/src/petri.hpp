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

#ifndef ROLEBIND_PETRI_HPP
#define ROLEBIND_PETRI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rolebind {

/// Token count per place, indexed by place id.
using Marking = std::vector<std::uint8_t>;

/// Place/transition net with labeled nodes. Arcs are stored per transition as
/// input and output place sets; a read-arc pair is simply a place appearing
/// on both sides.
class PetriNet {
 public:
  std::size_t add_place(const std::string& label);
  std::size_t add_transition(const std::string& label);

  /// Idempotent (set semantics): adding the same arc twice is a no-op.
  void add_input_arc(std::size_t place, std::size_t transition);
  void add_output_arc(std::size_t transition, std::size_t place);

  std::optional<std::size_t> find_place(const std::string& label) const;
  std::optional<std::size_t> find_transition(const std::string& label) const;

  const std::vector<std::string>& place_labels() const { return placeLabels_; }
  const std::vector<std::string>& transition_labels() const {
    return transitionLabels_;
  }
  const std::vector<std::size_t>& inputs(std::size_t t) const {
    return inputs_[t];
  }
  const std::vector<std::size_t>& outputs(std::size_t t) const {
    return outputs_[t];
  }

  std::size_t place_count() const { return placeLabels_.size(); }
  std::size_t transition_count() const { return transitionLabels_.size(); }
  std::size_t arc_count() const;

  Marking& initial_marking() { return initialMarking_; }
  const Marking& initial_marking() const { return initialMarking_; }

  bool is_enabled(const Marking& m, std::size_t t) const;

 private:
  std::vector<std::string> placeLabels_;
  std::vector<std::string> transitionLabels_;
  std::vector<std::vector<std::size_t>> inputs_;   // per transition
  std::vector<std::vector<std::size_t>> outputs_;  // per transition
  Marking initialMarking_;
};

/// Transitions enabled at m: every input place holds a token.
std::vector<std::size_t> enabled_transitions(const PetriNet& net,
                                             const Marking& m);

/// Fires t at m; throws NotEnabled when t is not enabled.
Marking fire(const PetriNet& net, const Marking& m, std::size_t t);

/// Deterministic DOT export; a marking, when given, annotates token counts.
std::string export_dot(const PetriNet& net,
                       const Marking* marking = nullptr);

}  // namespace rolebind

#endif  // ROLEBIND_PETRI_HPP
