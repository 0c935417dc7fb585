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

#include "petri.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace rolebind {

std::size_t PetriNet::add_place(const std::string& label) {
  placeLabels_.push_back(label);
  initialMarking_.push_back(0);
  return placeLabels_.size() - 1;
}

std::size_t PetriNet::add_transition(const std::string& label) {
  transitionLabels_.push_back(label);
  inputs_.emplace_back();
  outputs_.emplace_back();
  return transitionLabels_.size() - 1;
}

void PetriNet::add_input_arc(std::size_t place, std::size_t transition) {
  auto& in = inputs_.at(transition);
  if (std::find(in.begin(), in.end(), place) == in.end()) in.push_back(place);
}

void PetriNet::add_output_arc(std::size_t transition, std::size_t place) {
  auto& out = outputs_.at(transition);
  if (std::find(out.begin(), out.end(), place) == out.end())
    out.push_back(place);
}

std::optional<std::size_t> PetriNet::find_place(const std::string& label) const {
  for (std::size_t i = 0; i < placeLabels_.size(); ++i)
    if (placeLabels_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> PetriNet::find_transition(
    const std::string& label) const {
  for (std::size_t i = 0; i < transitionLabels_.size(); ++i)
    if (transitionLabels_[i] == label) return i;
  return std::nullopt;
}

std::size_t PetriNet::arc_count() const {
  std::size_t n = 0;
  for (const auto& in : inputs_) n += in.size();
  for (const auto& out : outputs_) n += out.size();
  return n;
}

bool PetriNet::is_enabled(const Marking& m, std::size_t t) const {
  for (auto p : inputs_[t])
    if (m[p] == 0) return false;
  return true;
}

std::vector<std::size_t> enabled_transitions(const PetriNet& net,
                                             const Marking& m) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    if (net.is_enabled(m, t)) out.push_back(t);
  return out;
}

Marking fire(const PetriNet& net, const Marking& m, std::size_t t) {
  if (!net.is_enabled(m, t))
    throw Error(ErrorCode::NotEnabled,
                "transition '" + net.transition_labels()[t] +
                    "' is not enabled");
  Marking next = m;
  for (auto p : net.inputs(t)) --next[p];
  for (auto p : net.outputs(t)) ++next[p];
  return next;
}

std::string export_dot(const PetriNet& net, const Marking* marking) {
  std::ostringstream out;
  out << "digraph nomination_net {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t p = 0; p < net.place_count(); ++p) {
    const auto& label = net.place_labels()[p];
    out << "  \"" << label << "\" [shape=circle";
    if (marking && (*marking)[p] > 0)
      out << ", label=\"" << label << "\\n(" << int((*marking)[p]) << ")\"";
    out << "];\n";
  }
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    out << "  \"" << net.transition_labels()[t] << "\" [shape=box];\n";
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    for (auto p : net.inputs(t))
      out << "  \"" << net.place_labels()[p] << "\" -> \""
          << net.transition_labels()[t] << "\";\n";
    for (auto p : net.outputs(t))
      out << "  \"" << net.transition_labels()[t] << "\" -> \""
          << net.place_labels()[p] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rolebind
