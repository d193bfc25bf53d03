/*
 * Copyright 2026 The unarysort Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "unary/trace.hpp"

#include <ostream>
#include <string>

#include "unary/error.hpp"

namespace unary {

std::string_view to_string(Architecture arch) {
  switch (arch) {
    case Architecture::ProposedMin: return "proposed-min";
    case Architecture::PriorMax: return "prior-max";
    case Architecture::UnaryBatcher: return "unary-batcher";
  }
  return "?";
}

Architecture parse_architecture(std::string_view name) {
  if (name == "proposed-min" || name == "min") return Architecture::ProposedMin;
  if (name == "prior-max" || name == "max") return Architecture::PriorMax;
  if (name == "unary-batcher" || name == "batcher") return Architecture::UnaryBatcher;
  throw ValidationError("unknown architecture '" + std::string(name) + "'");
}

std::string_view to_string(ControllerState s) {
  return s == ControllerState::FindIndex ? "FindIndex" : "PutResults";
}

void CycleTrace::append(TraceEvent e) {
  if (!events_.empty() && e.cycle <= events_.back().cycle) {
    throw SimulationError("trace cycle indices must strictly increase");
  }
  events_.push_back(std::move(e));
}

void CycleTrace::write_csv(std::ostream& os, bool header) const {
  if (header) os << "arch,cycle,elapsed_cycle,state,ds,detected_indices,writes\n";
  for (const auto& e : events_) {
    os << to_string(arch_) << ',' << e.cycle << ',' << e.elapsed_cycle << ','
       << (e.idle ? std::string_view("Idle") : to_string(e.state)) << ',' << e.ds << ',';
    for (std::size_t i = 0; i < e.detected.size(); ++i) {
      if (i) os << ';';
      os << e.detected[i];
    }
    os << ',';
    if (e.write) os << e.write->address << ':' << e.write->value;
    os << '\n';
  }
}

std::uint64_t total_cycles(const CycleTrace& trace) {
  if (!trace.complete()) throw ValidationError("total_cycles needs a completed trace");
  std::uint64_t n = 0;
  for (const auto& e : trace.events()) n += e.idle ? 0 : 1;
  return n;
}

std::uint64_t generation_cycles(const CycleTrace& trace) {
  std::uint64_t elapsed = 0;
  for (const auto& e : trace.events()) {
    if (!e.idle) elapsed = e.elapsed_cycle;
  }
  return elapsed;
}

}  // namespace unary
