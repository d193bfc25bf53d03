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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace unary {

enum class Architecture { ProposedMin, PriorMax, UnaryBatcher };

std::string_view to_string(Architecture arch);
/// Accepts the canonical names and the short aliases min / max / batcher.
Architecture parse_architecture(std::string_view name);

enum class ControllerState : std::uint8_t { FindIndex, PutResults };

std::string_view to_string(ControllerState s);

struct OutputWrite {
  std::size_t address;
  std::uint32_t value;
  std::size_t source;  ///< input index whose value was written
};

/// One simulated clock.
struct TraceEvent {
  std::uint64_t cycle;          ///< 1-based tick index, strictly increasing
  std::uint64_t elapsed_cycle;  ///< generation cycles so far, after this tick
  ControllerState state;        ///< controller state while this tick executed
  unsigned ds = 0;
  std::vector<std::size_t> detected;
  std::optional<OutputWrite> write;
  bool idle = false;  ///< tick issued after sorting completed
};

class CycleTrace {
 public:
  explicit CycleTrace(Architecture arch = Architecture::ProposedMin) : arch_(arch) {}

  Architecture architecture() const { return arch_; }
  const std::vector<TraceEvent>& events() const { return events_; }
  bool complete() const { return complete_; }

  void append(TraceEvent e);
  void mark_complete() { complete_ = true; }

  /// Columns: arch,cycle,elapsed_cycle,state,ds,detected_indices,writes.
  /// Index lists are ';'-separated and writes render as address:value.
  void write_csv(std::ostream& os, bool header = true) const;

 private:
  Architecture arch_;
  std::vector<TraceEvent> events_;
  bool complete_ = false;
};

/// Non-idle ticks of a completed trace; throws ValidationError otherwise.
std::uint64_t total_cycles(const CycleTrace& trace);

/// Generation cycles (elapsed_cycle at the last non-idle tick).
std::uint64_t generation_cycles(const CycleTrace& trace);

}  // namespace unary
