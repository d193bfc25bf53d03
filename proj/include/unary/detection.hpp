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
#include <span>
#include <vector>

#include "unary/trace.hpp"

namespace unary {

/// ds: number of unmasked lanes that newly went to 0 this cycle.
/// `masked` may be empty (nothing masked) or the same length as `newly`.
unsigned detection_signal(std::span<const std::uint8_t> newly,
                          std::span<const std::uint8_t> masked = {});

/// Lowest set index. Throws ValidationError when no bit is set.
std::size_t priority_encode(std::span<const std::uint8_t> detected);

/// Everything downstream of the generator bank: detection flip-flops, output
/// mask, controller FSM, output address pointer, output memory and the trace.
/// Shared by the min- and max-finding engines.
class DetectionPath {
 public:
  DetectionPath(std::size_t n, Architecture arch);

  std::size_t size() const { return detect_ff_.size(); }
  /// Lane still competing: not yet detected and not yet written.
  bool active(std::size_t i) const { return !detect_ff_[i] && !output_mask_[i]; }
  bool done() const { return out_ptr_ == size(); }

  /// Closes a FindIndex cycle: latches `newly` into the flip-flops and the
  /// pending set and moves to PutResults when ds >= 1. Returns ds.
  unsigned latch(std::span<const std::uint8_t> newly, std::uint64_t elapsed_cycle);

  /// One PutResults cycle: writes the priority-encoded pending lane, whose
  /// value is supplied by `value_of(lane)`, to the current output address.
  template <class ValueOf>
  void drain_one(std::uint64_t elapsed_cycle, ValueOf&& value_of) {
    const std::size_t lane = priority_encode(pending_);
    write(lane, value_of(lane), elapsed_cycle);
  }

  /// Tick issued after completion: recorded, no state change.
  void idle(std::uint64_t elapsed_cycle);

  ControllerState controller() const { return controller_; }
  std::size_t out_ptr() const { return out_ptr_; }
  const std::vector<std::uint8_t>& detect_ff() const { return detect_ff_; }
  const std::vector<std::uint8_t>& output_mask() const { return output_mask_; }
  const std::vector<std::uint8_t>& pending() const { return pending_; }
  const std::vector<std::uint32_t>& outputs() const { return outputs_; }
  /// Generation cycle at which each input lane was detected (0 = not yet).
  const std::vector<std::uint64_t>& detect_cycle() const { return detect_cycle_; }
  /// Generation cycle at which the value stored at each output address was detected.
  const std::vector<std::uint64_t>& rank_cycle() const { return rank_cycle_; }
  const CycleTrace& trace() const { return trace_; }
  CycleTrace take_trace() { return std::move(trace_); }

 private:
  TraceEvent event(std::uint64_t elapsed_cycle) {
    TraceEvent ev;
    ev.cycle = ++tick_;
    ev.elapsed_cycle = elapsed_cycle;
    ev.state = controller_;
    return ev;
  }

  void write(std::size_t lane, std::uint32_t value, std::uint64_t elapsed_cycle);

  std::vector<std::uint8_t> detect_ff_;
  std::vector<std::uint8_t> output_mask_;
  std::vector<std::uint8_t> pending_;
  std::size_t pending_count_ = 0;
  ControllerState controller_ = ControllerState::FindIndex;
  std::size_t out_ptr_ = 0;
  std::vector<std::uint32_t> outputs_;
  std::vector<std::uint64_t> detect_cycle_;
  std::vector<std::uint64_t> rank_cycle_;
  std::uint64_t tick_ = 0;
  CycleTrace trace_;
};

}  // namespace unary
