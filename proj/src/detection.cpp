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

#include "unary/detection.hpp"

#include <algorithm>
#include <string>

#include "unary/error.hpp"

namespace unary {

unsigned detection_signal(std::span<const std::uint8_t> newly,
                          std::span<const std::uint8_t> masked) {
  if (!masked.empty() && masked.size() != newly.size()) {
    throw ValidationError("detection mask width mismatch");
  }
  unsigned ds = 0;
  for (std::size_t i = 0; i < newly.size(); ++i) {
    if (newly[i] && (masked.empty() || !masked[i])) ++ds;
  }
  return ds;
}

std::size_t priority_encode(std::span<const std::uint8_t> detected) {
  const auto it = std::find_if(detected.begin(), detected.end(), [](auto b) { return b != 0; });
  if (it == detected.end()) throw ValidationError("priority encoder: no detection");
  return static_cast<std::size_t>(it - detected.begin());
}

DetectionPath::DetectionPath(std::size_t n, Architecture arch)
    : detect_ff_(n, 0),
      output_mask_(n, 0),
      pending_(n, 0),
      outputs_(n, 0),
      detect_cycle_(n, 0),
      rank_cycle_(n, 0),
      trace_(arch) {}

unsigned DetectionPath::latch(std::span<const std::uint8_t> newly, std::uint64_t elapsed_cycle) {
  if (controller_ != ControllerState::FindIndex) {
    throw SimulationError("latch outside FindIndex");
  }
  if (newly.size() != size()) throw SimulationError("SED width mismatch");
  const unsigned ds = detection_signal(newly, output_mask_);

  TraceEvent ev = event(elapsed_cycle);
  ev.ds = ds;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!newly[i] || output_mask_[i]) continue;
    if (detect_ff_[i]) throw SimulationError("lane " + std::to_string(i) + " detected twice");
    detect_ff_[i] = 1;
    pending_[i] = 1;
    ++pending_count_;
    detect_cycle_[i] = elapsed_cycle;
    ev.detected.push_back(i);
  }
  if (ds >= 1) controller_ = ControllerState::PutResults;
  trace_.append(std::move(ev));
  return ds;
}

void DetectionPath::write(std::size_t lane, std::uint32_t value, std::uint64_t elapsed_cycle) {
  if (controller_ != ControllerState::PutResults) {
    throw SimulationError("output write outside PutResults");
  }
  if (out_ptr_ >= size()) throw SimulationError("output memory overflow");

  const OutputWrite w{.address = out_ptr_, .value = value, .source = lane};
  outputs_[out_ptr_] = value;
  rank_cycle_[out_ptr_] = detect_cycle_[lane];
  ++out_ptr_;
  output_mask_[lane] = 1;
  pending_[lane] = 0;
  --pending_count_;

  TraceEvent ev = event(elapsed_cycle);
  ev.write = w;
  trace_.append(std::move(ev));
  if (pending_count_ == 0) controller_ = ControllerState::FindIndex;
  if (done()) trace_.mark_complete();
}

void DetectionPath::idle(std::uint64_t elapsed_cycle) {
  TraceEvent ev = event(elapsed_cycle);
  ev.idle = true;
  trace_.append(std::move(ev));
}

}  // namespace unary
