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

#include "unary/sorter_max.hpp"

#include <string>

#include "unary/error.hpp"

namespace unary {

std::uint8_t max_bit(const BinaryValue& v, std::uint64_t counter) {
  if (counter > max_value(v.width())) {
    throw ValidationError("counter " + std::to_string(counter) + " exceeds M=" +
                          std::to_string(v.width()));
  }
  return v.value() >= counter ? 1 : 0;
}

MaxSortEngine::MaxSortEngine(SorterConfig cfg, std::vector<BinaryValue> thresholds)
    : cfg_(cfg),
      thresholds_(std::move(thresholds)),
      newly_(cfg.n_inputs, 0),
      next_counter_(max_value(cfg.width)),
      path_(cfg.n_inputs, Architecture::PriorMax) {}

MaxSortEngine MaxSortEngine::load(std::span<const std::uint32_t> values, SorterConfig cfg) {
  cfg.validate();
  if (values.size() != cfg.n_inputs) {
    throw ValidationError("expected " + std::to_string(cfg.n_inputs) + " inputs, got " +
                          std::to_string(values.size()));
  }
  std::vector<BinaryValue> thresholds;
  thresholds.reserve(values.size());
  for (auto v : values) thresholds.emplace_back(v, cfg.width);
  return MaxSortEngine(cfg, std::move(thresholds));
}

void MaxSortEngine::tick() {
  if (done()) {
    path_.idle(elapsed_cycle_);
    return;
  }
  if (path_.controller() == ControllerState::FindIndex) {
    ++elapsed_cycle_;
    current_counter_ = next_counter_;
    for (std::size_t i = 0; i < thresholds_.size(); ++i) {
      newly_[i] = path_.active(i) && max_bit(thresholds_[i], current_counter_);
    }
    path_.latch(newly_, elapsed_cycle_);
    if (current_counter_ == 0) {
      // Every lane satisfies value >= 0, so the drain that follows finishes the sort.
      if (!path_.done() && path_.controller() == ControllerState::FindIndex) {
        throw SimulationError("counter exhausted with undetected inputs");
      }
    } else {
      --next_counter_;
    }
  } else {
    path_.drain_one(elapsed_cycle_,
                    [&](std::size_t) { return static_cast<std::uint32_t>(current_counter_); });
  }
}

SortRun MaxSortEngine::finish() {
  while (!done()) tick();
  return SortRun{.sorted = path_.outputs(),
                 .trace = path_.take_trace(),
                 .detect_cycle = path_.detect_cycle(),
                 .rank_cycle = path_.rank_cycle()};
}

SortRun max_engine_run(std::span<const std::uint32_t> values, SorterConfig cfg) {
  return MaxSortEngine::load(values, cfg).finish();
}

}  // namespace unary
