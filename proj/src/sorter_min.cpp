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

#include "unary/sorter_min.hpp"

#include <string>

#include "unary/error.hpp"

namespace unary {

void SorterConfig::validate() const {
  if (n_inputs < 2) {
    throw ValidationError("sorter needs N >= 2 inputs, got " + std::to_string(n_inputs));
  }
  check_width(width);
}

std::uint32_t retrieve_value(std::uint64_t elapsed_cycle, unsigned width, std::uint32_t remainder) {
  if (elapsed_cycle == 0) throw SimulationError("retrieve_value before the first generation cycle");
  const std::uint64_t v = std::uint64_t{remainder} + (elapsed_cycle - 1);
  if (v > max_value(width)) {
    throw SimulationError("retrieved value " + std::to_string(v) + " exceeds M=" +
                          std::to_string(width));
  }
  return static_cast<std::uint32_t>(v);
}

MinSortEngine::MinSortEngine(SorterConfig cfg, std::vector<CfungUnit> units)
    : cfg_(cfg),
      units_(std::move(units)),
      newly_(cfg.n_inputs, 0),
      path_(cfg.n_inputs, Architecture::ProposedMin) {}

MinSortEngine MinSortEngine::load(std::span<const BinaryValue> values, SorterConfig cfg) {
  cfg.validate();
  if (values.size() != cfg.n_inputs) {
    throw ValidationError("expected " + std::to_string(cfg.n_inputs) + " inputs, got " +
                          std::to_string(values.size()));
  }
  std::vector<CfungUnit> units;
  units.reserve(values.size());
  for (const auto& v : values) {
    if (v.width() != cfg.width) {
      throw ValidationError("input width " + std::to_string(v.width()) + " != M=" +
                            std::to_string(cfg.width));
    }
    units.push_back(CfungUnit::load(v));
  }
  return MinSortEngine(cfg, std::move(units));
}

MinSortEngine MinSortEngine::load(std::span<const std::uint32_t> values, SorterConfig cfg) {
  cfg.validate();
  std::vector<BinaryValue> words;
  words.reserve(values.size());
  for (auto v : values) words.emplace_back(v, cfg.width);
  return load(words, cfg);
}

void MinSortEngine::tick() {
  if (done()) {
    path_.idle(elapsed_cycle_);
    return;
  }
  if (path_.controller() == ControllerState::FindIndex) {
    ++elapsed_cycle_;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      newly_[i] = path_.active(i) && units_[i].step() == 0;
    }
    last_ds_ = path_.latch(newly_, elapsed_cycle_);
  } else {
    path_.drain_one(elapsed_cycle_, [&](std::size_t lane) {
      return retrieve_value(elapsed_cycle_, cfg_.width, units_[lane].remainder());
    });
  }
}

SortRun MinSortEngine::finish() {
  while (!done()) tick();
  return SortRun{.sorted = path_.outputs(),
                 .trace = path_.take_trace(),
                 .detect_cycle = path_.detect_cycle(),
                 .rank_cycle = path_.rank_cycle()};
}

SortRun engine_run(std::span<const std::uint32_t> values, SorterConfig cfg) {
  return MinSortEngine::load(values, cfg).finish();
}

}  // namespace unary
