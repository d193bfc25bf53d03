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

#include <cstdint>
#include <span>
#include <vector>

#include "unary/bitstream.hpp"
#include "unary/detection.hpp"
#include "unary/sorter_min.hpp"

namespace unary {

/// Comparator bit of the max-finding baseline: 1 iff value >= counter.
std::uint8_t max_bit(const BinaryValue& v, std::uint64_t counter);

/// Descending-order baseline: a shared down counter from 2^M - 1 and one
/// comparator per input; the first lane to emit a 1 holds the maximum, and
/// the counter value at that cycle is the retrieved value.
class MaxSortEngine {
 public:
  static MaxSortEngine load(std::span<const std::uint32_t> values, SorterConfig cfg);

  void tick();
  bool done() const { return path_.done(); }

  const SorterConfig& config() const { return cfg_; }
  /// Counter value to be compared in the next generation cycle.
  std::uint64_t counter() const { return next_counter_; }
  std::uint64_t elapsed_cycle() const { return elapsed_cycle_; }
  const DetectionPath& path() const { return path_; }

  SortRun finish();

 private:
  MaxSortEngine(SorterConfig cfg, std::vector<BinaryValue> thresholds);

  SorterConfig cfg_;
  std::vector<BinaryValue> thresholds_;
  std::vector<std::uint8_t> newly_;
  std::uint64_t next_counter_;
  std::uint64_t current_counter_ = 0;
  std::uint64_t elapsed_cycle_ = 0;
  DetectionPath path_;
};

/// Loads, ticks to completion and returns the descending result.
SortRun max_engine_run(std::span<const std::uint32_t> values, SorterConfig cfg);

}  // namespace unary
