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

#include "unary/detection.hpp"
#include "unary/trace.hpp"
#include "unary/ung.hpp"

namespace unary {

struct SorterConfig {
  std::size_t n_inputs;
  unsigned width;

  /// Throws ValidationError unless N >= 2 and 1 <= M <= 32.
  void validate() const;
};

/// Result of running an engine to completion.
struct SortRun {
  std::vector<std::uint32_t> sorted;
  CycleTrace trace;
  std::vector<std::uint64_t> detect_cycle;  ///< per input index
  std::vector<std::uint64_t> rank_cycle;    ///< per output address
};

/// Value path of the min-finding engine: the detected unit's remainder
/// (always 0 at detection) plus Elapsed_Cycle - 1. Throws SimulationError if
/// the sum does not fit in M bits.
std::uint32_t retrieve_value(std::uint64_t elapsed_cycle, unsigned width,
                             std::uint32_t remainder = 0);

/// Ascending-order comparison-free sorter. A bank of CfungUnits feeds the
/// smallest-element detector: the first unit to emit a 0 holds the minimum.
/// Ties raise ds above one and are drained serially, one output write per
/// cycle, while generation is stalled.
class MinSortEngine {
 public:
  static MinSortEngine load(std::span<const BinaryValue> values, SorterConfig cfg);
  static MinSortEngine load(std::span<const std::uint32_t> values, SorterConfig cfg);

  /// Advances one clock. Ticking a finished engine records an idle event.
  void tick();
  bool done() const { return path_.done(); }

  const SorterConfig& config() const { return cfg_; }
  const std::vector<CfungUnit>& units() const { return units_; }
  std::uint64_t elapsed_cycle() const { return elapsed_cycle_; }
  const DetectionPath& path() const { return path_; }
  /// ds of the most recent FindIndex cycle.
  unsigned last_ds() const { return last_ds_; }

  SortRun finish();

 private:
  MinSortEngine(SorterConfig cfg, std::vector<CfungUnit> units);

  SorterConfig cfg_;
  std::vector<CfungUnit> units_;
  std::vector<std::uint8_t> newly_;
  std::uint64_t elapsed_cycle_ = 0;
  unsigned last_ds_ = 0;
  DetectionPath path_;
};

/// Loads, ticks to completion and returns the ascending result.
SortRun engine_run(std::span<const std::uint32_t> values, SorterConfig cfg);

}  // namespace unary
