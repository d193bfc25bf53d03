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

#include "unary/bench.hpp"

// Trial-level kernels. Each has a serial reference and an OpenMP version;
// the two must agree exactly for any thread count.
namespace unary::kernels {

DetectionMatrix detection_cycles_serial(const BenchConfig& cfg);
DetectionMatrix detection_cycles_omp(const BenchConfig& cfg);

struct CompareSummary {
  std::size_t vectors = 0;
  std::size_t min_vs_oracle = 0;      ///< ProposedMin != std::sort
  std::size_t max_vs_min = 0;         ///< reverse(PriorMax) != ProposedMin
  std::size_t batcher_vs_min = 0;     ///< UnaryBatcher != ProposedMin
  std::size_t cycle_law_failures = 0; ///< total cycles != (max + 1) + N

  std::size_t mismatches() const {
    return min_vs_oracle + max_vs_min + batcher_vs_min + cycle_law_failures;
  }
  friend bool operator==(const CompareSummary&, const CompareSummary&) = default;
};

/// Runs all three architectures on each vector. Vector length must be a
/// power of two (the Batcher network requires it).
CompareSummary compare_serial(std::span<const std::vector<std::uint32_t>> vectors, unsigned width);
CompareSummary compare_omp(std::span<const std::vector<std::uint32_t>> vectors, unsigned width);

int max_threads();

}  // namespace unary::kernels
