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
#include <span>
#include <string>
#include <vector>

#include "unary/trace.hpp"

namespace unary {

enum class Distribution { Gaussian, Uniform, File };

Distribution parse_distribution(std::string_view name);
std::string_view to_string(Distribution d);

struct BenchConfig {
  Architecture arch = Architecture::ProposedMin;
  std::size_t n = 16;
  unsigned width = 8;
  Distribution distribution = Distribution::Gaussian;
  double mu = 128.0;
  double sigma = 32.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 2025;
  /// Input vectors for Distribution::File; trial i uses row i mod rows.
  std::vector<std::vector<std::uint32_t>> file_rows;

  void validate() const;
};

/// Round to nearest, clamp to [0, 2^M - 1].
std::uint32_t quantize(double x, unsigned width);

/// Input vector of trial `trial`, drawn from a generator seeded with seed + trial.
std::vector<std::uint32_t> sample_inputs(const BenchConfig& cfg, std::size_t trial);

/// Generation cycle at which the value landing in each output address was
/// detected, one row per trial.
struct DetectionMatrix {
  std::size_t trials = 0;
  std::size_t ranks = 0;
  std::vector<std::uint64_t> cycles;  ///< row-major trials x ranks

  std::uint64_t at(std::size_t trial, std::size_t rank) const { return cycles[trial * ranks + rank]; }
  friend bool operator==(const DetectionMatrix&, const DetectionMatrix&) = default;
};

struct RankStats {
  std::size_t rank;  ///< 1-based: n-th minimum (or maximum for PriorMax)
  double mean_cycles;
  double std_cycles;  ///< sample standard deviation, 0 for a single trial
};

/// Per-rank mean/std, accumulated in trial order.
std::vector<RankStats> rank_stats(const DetectionMatrix& m);

/// Header: n,mean_cycles,std_cycles
void write_bench_csv(std::ostream& os, std::span<const RankStats> stats);

/// JSON sidecar: config echo, seed scheme, sampling rules, version.
std::string bench_metadata_json(const BenchConfig& cfg);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace unary
