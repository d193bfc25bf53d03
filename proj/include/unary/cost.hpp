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
#include <vector>

#include "unary/trace.hpp"

namespace unary {

/// Structural inventory of one sorter configuration. Counts only; no
/// technology data. Scores derived from it are meaningful for ordering
/// architectures against each other, not as areas.
struct ResourceCount {
  std::uint64_t registers_bits = 0;
  std::uint64_t adder_bits = 0;  ///< adder, incrementer and decrementer bit slices
  std::uint64_t comparator_bits = 0;
  std::uint64_t or_inputs = 0;
  std::uint64_t encoder_inputs = 0;
  std::uint64_t mux_inputs = 0;
  std::uint64_t cas_blocks = 0;

  friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

/// Gate-equivalent weight per resource category.
struct WeightSet {
  double register_bit = 4.0;
  double adder_bit = 5.0;
  double comparator_bit = 3.0;
  double or_input = 1.0;
  double encoder_input = 2.0;
  double mux_input = 1.0;
  double cas_block = 2.0;

  /// Throws ValidationError unless every weight is > 0.
  void validate() const;
  WeightSet scaled(double k) const;
};

/// ProposedMin: N x (remainder register, decrementer, Out_OR tree) plus the
/// detector, encoder, controller, Elapsed_Cycle counter and retrieval adder.
/// PriorMax: N x (input register, conventional up/down-counter UNG,
/// comparator) plus the same detector/encoder/controller and a value MUX.
/// UnaryBatcher: N conventional input UNGs, N output counters and
/// cas_count(N) AND/OR blocks (N must be a power of two).
ResourceCount resources(Architecture arch, std::size_t n, unsigned width);

double gate_equiv(const ResourceCount& rc, const WeightSet& w = {});

/// Default reporting grid: N in {8,...,256}, M in {8,16,32}.
std::vector<std::size_t> table_grid_n();
std::vector<unsigned> table_grid_m();

struct CostRow {
  std::size_t n;
  unsigned width;
  double proposed_min;
  double prior_max;
  double unary_batcher;
  std::uint64_t cas_blocks;
  bool min_below_max;
  bool max_below_batcher;
};

std::vector<CostRow> cost_table(std::span<const std::size_t> ns, std::span<const unsigned> ms,
                                const WeightSet& w = {});

/// Header: N,M,proposed_min,prior_max,unary_batcher,cas_blocks,min_lt_max,max_lt_batcher
void write_cost_csv(std::ostream& os, std::span<const CostRow> rows);

}  // namespace unary
