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
#include <utility>
#include <vector>

namespace unary {

enum class CasDirection : std::uint8_t { Ascending, Descending };

/// Compare-and-swap between two lanes. Ascending puts the minimum on lane_a.
struct Cas {
  std::size_t lane_a;
  std::size_t lane_b;
  CasDirection direction;

  friend bool operator==(const Cas&, const Cas&) = default;
};

struct CasNetwork {
  std::size_t n_inputs = 0;
  std::vector<std::vector<Cas>> stages;

  std::size_t cas_blocks() const;
  /// Throws SimulationError if a lane appears twice in one stage or is out of range.
  void validate() const;
};

/// N * log2(N) * (log2(N) + 1) / 4. Throws ValidationError unless N is a power of two >= 2.
std::uint64_t cas_count(std::uint64_t n);

/// Standard bitonic sorter: log2(N)(log2(N)+1)/2 stages of N/2 CAS blocks.
CasNetwork build_bitonic_network(std::size_t n);

/// Unary CAS on one bit per lane: AND is the min lane, OR the max lane.
std::pair<std::uint8_t, std::uint8_t> cas_apply(std::uint8_t a, std::uint8_t b, CasDirection dir);

/// Text dump, one stage per line: "stage 0: (0,1,asc) (2,3,desc) ...".
void write_network(std::ostream& os, const CasNetwork& net);

/// Bit-serial unary evaluation: every value becomes a right-aligned stream,
/// the streams are clocked through the network one bit per cycle, and the
/// output lanes are decoded by popcount.
std::vector<std::uint32_t> batcher_sort(std::span<const std::uint32_t> values, unsigned width);

/// Whole-word evaluation of the same network using min/max on integers.
std::vector<std::uint32_t> batcher_sort_words(std::span<const std::uint32_t> values);

/// Applies the network to one 0/1 vector (zero-one principle checks).
std::vector<std::uint8_t> apply_network_bits(const CasNetwork& net,
                                             std::span<const std::uint8_t> bits);

}  // namespace unary
