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

#include "unary/batcher.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>
#include <tuple>

#include "unary/bitstream.hpp"
#include "unary/error.hpp"

namespace unary {

namespace {

void check_power_of_two(std::uint64_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw ValidationError("network size N=" + std::to_string(n) + " is not a power of two >= 2");
  }
}

}  // namespace

std::size_t CasNetwork::cas_blocks() const {
  std::size_t total = 0;
  for (const auto& s : stages) total += s.size();
  return total;
}

void CasNetwork::validate() const {
  for (std::size_t s = 0; s < stages.size(); ++s) {
    std::vector<std::uint8_t> used(n_inputs, 0);
    for (const auto& c : stages[s]) {
      if (c.lane_a >= n_inputs || c.lane_b >= n_inputs || c.lane_a == c.lane_b) {
        throw SimulationError("bad CAS lanes in stage " + std::to_string(s));
      }
      if (used[c.lane_a]++ || used[c.lane_b]++) {
        throw SimulationError("lane reused within stage " + std::to_string(s));
      }
    }
  }
}

std::uint64_t cas_count(std::uint64_t n) {
  check_power_of_two(n);
  const std::uint64_t lg = static_cast<std::uint64_t>(std::countr_zero(n));
  return n * lg * (lg + 1) / 4;
}

CasNetwork build_bitonic_network(std::size_t n) {
  check_power_of_two(n);
  CasNetwork net{.n_inputs = n, .stages = {}};
  for (std::size_t block = 2; block <= n; block <<= 1) {
    for (std::size_t dist = block >> 1; dist > 0; dist >>= 1) {
      std::vector<Cas> stage;
      stage.reserve(n / 2);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t partner = i ^ dist;
        if (partner <= i) continue;
        stage.push_back({i, partner,
                         (i & block) == 0 ? CasDirection::Ascending : CasDirection::Descending});
      }
      net.stages.push_back(std::move(stage));
    }
  }
  return net;
}

std::pair<std::uint8_t, std::uint8_t> cas_apply(std::uint8_t a, std::uint8_t b, CasDirection dir) {
  const std::uint8_t lo = a & b;
  const std::uint8_t hi = a | b;
  return dir == CasDirection::Ascending ? std::pair{lo, hi} : std::pair{hi, lo};
}

void write_network(std::ostream& os, const CasNetwork& net) {
  os << "# bitonic N=" << net.n_inputs << " stages=" << net.stages.size()
     << " cas=" << net.cas_blocks() << '\n';
  for (std::size_t s = 0; s < net.stages.size(); ++s) {
    os << "stage " << s << ':';
    for (const auto& c : net.stages[s]) {
      os << " (" << c.lane_a << ',' << c.lane_b << ','
         << (c.direction == CasDirection::Ascending ? "asc" : "desc") << ')';
    }
    os << '\n';
  }
}

std::vector<std::uint8_t> apply_network_bits(const CasNetwork& net,
                                             std::span<const std::uint8_t> bits) {
  if (bits.size() != net.n_inputs) throw ValidationError("lane count mismatch");
  std::vector<std::uint8_t> lanes(bits.begin(), bits.end());
  for (const auto& stage : net.stages) {
    for (const auto& c : stage) {
      std::tie(lanes[c.lane_a], lanes[c.lane_b]) =
          cas_apply(lanes[c.lane_a], lanes[c.lane_b], c.direction);
    }
  }
  return lanes;
}

std::vector<std::uint32_t> batcher_sort(std::span<const std::uint32_t> values, unsigned width) {
  const auto net = build_bitonic_network(values.size());
  std::vector<UnaryStream> inputs;
  inputs.reserve(values.size());
  for (auto v : values) inputs.push_back(encode_right_aligned(BinaryValue(v, width)));

  // Output counters: one per lane, incremented on every 1 leaving the network.
  std::vector<std::uint32_t> counters(values.size(), 0);
  std::vector<std::uint8_t> lanes(values.size());
  const std::uint64_t length = stream_length(width);
  for (std::uint64_t t = 0; t < length; ++t) {
    for (std::size_t i = 0; i < lanes.size(); ++i) lanes[i] = inputs[i][t];
    const auto out = apply_network_bits(net, lanes);
    for (std::size_t i = 0; i < out.size(); ++i) counters[i] += out[i];
  }
  return counters;
}

std::vector<std::uint32_t> batcher_sort_words(std::span<const std::uint32_t> values) {
  const auto net = build_bitonic_network(values.size());
  std::vector<std::uint32_t> lanes(values.begin(), values.end());
  for (const auto& stage : net.stages) {
    for (const auto& c : stage) {
      auto& a = lanes[c.lane_a];
      auto& b = lanes[c.lane_b];
      const bool swap = c.direction == CasDirection::Ascending ? a > b : a < b;
      if (swap) std::swap(a, b);
    }
  }
  return lanes;
}

}  // namespace unary
