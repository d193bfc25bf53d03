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

#include "unary/cost.hpp"

#include <bit>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "unary/batcher.hpp"
#include "unary/bitstream.hpp"
#include "unary/error.hpp"

namespace unary {

namespace {

std::uint64_t ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n - 1));
}

// Detection flip-flops, output mask, controller state bit, output address
// pointer (counts to N) with its incrementer, ds adder, priority encoder.
ResourceCount detection_path(std::uint64_t n) {
  const std::uint64_t ptr_bits = ceil_log2(n) + 1;
  ResourceCount rc;
  rc.registers_bits = 2 * n + 1 + ptr_bits;
  rc.adder_bits = n + ptr_bits;
  rc.encoder_inputs = n;
  return rc;
}

// Conventional unary generator: M-bit up/down counter (register, incrementer,
// 2:1 direction mux per bit) and an M-bit comparator against the input word.
void add_conventional_ung(ResourceCount& rc, std::uint64_t m) {
  rc.registers_bits += m;
  rc.adder_bits += m;
  rc.mux_inputs += 2 * m;
  rc.comparator_bits += m;
}

}  // namespace

void WeightSet::validate() const {
  for (double w : {register_bit, adder_bit, comparator_bit, or_input, encoder_input, mux_input,
                   cas_block}) {
    if (!(w > 0.0)) throw ValidationError("cost weights must be positive");
  }
}

WeightSet WeightSet::scaled(double k) const {
  return {register_bit * k, adder_bit * k, comparator_bit * k, or_input * k,
          encoder_input * k, mux_input * k, cas_block * k};
}

ResourceCount resources(Architecture arch, std::size_t n, unsigned width) {
  if (n < 2) throw ValidationError("cost model needs N >= 2, got " + std::to_string(n));
  check_width(width);
  const std::uint64_t N = n;
  const std::uint64_t M = width;

  switch (arch) {
    case Architecture::ProposedMin: {
      auto rc = detection_path(N);
      rc.registers_bits += N * M;  // remainder register doubles as input register
      rc.adder_bits += N * M;      // R - Out_OR
      rc.or_inputs += N * M;
      rc.registers_bits += M + 1;  // Elapsed_Cycle reaches 2^M
      rc.adder_bits += M + 1;
      rc.adder_bits += M;      // remainder + Elapsed_Cycle - 1
      rc.mux_inputs += N * M;  // detected lane's remainder into the adder
      return rc;
    }
    case Architecture::PriorMax: {
      auto rc = detection_path(N);
      rc.registers_bits += N * M;  // input registers, read back through the MUX
      for (std::uint64_t i = 0; i < N; ++i) add_conventional_ung(rc, M);
      rc.mux_inputs += N * M;
      return rc;
    }
    case Architecture::UnaryBatcher: {
      ResourceCount rc;
      rc.cas_blocks = cas_count(N);
      rc.registers_bits += N * M;  // input registers
      for (std::uint64_t i = 0; i < N; ++i) add_conventional_ung(rc, M);
      rc.registers_bits += N * (M + 1);  // output counters reach 2^M - 1 ones
      rc.adder_bits += N * (M + 1);
      return rc;
    }
  }
  throw ValidationError("unknown architecture");
}

double gate_equiv(const ResourceCount& rc, const WeightSet& w) {
  w.validate();
  return w.register_bit * static_cast<double>(rc.registers_bits) +
         w.adder_bit * static_cast<double>(rc.adder_bits) +
         w.comparator_bit * static_cast<double>(rc.comparator_bits) +
         w.or_input * static_cast<double>(rc.or_inputs) +
         w.encoder_input * static_cast<double>(rc.encoder_inputs) +
         w.mux_input * static_cast<double>(rc.mux_inputs) +
         w.cas_block * static_cast<double>(rc.cas_blocks);
}

std::vector<std::size_t> table_grid_n() { return {8, 16, 32, 64, 128, 256}; }
std::vector<unsigned> table_grid_m() { return {8, 16, 32}; }

std::vector<CostRow> cost_table(std::span<const std::size_t> ns, std::span<const unsigned> ms,
                                const WeightSet& w) {
  std::vector<CostRow> rows;
  for (auto n : ns) {
    for (auto m : ms) {
      CostRow r{};
      r.n = n;
      r.width = m;
      r.proposed_min = gate_equiv(resources(Architecture::ProposedMin, n, m), w);
      r.prior_max = gate_equiv(resources(Architecture::PriorMax, n, m), w);
      r.unary_batcher = gate_equiv(resources(Architecture::UnaryBatcher, n, m), w);
      r.cas_blocks = cas_count(n);
      r.min_below_max = r.proposed_min < r.prior_max;
      r.max_below_batcher = r.prior_max < r.unary_batcher;
      rows.push_back(r);
    }
  }
  return rows;
}

void write_cost_csv(std::ostream& os, std::span<const CostRow> rows) {
  os << "N,M,proposed_min,prior_max,unary_batcher,cas_blocks,min_lt_max,max_lt_batcher\n";
  for (const auto& r : rows) {
    os << fmt::format("{},{},{:.1f},{:.1f},{:.1f},{},{},{}\n", r.n, r.width, r.proposed_min,
                      r.prior_max, r.unary_batcher, r.cas_blocks, r.min_below_max ? 1 : 0,
                      r.max_below_batcher ? 1 : 0);
  }
}

}  // namespace unary
