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

#include "unary/bitstream.hpp"

namespace unary {

enum class FsmState : std::uint8_t { Blue, Red };

/// Comparison-free unary number generator: a remainder register, a
/// two-state FSM and the OR-reduction of the register (Out_OR).
///
/// Each clock emits b = Out_OR and updates remainder <- remainder - b, so a
/// loaded value v produces v ones then zeros. The FSM leaves Blue on the
/// first emitted 0 and never returns until the unit is reloaded.
class CfungUnit {
 public:
  /// Loads `v` into the remainder register (0 - v in the original
  /// two's-complement datapath has magnitude v).
  static CfungUnit load(const BinaryValue& v);

  /// One clock edge; returns the emitted bit.
  std::uint8_t step();

  std::uint32_t remainder() const { return remainder_; }
  FsmState state() const { return state_; }
  bool out_or() const { return remainder_ != 0; }
  unsigned width() const { return width_; }

  friend bool operator==(const CfungUnit&, const CfungUnit&) = default;

 private:
  CfungUnit(std::uint32_t remainder, unsigned width) : remainder_(remainder), width_(width) {}

  std::uint32_t remainder_;
  unsigned width_;
  FsmState state_ = FsmState::Blue;
};

/// Runs a CfungUnit for 2^M cycles.
UnaryStream cfung_generate(const BinaryValue& v);

/// Counter + comparator generator: a down counter 2^M-1 .. 0 and one
/// comparator per input emitting (v > counter). Ones appear last in counter
/// order, i.e. the stream reads right-aligned when written MSB-first.
class ComparatorUngUnit {
 public:
  explicit ComparatorUngUnit(const BinaryValue& threshold);

  std::uint8_t step();

  std::uint64_t counter() const { return counter_; }
  const BinaryValue& threshold() const { return threshold_; }

 private:
  BinaryValue threshold_;
  std::uint64_t counter_;
  bool wrapped_ = false;
};

UnaryStream comparator_ung_generate(const BinaryValue& v);

/// Both streams contiguous unary codes (in emission or written order) of the
/// same value. Throws ValidationError on empty streams or length mismatch.
bool streams_equivalent(const UnaryStream& a, const UnaryStream& b);

}  // namespace unary
