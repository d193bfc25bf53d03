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

#include "unary/ung.hpp"

#include <vector>

#include "unary/error.hpp"

namespace unary {

CfungUnit CfungUnit::load(const BinaryValue& v) { return CfungUnit(v.value(), v.width()); }

std::uint8_t CfungUnit::step() {
  const std::uint8_t bit = out_or() ? 1 : 0;
  remainder_ -= bit;
  if (bit == 0) state_ = FsmState::Red;
  return bit;
}

UnaryStream cfung_generate(const BinaryValue& v) {
  if (v.width() > kMaxStreamWidth) {
    throw ValidationError("refusing to materialise a 2^" + std::to_string(v.width()) +
                          "-bit stream");
  }
  auto unit = CfungUnit::load(v);
  std::vector<std::uint8_t> bits(stream_length(v.width()));
  for (auto& b : bits) b = unit.step();
  return UnaryStream(std::move(bits));
}

ComparatorUngUnit::ComparatorUngUnit(const BinaryValue& threshold)
    : threshold_(threshold), counter_(max_value(threshold.width())) {}

std::uint8_t ComparatorUngUnit::step() {
  if (wrapped_) throw SimulationError("comparator UNG stepped past counter 0 without reload");
  const std::uint8_t bit = threshold_.value() > counter_ ? 1 : 0;
  if (counter_ == 0) {
    wrapped_ = true;
  } else {
    --counter_;
  }
  return bit;
}

UnaryStream comparator_ung_generate(const BinaryValue& v) {
  if (v.width() > kMaxStreamWidth) {
    throw ValidationError("refusing to materialise a 2^" + std::to_string(v.width()) +
                          "-bit stream");
  }
  ComparatorUngUnit unit(v);
  std::vector<std::uint8_t> bits(stream_length(v.width()));
  for (auto& b : bits) b = unit.step();
  return UnaryStream(std::move(bits));
}

namespace {
bool contiguous(const UnaryStream& s) { return is_right_aligned(s) || is_right_aligned(s.reversed()); }
}  // namespace

bool streams_equivalent(const UnaryStream& a, const UnaryStream& b) {
  if (a.empty() || b.empty()) throw ValidationError("cannot compare empty streams");
  if (a.size() != b.size()) {
    throw ValidationError("stream length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  if (!contiguous(a) || !contiguous(b)) return false;
  return decode(a) == decode(b);
}

}  // namespace unary
