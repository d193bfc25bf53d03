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

#include "unary/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "unary/error.hpp"

namespace unary {

void check_width(unsigned width) {
  if (width < kMinWidth || width > kMaxWidth) {
    throw ValidationError("bit width M=" + std::to_string(width) + " outside [1, 32]");
  }
}

BinaryValue::BinaryValue(std::uint64_t value, unsigned width) : width_(width) {
  check_width(width);
  if (value > max_value(width)) {
    throw ValidationError("value " + std::to_string(value) + " not representable in M=" +
                          std::to_string(width));
  }
  value_ = static_cast<std::uint32_t>(value);
}

double BinaryValue::fraction() const {
  return static_cast<double>(value_) / static_cast<double>(stream_length(width_));
}

UnaryStream::UnaryStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t UnaryStream::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

UnaryStream UnaryStream::reversed() const {
  return UnaryStream(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

UnaryStream encode_right_aligned(const BinaryValue& v) {
  if (v.width() > kMaxStreamWidth) {
    throw ValidationError("refusing to materialise a 2^" + std::to_string(v.width()) +
                          "-bit stream");
  }
  std::vector<std::uint8_t> bits(stream_length(v.width()), 0);
  std::fill_n(bits.begin(), v.value(), std::uint8_t{1});
  return UnaryStream(std::move(bits));
}

BinaryValue decode(const UnaryStream& s) {
  const std::uint64_t len = s.size();
  if (len == 0) throw ValidationError("cannot decode a zero-length stream");
  if (!std::has_single_bit(len) || len < 2) {
    throw ValidationError("stream length " + std::to_string(len) + " is not 2^M with M >= 1");
  }
  const auto width = static_cast<unsigned>(std::countr_zero(len));
  return BinaryValue(s.popcount(), width);
}

bool is_right_aligned(const UnaryStream& s) {
  const auto& b = s.bits();
  return std::is_sorted(b.begin(), b.end(), std::greater<>{});
}

std::string to_emission_string(const UnaryStream& s) {
  std::string out;
  out.reserve(s.size());
  for (auto b : s.bits()) out.push_back(b ? '1' : '0');
  return out;
}

std::string to_written_notation(const UnaryStream& s) {
  auto out = to_emission_string(s);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace unary
