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
#include <string>
#include <vector>

namespace unary {

inline constexpr unsigned kMinWidth = 1;
inline constexpr unsigned kMaxWidth = 32;
/// Widest M for which a full 2^M-bit stream is materialised in memory.
inline constexpr unsigned kMaxStreamWidth = 24;

/// Largest value representable in `width` bits: 2^M - 1.
constexpr std::uint64_t max_value(unsigned width) { return (std::uint64_t{1} << width) - 1; }

/// Stream length for precision `width`: 2^M.
constexpr std::uint64_t stream_length(unsigned width) { return std::uint64_t{1} << width; }

/// Throws ValidationError unless kMinWidth <= width <= kMaxWidth.
void check_width(unsigned width);

/// An M-bit unsigned data word.
class BinaryValue {
 public:
  /// Validating constructor; throws ValidationError on width or range violations.
  BinaryValue(std::uint64_t value, unsigned width);

  std::uint32_t value() const { return value_; }
  unsigned width() const { return width_; }

  /// Fractional reading value / 2^M, e.g. 4 at M=3 is 0.5.
  double fraction() const;

  friend bool operator==(const BinaryValue&, const BinaryValue&) = default;

 private:
  std::uint32_t value_;
  unsigned width_;
};

enum class StreamAlignment { RightAligned, LeftAligned };

/// Bits in emission order: index 0 is the bit produced in cycle 1.
class UnaryStream {
 public:
  UnaryStream() = default;
  explicit UnaryStream(std::vector<std::uint8_t> bits);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::size_t popcount() const;

  /// Reversed copy, i.e. the order used when writing streams MSB-first.
  UnaryStream reversed() const;

  friend bool operator==(const UnaryStream&, const UnaryStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Reference encoder: v ones followed by 2^M - v zeros in emission order.
UnaryStream encode_right_aligned(const BinaryValue& v);

/// popcount of the stream with M = log2(length). Rejects empty streams,
/// non-power-of-two lengths, and popcounts above 2^M - 1.
BinaryValue decode(const UnaryStream& s);

/// True iff no 1 follows a 0 in emission order.
bool is_right_aligned(const UnaryStream& s);

/// "11110000" for emission order.
std::string to_emission_string(const UnaryStream& s);
/// "00001111": emission order reversed, as streams are conventionally written.
std::string to_written_notation(const UnaryStream& s);

}  // namespace unary
