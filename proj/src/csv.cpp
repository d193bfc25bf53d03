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

#include "unary/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "unary/bitstream.hpp"
#include "unary/error.hpp"

namespace unary {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> parse_csv_rows(std::istream& is, unsigned width) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::uint32_t> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const auto field = trim(rest.substr(0, comma));
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ValidationError("line " + std::to_string(lineno) + ": bad field '" +
                              std::string(field) + "'");
      }
      const std::uint64_t limit = width ? max_value(width) : 0xFFFFFFFFull;
      if (v > limit) {
        throw ValidationError("line " + std::to_string(lineno) + ": value " + std::to_string(v) +
                              " out of range for M=" + std::to_string(width));
      }
      row.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("input contains no values");
  return rows;
}

std::vector<std::vector<std::uint32_t>> parse_csv_rows(std::string_view text, unsigned width) {
  std::istringstream is{std::string(text)};
  return parse_csv_rows(is, width);
}

void write_csv_row(std::ostream& os, std::span<const std::uint32_t> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << row[i];
  }
  os << '\n';
}

}  // namespace unary
