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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace unary {

/// Rows of comma-separated unsigned integers. Blank lines are skipped.
/// Throws ValidationError on malformed fields, values above 2^M - 1
/// (when `width` is non-zero), or when no row is present.
std::vector<std::vector<std::uint32_t>> parse_csv_rows(std::istream& is, unsigned width = 0);
std::vector<std::vector<std::uint32_t>> parse_csv_rows(std::string_view text, unsigned width = 0);

void write_csv_row(std::ostream& os, std::span<const std::uint32_t> row);

}  // namespace unary
