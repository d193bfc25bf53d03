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

#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "unary/batcher.hpp"
#include "unary/bitstream.hpp"
#include "unary/error.hpp"
#include "unary/sorter_min.hpp"

using namespace unary;

#ifndef UNARYSORT_GOLDEN_DIR
#error "UNARYSORT_GOLDEN_DIR must point at tests/golden"
#endif

TEST_CASE("cas_count") {
  CHECK(cas_count(8) == 24);
  CHECK(cas_count(16) == 80);
  CHECK(cas_count(32) == 240);
  CHECK(cas_count(256) == 4608);
  CHECK(cas_count(2) == 1);
  CHECK_THROWS_AS(cas_count(6), ValidationError);
  CHECK_THROWS_AS(cas_count(1), ValidationError);
}

TEST_CASE("build_bitonic_network structure") {
  const auto net8 = build_bitonic_network(8);
  CHECK(net8.cas_blocks() == 24);
  CHECK(net8.stages.size() == 6);
  CHECK(build_bitonic_network(2).cas_blocks() == 1);
  CHECK_THROWS_AS(build_bitonic_network(6), ValidationError);

  for (std::size_t n = 2; n <= 1024; n <<= 1) {
    const auto net = build_bitonic_network(n);
    CHECK_NOTHROW(net.validate());
    CHECK(net.cas_blocks() == cas_count(n));
  }
}

TEST_CASE("network validation rejects lane reuse") {
  CasNetwork bad{.n_inputs = 4, .stages = {{{0, 1, CasDirection::Ascending},
                                           {1, 2, CasDirection::Ascending}}}};
  CHECK_THROWS_AS(bad.validate(), SimulationError);
}

TEST_CASE("N=8 dump matches the golden topology") {
  std::ifstream golden(std::string(UNARYSORT_GOLDEN_DIR) + "/bitonic_8.txt");
  REQUIRE(golden);
  std::stringstream expect;
  expect << golden.rdbuf();
  std::ostringstream got;
  write_network(got, build_bitonic_network(8));
  CHECK(got.str() == expect.str());
}

TEST_CASE("cas_apply truth table") {
  using P = std::pair<std::uint8_t, std::uint8_t>;
  CHECK(cas_apply(1, 0, CasDirection::Ascending) == P{0, 1});
  CHECK(cas_apply(1, 1, CasDirection::Ascending) == P{1, 1});
  CHECK(cas_apply(0, 0, CasDirection::Ascending) == P{0, 0});
  CHECK(cas_apply(0, 1, CasDirection::Descending) == P{1, 0});
}

TEST_CASE("AND/OR of right-aligned streams gives min and max streams (M <= 6)") {
  for (unsigned m = 1; m <= 6; ++m) {
    for (std::uint32_t a = 0; a <= max_value(m); ++a) {
      for (std::uint32_t b = 0; b <= max_value(m); ++b) {
        const auto sa = oracle::unary_bits(a, m);
        const auto sb = oracle::unary_bits(b, m);
        std::vector<std::uint8_t> lo(sa.size()), hi(sa.size());
        for (std::size_t t = 0; t < sa.size(); ++t) {
          std::tie(lo[t], hi[t]) = cas_apply(sa[t], sb[t], CasDirection::Ascending);
        }
        const UnaryStream slo(lo), shi(hi);
        REQUIRE(is_right_aligned(slo));
        REQUIRE(is_right_aligned(shi));
        REQUIRE(decode(slo).value() == std::min(a, b));
        REQUIRE(decode(shi).value() == std::max(a, b));
      }
    }
  }
}

TEST_CASE("batcher_sort") {
  const std::vector<std::uint32_t> v{4, 6, 4, 0, 7, 1, 2, 2};
  CHECK(batcher_sort(v, 3) == std::vector<std::uint32_t>{0, 1, 2, 2, 4, 4, 6, 7});
  CHECK(batcher_sort_words(v) == std::vector<std::uint32_t>{0, 1, 2, 2, 4, 4, 6, 7});

  const std::vector<std::uint32_t> same(8, 5);
  CHECK(batcher_sort(same, 3) == same);
  CHECK_THROWS_AS(batcher_sort(std::vector<std::uint32_t>{1, 2, 3}, 3), ValidationError);
}

TEST_CASE("zero-one principle, N in {4, 8}") {
  for (std::size_t n : {4u, 8u}) {
    const auto net = build_bitonic_network(n);
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      std::vector<std::uint8_t> bits(n);
      for (std::size_t i = 0; i < n; ++i) bits[i] = (code >> i) & 1;
      const auto out = apply_network_bits(net, bits);
      REQUIRE(std::is_sorted(out.begin(), out.end()));
    }
  }
  // Independent check on arbitrary values.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto v = oracle::random_vector(rng, 8, 10);
    REQUIRE(batcher_sort_words(v) == oracle::sorted(v));
  }
}

TEST_CASE("streaming Batcher agrees with the min-finding engine") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const unsigned m = 1 + static_cast<unsigned>(rng() % 6);
    const auto v = oracle::random_vector(rng, 4 << (rng() % 2), m);
    REQUIRE(batcher_sort(v, m) == engine_run(v, {v.size(), m}).sorted);
  }
}
