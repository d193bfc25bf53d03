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

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "unary/error.hpp"
#include "unary/sorter_min.hpp"

using namespace unary;

namespace {

const std::vector<std::uint32_t> kExample{4, 6, 4};  // 0.5, 0.75, 0.5 at M=3

// Ticks the engine and checks the structural invariants after every clock.
SortRun run_checked(const std::vector<std::uint32_t>& values, unsigned m) {
  auto e = MinSortEngine::load(values, {values.size(), m});
  while (!e.done()) {
    const auto state_before = e.path().controller();
    const auto elapsed_before = e.elapsed_cycle();
    e.tick();
    if (state_before == ControllerState::PutResults) REQUIRE(e.elapsed_cycle() == elapsed_before);
    else REQUIRE(e.elapsed_cycle() == elapsed_before + 1);
    const auto& p = e.path();
    REQUIRE(p.out_ptr() <= values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (p.detect_ff()[i]) REQUIRE(e.units()[i].state() == FsmState::Red);
      if (p.output_mask()[i]) REQUIRE(p.detect_ff()[i]);
    }
  }
  return e.finish();
}

}  // namespace

TEST_CASE("engine_load") {
  const auto e = MinSortEngine::load(kExample, {3, 3});
  REQUIRE(e.units().size() == 3);
  CHECK(e.units()[0].remainder() == 4);
  CHECK(e.units()[1].remainder() == 6);
  CHECK(e.units()[2].remainder() == 4);
  CHECK(e.elapsed_cycle() == 0);
  CHECK(e.path().controller() == ControllerState::FindIndex);

  const std::vector<std::uint32_t> zeros{0, 0};
  const auto z = MinSortEngine::load(zeros, {2, 3});
  CHECK_FALSE(z.units()[0].out_or());
  CHECK_FALSE(z.units()[1].out_or());

  CHECK_THROWS_AS(MinSortEngine::load(std::vector<std::uint32_t>{}, {0, 3}), ValidationError);
  CHECK_THROWS_AS(MinSortEngine::load(kExample, {4, 3}), ValidationError);
  CHECK_THROWS_AS(MinSortEngine::load(std::vector<std::uint32_t>{4, 9}, {2, 3}), ValidationError);
  const std::vector<BinaryValue> mixed{BinaryValue(1, 3), BinaryValue(1, 4)};
  CHECK_THROWS_AS(MinSortEngine::load(mixed, {2, 3}), ValidationError);
}

TEST_CASE("engine_tick on the three-input example") {
  auto e = MinSortEngine::load(kExample, {3, 3});
  for (int i = 0; i < 4; ++i) {
    e.tick();
    CHECK(e.last_ds() == 0);
  }
  e.tick();
  CHECK(e.elapsed_cycle() == 5);
  CHECK(e.last_ds() == 2);
  CHECK(e.path().detect_ff() == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(e.path().controller() == ControllerState::PutResults);

  e.tick();
  e.tick();
  CHECK(e.elapsed_cycle() == 5);  // stalled while writing
  CHECK(e.path().outputs()[0] == 4);
  CHECK(e.path().outputs()[1] == 4);
  CHECK(e.path().controller() == ControllerState::FindIndex);

  const auto& ev = e.path().trace().events();
  REQUIRE(ev.size() == 7);
  CHECK(ev[4].detected == std::vector<std::size_t>{0, 2});
  CHECK(ev[5].write->source == 0);  // lowest index first
  CHECK(ev[6].write->source == 2);
}

TEST_CASE("engine_tick with a zero input") {
  const std::vector<std::uint32_t> v{0, 5};
  auto e = MinSortEngine::load(v, {2, 3});
  e.tick();
  CHECK(e.elapsed_cycle() == 1);
  CHECK(e.last_ds() >= 1);
  CHECK(e.path().detect_ff()[0] == 1);
  e.tick();
  CHECK(e.path().outputs()[0] == 0);
}

TEST_CASE("detection_signal and priority_encode") {
  const std::vector<std::uint8_t> b101{1, 0, 1};
  CHECK(detection_signal(b101) == 2);
  CHECK(detection_signal(std::vector<std::uint8_t>{0, 0, 0}) == 0);
  CHECK(detection_signal(std::vector<std::uint8_t>{1, 1, 1, 1}) == 4);
  CHECK(detection_signal(b101, std::vector<std::uint8_t>{1, 0, 0}) == 1);

  CHECK(priority_encode(b101) == 0);
  CHECK(priority_encode(std::vector<std::uint8_t>{0, 0, 1}) == 2);
  CHECK_THROWS_AS(priority_encode(std::vector<std::uint8_t>{0, 0, 0}), ValidationError);
}

TEST_CASE("retrieve_value") {
  CHECK(retrieve_value(5, 3) == 4);
  CHECK(retrieve_value(1, 3) == 0);
  CHECK(retrieve_value(8, 3) == 7);
  CHECK_THROWS_AS(retrieve_value(9, 3), SimulationError);
  CHECK_THROWS_AS(retrieve_value(0, 3), SimulationError);

  // v=7 run to detection: Elapsed_Cycle is 8 there.
  const auto run = engine_run(std::vector<std::uint32_t>{7, 7}, {2, 3});
  CHECK(run.detect_cycle[0] == 8);
  CHECK(run.sorted[0] == 7);
}

TEST_CASE("engine_run examples") {
  CHECK(engine_run(kExample, {3, 3}).sorted == std::vector<std::uint32_t>{4, 4, 6});
  const std::vector<std::uint32_t> asc{0, 1, 2, 3};
  CHECK(engine_run(asc, {4, 3}).sorted == asc);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto v = oracle::random_vector(rng, 8, 8);
    REQUIRE(engine_run(v, {8, 8}).sorted == oracle::sorted(v));
  }
}

TEST_CASE("total_cycles") {
  CHECK(total_cycles(engine_run(kExample, {3, 3}).trace) == 10);
  CHECK(total_cycles(engine_run(std::vector<std::uint32_t>(4, 0), {4, 3}).trace) == 5);
  for (unsigned m = 1; m <= 8; ++m) {
    const auto top = static_cast<std::uint32_t>(max_value(m));
    CHECK(total_cycles(engine_run(std::vector<std::uint32_t>(5, top), {5, m}).trace) ==
          stream_length(m) + 5);
  }

  auto e = MinSortEngine::load(kExample, {3, 3});
  e.tick();
  CHECK_THROWS_AS(total_cycles(e.path().trace()), ValidationError);
}

TEST_CASE("ticks after completion are idle") {
  auto e = MinSortEngine::load(kExample, {3, 3});
  while (!e.done()) e.tick();
  const auto before = e.path().outputs();
  e.tick();
  e.tick();
  CHECK(e.path().outputs() == before);
  const auto& ev = e.path().trace().events();
  CHECK(ev.back().idle);
  CHECK(total_cycles(e.path().trace()) == 10);
  for (std::size_t i = 1; i < ev.size(); ++i) CHECK(ev[i].cycle > ev[i - 1].cycle);
}

TEST_CASE("exhaustive N=4, M=3 against the reference sort and schedule") {
  std::vector<std::uint32_t> v(4);
  for (std::uint32_t code = 0; code < 4096; ++code) {
    for (int k = 0; k < 4; ++k) v[k] = (code >> (3 * k)) & 7;
    const auto run = run_checked(v, 3);
    REQUIRE(run.sorted == oracle::sorted(v));

    // Detection events: one per distinct value, at v + 1, ds = multiplicity.
    std::vector<oracle::Event> seen;
    for (const auto& ev : run.trace.events()) {
      if (ev.ds > 0) {
        REQUIRE(ev.ds == ev.detected.size());
        seen.push_back({ev.elapsed_cycle, ev.detected});
      }
    }
    const auto expect = oracle::min_schedule(v);
    REQUIRE(seen.size() == expect.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      REQUIRE(seen[i].elapsed == expect[i].elapsed);
      REQUIRE(seen[i].lanes == expect[i].lanes);
    }
  }
}

TEST_CASE("engine properties on random vectors") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const unsigned m = 1 + static_cast<unsigned>(rng() % 8);
    const std::size_t n = 2 + rng() % 15;
    const auto v = oracle::random_vector(rng, n, m);
    const auto run = run_checked(v, m);

    // Multiset preserved and detection-time law.
    REQUIRE(run.sorted == oracle::sorted(v));
    for (std::size_t k = 0; k < n; ++k) REQUIRE(run.detect_cycle[k] == v[k] + 1ull);

    // Closed-form cycle count.
    REQUIRE(total_cycles(run.trace) == (*std::max_element(v.begin(), v.end()) + 1ull) + n);

    // Retrieved values non-decreasing; a ds=k event is followed by k writes of one value.
    const auto& ev = run.trace.events();
    std::uint32_t last = 0;
    for (std::size_t t = 0; t < ev.size(); ++t) {
      if (ev[t].write) {
        REQUIRE(ev[t].write->value >= last);
        last = ev[t].write->value;
      }
      if (ev[t].ds > 0) {
        for (unsigned w = 1; w <= ev[t].ds; ++w) {
          REQUIRE(ev[t + w].write.has_value());
          REQUIRE(ev[t + w].write->value == ev[t + 1].write->value);
        }
        if (t + ev[t].ds + 1 < ev.size()) REQUIRE(!ev[t + ev[t].ds + 1].write.has_value());
      }
    }
  }
}

TEST_CASE("trace CSV export") {
  std::ostringstream os;
  engine_run(kExample, {3, 3}).trace.write_csv(os);
  const auto text = os.str();
  CHECK(text.rfind("arch,cycle,elapsed_cycle,state,ds,detected_indices,writes\n", 0) == 0);
  CHECK(text.find("proposed-min,5,5,FindIndex,2,0;2,\n") != std::string::npos);
  CHECK(text.find("proposed-min,6,5,PutResults,0,,0:4\n") != std::string::npos);
  CHECK(text.find("proposed-min,7,5,PutResults,0,,1:4\n") != std::string::npos);
  CHECK(text.find("proposed-min,10,7,PutResults,0,,2:6\n") != std::string::npos);
}

TEST_CASE("wide words run without materialising streams") {
  const std::vector<std::uint32_t> v{70000, 3, 65536, 3};
  const auto run = engine_run(v, {4, 32});
  CHECK(run.sorted == oracle::sorted(v));
  CHECK(total_cycles(run.trace) == 70001 + 4);
}
