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

// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "unary/bench.hpp"
#include "unary/kernels.hpp"

namespace {

unary::BenchConfig gaussian_config(unsigned width, std::size_t trials) {
  unary::BenchConfig cfg;
  cfg.n = 16;
  cfg.width = width;
  cfg.mu = static_cast<double>(1u << width) / 2.0;
  cfg.sigma = static_cast<double>(1u << width) / 8.0;
  cfg.trials = trials;
  return cfg;
}

std::vector<std::vector<std::uint32_t>> uniform_vectors(std::size_t count) {
  unary::BenchConfig cfg;
  cfg.n = 8;
  cfg.width = 8;
  cfg.distribution = unary::Distribution::Uniform;
  cfg.trials = count;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(unary::sample_inputs(cfg, t));
  return out;
}

void BM_DetectionSerial(benchmark::State& state) {
  const auto cfg = gaussian_config(static_cast<unsigned>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(unary::kernels::detection_cycles_serial(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

void BM_DetectionOmp(benchmark::State& state) {
  const auto cfg = gaussian_config(static_cast<unsigned>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(unary::kernels::detection_cycles_omp(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
  state.counters["threads"] = unary::kernels::max_threads();
}

void BM_CompareSerial(benchmark::State& state) {
  const auto vectors = uniform_vectors(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unary::kernels::compare_serial(vectors, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CompareOmp(benchmark::State& state) {
  const auto vectors = uniform_vectors(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unary::kernels::compare_omp(vectors, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = unary::kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_DetectionSerial)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetectionOmp)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareOmp)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
