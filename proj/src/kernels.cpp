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

#include "unary/kernels.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unary/batcher.hpp"
#include "unary/sorter_max.hpp"
#include "unary/sorter_min.hpp"

namespace unary::kernels {

namespace {

SortRun run_arch(Architecture arch, std::span<const std::uint32_t> values, unsigned width) {
  const SorterConfig sc{values.size(), width};
  return arch == Architecture::PriorMax ? max_engine_run(values, sc) : engine_run(values, sc);
}

void fill_trial(const BenchConfig& cfg, std::size_t trial, DetectionMatrix& m) {
  const auto values = sample_inputs(cfg, trial);
  const auto run = run_arch(cfg.arch, values, cfg.width);
  std::copy(run.rank_cycle.begin(), run.rank_cycle.end(),
            m.cycles.begin() + static_cast<std::ptrdiff_t>(trial * m.ranks));
}

DetectionMatrix empty_matrix(const BenchConfig& cfg) {
  return DetectionMatrix{cfg.trials, cfg.n, std::vector<std::uint64_t>(cfg.trials * cfg.n, 0)};
}

CompareSummary compare_one(std::span<const std::uint32_t> values, unsigned width) {
  CompareSummary s;
  s.vectors = 1;
  const SorterConfig sc{values.size(), width};

  std::vector<std::uint32_t> oracle(values.begin(), values.end());
  std::sort(oracle.begin(), oracle.end());

  auto min_run = engine_run(values, sc);
  auto max_sorted = max_engine_run(values, sc).sorted;
  std::reverse(max_sorted.begin(), max_sorted.end());
  const auto batcher = batcher_sort(values, width);

  s.min_vs_oracle = min_run.sorted != oracle;
  s.max_vs_min = max_sorted != min_run.sorted;
  s.batcher_vs_min = batcher != min_run.sorted;
  s.cycle_law_failures = total_cycles(min_run.trace) != (oracle.back() + 1ull) + values.size();
  return s;
}

void accumulate(CompareSummary& into, const CompareSummary& one) {
  into.vectors += one.vectors;
  into.min_vs_oracle += one.min_vs_oracle;
  into.max_vs_min += one.max_vs_min;
  into.batcher_vs_min += one.batcher_vs_min;
  into.cycle_law_failures += one.cycle_law_failures;
}

}  // namespace

DetectionMatrix detection_cycles_serial(const BenchConfig& cfg) {
  cfg.validate();
  auto m = empty_matrix(cfg);
  for (std::size_t t = 0; t < cfg.trials; ++t) fill_trial(cfg, t, m);
  return m;
}

DetectionMatrix detection_cycles_omp(const BenchConfig& cfg) {
  cfg.validate();
  auto m = empty_matrix(cfg);
  const auto trials = static_cast<std::ptrdiff_t>(cfg.trials);
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t t = 0; t < trials; ++t) {
    try {
      fill_trial(cfg, static_cast<std::size_t>(t), m);
    } catch (...) {
#pragma omp critical(unary_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return m;
}

CompareSummary compare_serial(std::span<const std::vector<std::uint32_t>> vectors, unsigned width) {
  CompareSummary total;
  for (const auto& v : vectors) accumulate(total, compare_one(v, width));
  return total;
}

CompareSummary compare_omp(std::span<const std::vector<std::uint32_t>> vectors, unsigned width) {
  std::vector<CompareSummary> per(vectors.size());
  const auto count = static_cast<std::ptrdiff_t>(vectors.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      per[static_cast<std::size_t>(i)] = compare_one(vectors[static_cast<std::size_t>(i)], width);
    } catch (...) {
#pragma omp critical(unary_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  CompareSummary total;
  for (const auto& s : per) accumulate(total, s);
  return total;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace unary::kernels
