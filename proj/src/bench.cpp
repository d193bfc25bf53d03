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

#include "unary/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include "json.hpp"

#include "unary/bitstream.hpp"
#include "unary/error.hpp"

namespace unary {

Distribution parse_distribution(std::string_view name) {
  if (name == "gaussian" || name == "normal") return Distribution::Gaussian;
  if (name == "uniform") return Distribution::Uniform;
  if (name == "file") return Distribution::File;
  throw ValidationError("unknown distribution '" + std::string(name) + "'");
}

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Uniform: return "uniform";
    case Distribution::File: return "file";
  }
  return "?";
}

void BenchConfig::validate() const {
  if (arch == Architecture::UnaryBatcher) {
    throw ValidationError("bench measures detection cycles; unary-batcher has none");
  }
  if (n < 2) throw ValidationError("bench needs N >= 2");
  check_width(width);
  if (trials < 1) throw ValidationError("bench needs at least one trial");
  if (distribution == Distribution::Gaussian) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma < 0.0) {
      throw ValidationError("gaussian needs finite mu and sigma >= 0");
    }
  }
  if (distribution == Distribution::File) {
    if (file_rows.empty()) throw ValidationError("file distribution without input rows");
    for (const auto& row : file_rows) {
      if (row.size() != n) {
        throw ValidationError("input row has " + std::to_string(row.size()) + " values, N=" +
                              std::to_string(n));
      }
      for (auto v : row) {
        if (v > max_value(width)) throw ValidationError("input value exceeds 2^M - 1");
      }
    }
  }
}

std::uint32_t quantize(double x, unsigned width) {
  const double hi = static_cast<double>(max_value(width));
  const double r = std::nearbyint(x);
  if (!(r > 0.0)) return 0;
  if (r >= hi) return static_cast<std::uint32_t>(max_value(width));
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> sample_inputs(const BenchConfig& cfg, std::size_t trial) {
  std::vector<std::uint32_t> out(cfg.n);
  std::mt19937_64 rng(cfg.seed + trial);
  switch (cfg.distribution) {
    case Distribution::Gaussian:
      if (cfg.sigma == 0.0) {
        std::fill(out.begin(), out.end(), quantize(cfg.mu, cfg.width));
      } else {
        std::normal_distribution<double> dist(cfg.mu, cfg.sigma);
        for (auto& v : out) v = quantize(dist(rng), cfg.width);
      }
      break;
    case Distribution::Uniform: {
      std::uniform_int_distribution<std::uint64_t> dist(0, max_value(cfg.width));
      for (auto& v : out) v = static_cast<std::uint32_t>(dist(rng));
      break;
    }
    case Distribution::File:
      out = cfg.file_rows[trial % cfg.file_rows.size()];
      break;
  }
  return out;
}

std::vector<RankStats> rank_stats(const DetectionMatrix& m) {
  std::vector<RankStats> stats;
  stats.reserve(m.ranks);
  for (std::size_t r = 0; r < m.ranks; ++r) {
    double sum = 0.0;
    for (std::size_t t = 0; t < m.trials; ++t) sum += static_cast<double>(m.at(t, r));
    const double mean = sum / static_cast<double>(m.trials);
    double sq = 0.0;
    for (std::size_t t = 0; t < m.trials; ++t) {
      const double d = static_cast<double>(m.at(t, r)) - mean;
      sq += d * d;
    }
    const double sd = m.trials > 1 ? std::sqrt(sq / static_cast<double>(m.trials - 1)) : 0.0;
    stats.push_back({r + 1, mean, sd});
  }
  return stats;
}

void write_bench_csv(std::ostream& os, std::span<const RankStats> stats) {
  os << "n,mean_cycles,std_cycles\n";
  for (const auto& s : stats) {
    os << fmt::format("{},{:.6f},{:.6f}\n", s.rank, s.mean_cycles, s.std_cycles);
  }
}

std::string bench_metadata_json(const BenchConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "unarysort";
  j["version"] = kVersion;
  j["command"] = "bench";
  j["arch"] = std::string(to_string(cfg.arch));
  j["n"] = cfg.n;
  j["m"] = cfg.width;
  j["distribution"] = std::string(to_string(cfg.distribution));
  if (cfg.distribution == Distribution::Gaussian) {
    j["mu"] = cfg.mu;
    j["sigma"] = cfg.sigma;
  }
  if (cfg.distribution == Distribution::File) j["file_rows"] = cfg.file_rows.size();
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["seed_scheme"] = "trial i seeds std::mt19937_64 with seed + i";
  j["quantization"] = "round to nearest, clamp to [0, 2^M - 1]";
  j["metric"] = "generation cycle at which the n-th extreme value is detected";
  return j.dump(2) + "\n";
}

}  // namespace unary
