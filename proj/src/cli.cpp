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

#include "unary/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "unary/batcher.hpp"
#include "unary/bench.hpp"
#include "unary/bitstream.hpp"
#include "unary/cost.hpp"
#include "unary/csv.hpp"
#include "unary/error.hpp"
#include "unary/kernels.hpp"
#include "unary/sorter_max.hpp"
#include "unary/sorter_min.hpp"
#include "unary/ung.hpp"

namespace unary::cli {

namespace {

struct Options {
  std::string arch = "min";
  std::size_t n = 16;
  unsigned m = 8;
  std::uint64_t value = 0;
  double mu = 128.0;
  double sigma = 32.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 2025;
  std::string dist = "gaussian";
  std::string input;
  std::string output;
  std::string trace;
  bool check = false;
  bool serial = false;
  std::vector<std::size_t> grid_n;
  std::vector<unsigned> grid_m;
};

std::vector<std::vector<std::uint32_t>> read_rows(const std::string& path, unsigned width) {
  if (path.empty()) throw ValidationError("--input is required");
  if (path == "-") return parse_csv_rows(std::cin, width);
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open input '" + path + "'");
  return parse_csv_rows(is, width);
}

// Writes to `path`, or to `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ValidationError("cannot open output '" + path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

int cmd_generate(const Options& o, std::ostream& out) {
  const BinaryValue v(o.value, o.m);
  const auto cf = cfung_generate(v);
  const auto cmp = comparator_ung_generate(v);
  out << "value=" << v.value() << " M=" << v.width() << " fraction=" << v.fraction() << '\n';
  out << "cfung      emission=" << to_emission_string(cf) << " written=" << to_written_notation(cf)
      << '\n';
  out << "comparator emission=" << to_emission_string(cmp) << " written=" << to_written_notation(cmp)
      << '\n';
  return kExitOk;
}

int cmd_sort(const Options& o, std::ostream& out, std::ostream& err) {
  const auto arch = parse_architecture(o.arch);
  check_width(o.m);
  const auto rows = read_rows(o.input, o.m);

  std::ostringstream sorted_csv;
  std::ostringstream trace_csv;
  bool mismatch = false;
  bool header = true;
  for (const auto& row : rows) {
    const SorterConfig sc{row.size(), o.m};
    std::vector<std::uint32_t> sorted;
    std::vector<std::uint32_t> oracle(row);
    std::sort(oracle.begin(), oracle.end());
    switch (arch) {
      case Architecture::ProposedMin: {
        auto run = engine_run(row, sc);
        run.trace.write_csv(trace_csv, header);
        sorted = std::move(run.sorted);
        break;
      }
      case Architecture::PriorMax: {
        auto run = max_engine_run(row, sc);
        run.trace.write_csv(trace_csv, header);
        sorted = std::move(run.sorted);
        std::reverse(oracle.begin(), oracle.end());
        break;
      }
      case Architecture::UnaryBatcher:
        sc.validate();
        sorted = batcher_sort(row, o.m);
        break;
    }
    header = false;
    write_csv_row(sorted_csv, sorted);
    mismatch = mismatch || sorted != oracle;
  }

  {
    Sink sink(o.output, out);
    sink.stream() << sorted_csv.str();
  }
  if (arch != Architecture::UnaryBatcher) {
    std::string trace_path = o.trace;
    if (trace_path.empty() && !o.output.empty()) trace_path = o.output + ".trace.csv";
    if (trace_path.empty()) out << "# trace\n";
    Sink sink(trace_path, out);
    sink.stream() << trace_csv.str();
  }
  if (o.check && mismatch) {
    err << "oracle mismatch: simulated order differs from reference sort\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.arch = parse_architecture(o.arch);
  cfg.n = o.n;
  cfg.width = o.m;
  cfg.distribution = parse_distribution(o.dist);
  cfg.mu = o.mu;
  cfg.sigma = o.sigma;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  if (cfg.distribution == Distribution::File) {
    check_width(o.m);
    cfg.file_rows = read_rows(o.input, o.m);
    if (!cfg.file_rows.empty()) cfg.n = cfg.file_rows.front().size();
  }
  cfg.validate();

  const auto matrix =
      o.serial ? kernels::detection_cycles_serial(cfg) : kernels::detection_cycles_omp(cfg);

  if (o.check) {
    // Detection-time law against an independent sort of each sample.
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      auto sample = sample_inputs(cfg, t);
      std::sort(sample.begin(), sample.end());
      if (cfg.arch == Architecture::PriorMax) std::reverse(sample.begin(), sample.end());
      for (std::size_t r = 0; r < cfg.n; ++r) {
        const std::uint64_t expect = cfg.arch == Architecture::PriorMax
                                         ? stream_length(cfg.width) - sample[r]
                                         : std::uint64_t{sample[r]} + 1;
        if (matrix.at(t, r) != expect) {
          err << "oracle mismatch in trial " << t << " rank " << r + 1 << '\n';
          return kExitMismatch;
        }
      }
    }
  }

  const auto stats = rank_stats(matrix);
  Sink sink(o.output, out);
  write_bench_csv(sink.stream(), stats);
  if (!o.output.empty()) {
    std::ofstream meta(o.output + ".json", std::ios::binary);
    if (!meta) throw ValidationError("cannot write metadata sidecar");
    meta << bench_metadata_json(cfg);
  }
  return kExitOk;
}

int cmd_cost(const Options& o, std::ostream& out) {
  const auto ns = o.grid_n.empty() ? table_grid_n() : o.grid_n;
  const auto ms = o.grid_m.empty() ? table_grid_m() : o.grid_m;
  const auto rows = cost_table(ns, ms);
  Sink sink(o.output, out);
  write_cost_csv(sink.stream(), rows);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  check_width(o.m);
  std::vector<std::vector<std::uint32_t>> vectors;
  if (!o.input.empty()) {
    vectors = read_rows(o.input, o.m);
  } else {
    BenchConfig cfg;
    cfg.arch = Architecture::ProposedMin;
    cfg.n = o.n;
    cfg.width = o.m;
    cfg.distribution = Distribution::Uniform;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.validate();
    for (std::size_t t = 0; t < cfg.trials; ++t) vectors.push_back(sample_inputs(cfg, t));
  }
  for (const auto& v : vectors) SorterConfig{v.size(), o.m}.validate();

  const auto s = o.serial ? kernels::compare_serial(vectors, o.m) : kernels::compare_omp(vectors, o.m);
  Sink sink(o.output, out);
  sink.stream() << "vectors,min_vs_oracle,max_vs_min,batcher_vs_min,cycle_law_failures\n"
                << s.vectors << ',' << s.min_vs_oracle << ',' << s.max_vs_min << ','
                << s.batcher_vs_min << ',' << s.cycle_law_failures << '\n';
  if (o.check && s.mismatches() != 0) {
    err << "oracle mismatch: " << s.mismatches() << " disagreement(s)\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-accurate simulator for comparison-free unary sorters", "unarysort"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto* gen = app.add_subcommand("generate", "Print CFUNG and comparator-UNG streams for a value");
  gen->add_option("--value", o.value, "Binary value to convert")->required();
  gen->add_option("--m", o.m, "Bit width M")->required();

  auto* sort = app.add_subcommand("sort", "Sort CSV input vectors (one vector per row)");
  sort->add_option("--input", o.input, "CSV file, or - for stdin")->required();
  sort->add_option("--arch", o.arch, "min | max | batcher")->capture_default_str();
  sort->add_option("--m", o.m, "Bit width M")->required();
  sort->add_option("--output", o.output, "Sorted CSV path (default stdout)");
  sort->add_option("--trace", o.trace, "Trace CSV path (default <output>.trace.csv)");
  sort->add_flag("--check", o.check, "Exit 2 if the result disagrees with a reference sort");

  auto* bench = app.add_subcommand("bench", "Detection-cycle benchmark of the n-th extreme value");
  bench->add_option("--arch", o.arch, "min | max")->capture_default_str();
  bench->add_option("--n", o.n, "Inputs per trial")->capture_default_str();
  bench->add_option("--m", o.m, "Bit width M")->capture_default_str();
  bench->add_option("--dist", o.dist, "gaussian | uniform | file")->capture_default_str();
  bench->add_option("--mu", o.mu, "Gaussian mean")->capture_default_str();
  bench->add_option("--sigma", o.sigma, "Gaussian standard deviation")->capture_default_str();
  bench->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  bench->add_option("--seed", o.seed, "Base seed; trial i uses seed + i")->capture_default_str();
  bench->add_option("--input", o.input, "CSV rows for --dist file");
  bench->add_option("--output", o.output, "CSV path; metadata goes to <output>.json");
  bench->add_flag("--check", o.check, "Verify every detection cycle against a sorted-sample oracle");
  bench->add_flag("--serial", o.serial, "Use the serial reference kernel");

  auto* cost = app.add_subcommand("cost", "Structural cost table over an (N, M) grid");
  cost->add_option("--n", o.grid_n, "N values (default 8..256)")->delimiter(',');
  cost->add_option("--m", o.grid_m, "M values (default 8,16,32)")->delimiter(',');
  cost->add_option("--output", o.output, "CSV path (default stdout)");

  auto* compare = app.add_subcommand("compare", "Cross-check all three architectures");
  compare->add_option("--n", o.n, "Inputs per vector (power of two)")->capture_default_str();
  compare->add_option("--m", o.m, "Bit width M")->capture_default_str();
  compare->add_option("--trials", o.trials, "Random vectors")->capture_default_str();
  compare->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  compare->add_option("--input", o.input, "CSV rows instead of random vectors");
  compare->add_option("--output", o.output, "Summary CSV path (default stdout)");
  compare->add_flag("--check", o.check, "Exit 2 on any disagreement");
  compare->add_flag("--serial", o.serial, "Use the serial reference kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*gen) return cmd_generate(o, out);
    if (*sort) return cmd_sort(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
    if (*cost) return cmd_cost(o, out);
    if (*compare) return cmd_compare(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace unary::cli
