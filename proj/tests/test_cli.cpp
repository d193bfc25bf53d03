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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "unary/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"unarysort"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = unary::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("unarysort_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("generate") {
  auto r = run({"generate", "--value", "4", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cfung      emission=11110000 written=00001111") != std::string::npos);

  r = run({"generate", "--value", "0", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("emission=00000000") != std::string::npos);

  r = run({"generate", "--value", "9", "--m", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not representable") != std::string::npos);

  CHECK(run({"generate", "--value", "x", "--m", "3"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("sort") {
  TempDir dir;
  const auto in = dir.write("in.csv", "4,6,4\n");
  const auto out = dir.path / "sorted.csv";

  auto r = run({"sort", "--input", in.string(), "--arch", "min", "--m", "3", "--output",
                out.string(), "--check"});
  CHECK(r.code == 0);
  CHECK(slurp(out) == "4,4,6\n");
  const auto trace = slurp(out.string() + ".trace.csv");
  CHECK(trace.find("proposed-min,5,5,FindIndex,2,0;2,") != std::string::npos);

  r = run({"sort", "--input", in.string(), "--arch", "max", "--m", "3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("6,4,4\n# trace\narch,cycle", 0) == 0);

  const auto in8 = dir.write("in8.csv", "4,6,4,0,7,1,2,2\n3,3,3,3,3,3,3,3\n");
  r = run({"sort", "--input", in8.string(), "--arch", "batcher", "--m", "3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,2,2,4,4,6,7\n3,3,3,3,3,3,3,3\n");

  CHECK(run({"sort", "--input", dir.write("empty.csv", "").string(), "--m", "3"}).code == 1);
  CHECK(run({"sort", "--input", dir.write("bad.csv", "4,x\n").string(), "--m", "3"}).code == 1);
  CHECK(run({"sort", "--input", dir.write("big.csv", "4,9\n").string(), "--m", "3"}).code == 1);
  CHECK(run({"sort", "--input", (dir.path / "missing.csv").string(), "--m", "3"}).code == 1);
}

TEST_CASE("bench is deterministic and writes a metadata sidecar") {
  TempDir dir;
  const auto a = dir.path / "a.csv";
  const auto b = dir.path / "b.csv";
  for (const auto& p : {a, b}) {
    const auto r = run({"bench", "--arch", "min", "--n", "8", "--m", "5", "--mu", "16",
                        "--sigma", "4", "--trials", "300", "--seed", "7", "--output", p.string(),
                        "--check"});
    REQUIRE(r.code == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("n,mean_cycles,std_cycles\n", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(a.string() + ".json"));
  CHECK(meta["seed"] == 7);
  CHECK(meta["trials"] == 300);

  const auto serial = run({"bench", "--n", "8", "--m", "5", "--mu", "16", "--sigma", "4",
                           "--trials", "300", "--seed", "7", "--serial"});
  CHECK(serial.out == slurp(a));

  CHECK(run({"bench", "--trials", "0"}).code == 1);
  CHECK(run({"bench", "--arch", "batcher"}).code == 1);
  CHECK(run({"bench", "--m", "5", "--dist", "uniform", "--trials", "20", "--check"}).code == 0);
  CHECK(run({"bench", "--arch", "max", "--m", "5", "--mu", "16", "--sigma", "4", "--trials", "20",
             "--check"}).code == 0);
}

TEST_CASE("cost") {
  auto r = run({"cost"});
  CHECK(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 19);
  CHECK(r.out.find("\n8,8,") != std::string::npos);
  CHECK(r.out.find(",4608,") != std::string::npos);

  r = run({"cost", "--n", "8", "--m", "8"});
  CHECK(r.code == 0);
  lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 2);
  CHECK(run({"cost", "--n", "12"}).code == 1);
}

TEST_CASE("compare") {
  auto r = run({"compare", "--n", "8", "--m", "8", "--trials", "100", "--seed", "1", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "vectors,min_vs_oracle,max_vs_min,batcher_vs_min,cycle_law_failures\n100,0,0,0,0\n");
  CHECK(run({"compare", "--n", "6", "--m", "8", "--trials", "10"}).code == 1);
}
