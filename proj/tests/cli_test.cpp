// Copyright 2026 The pgnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout and stderr.
Run pgnet(const std::string& args) {
  const std::string cmd = std::string(PGNET_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("pgnet_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("generate is reproducible byte for byte") {
  TempDir dir;
  REQUIRE(pgnet("generate --n 400 --nsim 3 --seed 11 --out " + (dir / "a")).code == 0);
  REQUIRE(pgnet("generate --n 400 --nsim 3 --seed 11 --threads 1 --out " + (dir / "b")).code ==
          0);
  REQUIRE(pgnet("generate --n 400 --nsim 3 --seed 12 --out " + (dir / "c")).code == 0);
  for (const char* f : {"graph_00000.txt", "graph_00002.txt", "fit_00001.json"}) {
    CHECK(slurp(dir.path() / "a" / f) == slurp(dir.path() / "b" / f));
  }
  CHECK(slurp(dir.path() / "a" / "summary.json") == slurp(dir.path() / "b" / "summary.json"));
  CHECK(slurp(dir.path() / "a" / "graph_00000.txt") !=
        slurp(dir.path() / "c" / "graph_00000.txt"));

  const auto summary = nlohmann::json::parse(slurp(dir.path() / "a" / "summary.json"));
  CHECK(summary["n_sim"].get<int>() == 3);
  CHECK(summary["mean_degree"].get<double>() == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("generate supports every model") {
  TempDir dir;
  CHECK(pgnet("generate --model ba --m 2 --n 100 --nsim 1 --out " + (dir / "ba")).code == 0);
  const auto ba = slurp(dir.path() / "ba" / "graph_00000.txt");
  // Header plus one line per edge: 1 + 2 * 98.
  CHECK(count_lines(ba) == 1 + 1 + 2 * 98);
  CHECK(pgnet("generate --model pg-binomial --n 100 --nsim 1 --out " + (dir / "bin")).code ==
        0);
  CHECK(pgnet("generate --model er --out " + (dir / "x")).code == 2);
}

TEST_CASE("config file values are overridden by flags") {
  TempDir dir;
  spit(dir / "run.cfg", "# settings\nn = 150\nnsim=2\nseed=3\n");
  REQUIRE(pgnet("--config " + (dir / "run.cfg") + " generate --nsim 1 --out " + (dir / "o"))
              .code == 0);
  const auto s = nlohmann::json::parse(slurp(dir.path() / "o" / "summary.json"));
  CHECK(s["n_final"].get<int>() == 150);
  CHECK(s["n_sim"].get<int>() == 1);
  CHECK(s["master_seed"].get<int>() == 3);
  spit(dir / "bad.cfg", "n 150\n");
  CHECK(pgnet("--config " + (dir / "bad.cfg") + " generate --out " + (dir / "p")).code == 2);
  CHECK(pgnet("--config " + (dir / "missing.cfg") + " generate --out " + (dir / "p")).code ==
        3);
}

TEST_CASE("theory reports the predicted exponent") {
  auto r = pgnet("theory --a -0.9 --b 0.1 --lambda 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["gamma"].get<double>() == doctest::Approx(2.71568166968404).epsilon(1e-12));
  CHECK(j["mean_degree"].get<double>() == 6.0);
  CHECK(j["p0"].get<double>() == doctest::Approx(0.0470450090521179).epsilon(1e-12));

  TempDir dir;
  r = pgnet("theory --lambda 1 --t 500 --kmax 300 --master-csv " + (dir / "m.csv"));
  REQUIRE(r.code == 0);
  const auto csv = slurp(dir.path() / "m.csv");
  CHECK(csv.find("# t=500") != std::string::npos);
  CHECK(csv.find("k,p_k\n0,") != std::string::npos);
  CHECK(pgnet("theory --lambda 0").code == 2);
}

TEST_CASE("fit writes a chain of the configured length") {
  TempDir dir;
  REQUIRE(pgnet("generate --n 200 --nsim 1 --a 0.5 --b 0.5 --out " + (dir / "g")).code == 0);
  const std::string graph = (dir.path() / "g" / "graph_00000.txt").string();
  auto r = pgnet("fit " + graph + " --iters 120 --burnin 20 --thin 4 --out " + (dir / "f"));
  REQUIRE(r.code == 0);
  CHECK(count_lines(slurp(dir.path() / "f" / "chain.jsonl")) == 25);
  const auto s = nlohmann::json::parse(slurp(dir.path() / "f" / "summary.json"));
  CHECK(s["n"].get<int>() == 25);

  r = pgnet("fit " + graph + " --iters 0 --burnin 0 --out " + (dir / "z"));
  REQUIRE(r.code == 0);
  CHECK(slurp(dir.path() / "z" / "chain.jsonl").empty());
  const auto z = nlohmann::json::parse(slurp(dir.path() / "z" / "summary.json"));
  CHECK(z["n"].get<int>() == 0);
  CHECK(z["mean"]["lambda"].is_null());

  r = pgnet("fit " + graph + " --iters 10 --burnin 20 --out " + (dir / "e"));
  CHECK(r.code == 2);
}

TEST_CASE("distplot emits points and the fitted line") {
  TempDir dir;
  REQUIRE(pgnet("generate --n 2000 --nsim 2 --out " + (dir / "g")).code == 0);
  const auto r = pgnet("distplot " + (dir / "g"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# graphs=2 N=2000") != std::string::npos);
  CHECK(r.out.find("gamma_hat=") != std::string::npos);
  CHECK(r.out.find("k,p_k,p_line\n") != std::string::npos);
  const auto one = pgnet("distplot " + (dir / "g") + "/graph_00000.txt --kmin 5");
  CHECK(one.code == 0);
  CHECK(one.out.find("# graphs=1") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(pgnet("").code == 2);
  CHECK(pgnet("bogus").code == 2);
  CHECK(pgnet("generate --n notanumber").code == 2);
  CHECK(pgnet("generate --lambda -1 --out " + (dir / "x")).code == 2);
  CHECK(pgnet("fit " + (dir / "absent.txt") + " --out " + (dir / "f")).code == 3);
  spit(dir / "bad.txt", "N 3\n0 1\n1 x\n");
  const auto parse = pgnet("distplot " + (dir / "bad.txt"));
  CHECK(parse.code == 3);
  CHECK(parse.out.find("line 3") != std::string::npos);

  spit(dir / "late.txt", "N 4\n0 1\n2 3\n");
  CHECK(pgnet("fit " + (dir / "late.txt") +
              " --iters 5 --burnin 0 --lock-ab --a 0 --b 0 --step-a 0 --out " + (dir / "f"))
            .code == 4);
  CHECK(pgnet("distplot " + (dir / "late.txt")).code == 4);
}

TEST_CASE("table1 at toy scale") {
  TempDir dir;
  const auto r = pgnet("table1 --nsim 2 --n 300 --out " + (dir / "t"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("theta=(0.5,0.5,3)") != std::string::npos);
  CHECK(count_lines(slurp(dir.path() / "t" / "table1.csv")) == 6);
}
