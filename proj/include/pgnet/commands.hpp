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

#ifndef PGNET_COMMANDS_HPP_
#define PGNET_COMMANDS_HPP_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pgnet/campaign.hpp"
#include "pgnet/infer.hpp"
#include "pgnet/model.hpp"

namespace pgnet::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumeric = 4;

int exit_code_for(const std::exception& e);

// Writes graph_NNNNN.txt and fit_NNNNN.json per replicate plus summary.json
// into `out_dir`.
void cmd_generate(const CampaignSpec& spec, const std::filesystem::path& out_dir,
                  std::ostream& log);

struct Table1Options {
  std::size_t n_sim = 100;
  std::size_t n_final = 5000;
  std::uint64_t master_seed = 1;
  std::uint32_t k_min = kDefaultKMin;
  unsigned threads = 0;
  // table1.csv is written here when set.
  std::optional<std::filesystem::path> out_dir;
};

std::vector<Table1Row> cmd_table1(const Table1Options& options, std::ostream& out);

struct TheoryOptions {
  ModelParams params;
  // Master-equation CSV destination; skipped when unset.
  std::optional<std::filesystem::path> master_csv;
  std::uint64_t t_final = 10000;
  std::uint64_t k_max = 2000;
  std::size_t seed_nodes = 2;
};

// Prints {"p0", "gamma", "mean_degree"} as JSON.
void cmd_theory(const TheoryOptions& options, std::ostream& out);

struct FitOptions {
  std::filesystem::path graph;
  std::filesystem::path out_dir;
  McmcConfig config;
};

// Writes chain.jsonl and summary.json; echoes the summary to `out`.
void cmd_fit(const FitOptions& options, std::ostream& out);

struct DistplotOptions {
  // Graph files, or directories whose *.txt graph files are all used.
  std::vector<std::filesystem::path> inputs;
  std::uint32_t k_min = kDefaultKMin;
};

// CSV of (k, p(k)) for the single or averaged degree distribution, with the
// fitted exponent and the reference line in '#' header lines.
void cmd_distplot(const DistplotOptions& options, std::ostream& out);

}  // namespace pgnet::cli

#endif  // PGNET_COMMANDS_HPP_
