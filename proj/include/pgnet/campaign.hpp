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

#ifndef PGNET_CAMPAIGN_HPP_
#define PGNET_CAMPAIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgnet/estimate.hpp"
#include "pgnet/graph.hpp"
#include "pgnet/model.hpp"

namespace pgnet {

enum class GrowthModel { kPg, kBa, kPgBinomial };

GrowthModel parse_growth_model(std::string_view name);
std::string to_string(GrowthModel model);

// Seed graph by size: 1 is a single node, 2 a connected pair.
MultiGraph make_seed(std::size_t seed_nodes);

// A batch of independent replicates of one generator setting.
struct CampaignSpec {
  GrowthModel model = GrowthModel::kPg;
  ModelParams params;
  std::uint32_t m = 1;  // BA only
  std::size_t n_final = 5000;
  std::size_t n_sim = 100;
  std::uint32_t k_min = kDefaultKMin;
  std::uint64_t master_seed = 1;
  // Replicate i draws from stream (master_seed, stream_base + i).
  std::uint64_t stream_base = 0;
  std::size_t seed_nodes = 2;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
  // Exponent predicted for this setting (BA counts as a = b = 0).
  double predicted_gamma() const;
  std::string describe() const;
};

MultiGraph generate_replicate(const CampaignSpec& spec, std::size_t index);

struct ReplicateResult {
  std::size_t index = 0;
  DegreeHistogram hist;
  double mean_degree = 0.0;
  std::optional<FitResult> fit;
  std::string fit_error;  // set when the fit threw
};

// Runs fn(i) for i in [0, n) on a pool of worker threads.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

// Generates and fits all replicates in parallel. `on_graph` runs on the
// worker thread that produced the graph. Results are ordered by index.
std::vector<ReplicateResult> run_campaign(
    const CampaignSpec& spec,
    const std::function<void(std::size_t, const MultiGraph&)>& on_graph = {});

struct CampaignSummary {
  std::size_t n_sim = 0;
  std::size_t n_fit = 0;  // replicates with a usable tail
  double mean_degree = 0.0;
  double mean_gamma = 0.0;
  double sd_gamma = 0.0;
  std::optional<double> gamma_avg;  // refit of the averaged distribution
};

CampaignSummary summarize(std::span<const ReplicateResult> results,
                          std::uint32_t k_min);

struct Table1Row {
  std::string model;
  std::string parameters;
  CampaignSpec spec;
  double predicted_gamma = 0.0;
  CampaignSummary summary;
};

// The five settings: BA m=1 and PG (0,0,1), (-0.9,0.1,1), (-0.9,0.1,3),
// (0.5,0.5,3), each grown from a connected pair.
std::vector<CampaignSpec> table1_specs(std::size_t n_sim, std::size_t n_final,
                                       std::uint64_t master_seed,
                                       std::uint32_t k_min, unsigned threads);

std::vector<Table1Row> run_table1(std::size_t n_sim, std::size_t n_final,
                                  std::uint64_t master_seed,
                                  std::uint32_t k_min, unsigned threads);

void write_table1_text(std::ostream& out, std::span<const Table1Row> rows);
void write_table1_csv(std::ostream& out, std::span<const Table1Row> rows);

}  // namespace pgnet

#endif  // PGNET_CAMPAIGN_HPP_
