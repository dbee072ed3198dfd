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

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgnet/campaign.hpp"
#include "pgnet/error.hpp"

using namespace pgnet;

TEST_CASE("model names") {
  CHECK(parse_growth_model("pg") == GrowthModel::kPg);
  CHECK(parse_growth_model("ba") == GrowthModel::kBa);
  CHECK(parse_growth_model("pg-binomial") == GrowthModel::kPgBinomial);
  CHECK(to_string(GrowthModel::kPgBinomial) == "pg-binomial");
  CHECK_THROWS_AS(parse_growth_model("er"), InvalidArgument);
}

TEST_CASE("seeds and spec validation") {
  CHECK(make_seed(1).num_nodes() == 1);
  CHECK(make_seed(2).num_edges() == 1);
  CHECK_THROWS_AS(make_seed(3), InvalidArgument);

  CampaignSpec s;
  CHECK_NOTHROW(s.validate());
  s.model = GrowthModel::kBa;
  s.m = 3;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = CampaignSpec{};
  s.n_sim = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = CampaignSpec{};
  s.params.lambda = -1;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = CampaignSpec{};
  s.k_min = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 8, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 37) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("campaign results do not depend on the thread count") {
  CampaignSpec s;
  s.n_final = 800;
  s.n_sim = 12;
  s.master_seed = 99;
  s.threads = 1;
  const auto serial = run_campaign(s);
  s.threads = 4;
  const auto parallel = run_campaign(s);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].index == i);
    CHECK(serial[i].hist == parallel[i].hist);
    CHECK(serial[i].mean_degree == parallel[i].mean_degree);
  }
  CHECK(generate_replicate(s, 3) == generate_replicate(s, 3));
  CHECK_FALSE(generate_replicate(s, 3) == generate_replicate(s, 4));
}

TEST_CASE("summaries skip failed fits") {
  std::vector<ReplicateResult> rs(3);
  rs[0].hist = DegreeHistogram(std::vector<std::uint64_t>{0, 2});
  rs[0].mean_degree = 1.0;
  rs[0].fit = FitResult{3.0, 10, 5};
  rs[1].hist = DegreeHistogram(std::vector<std::uint64_t>{0, 2});
  rs[1].mean_degree = 2.0;
  rs[1].fit = FitResult{2.0, 10, 5};
  rs[2].hist = DegreeHistogram(std::vector<std::uint64_t>{0, 2});
  rs[2].mean_degree = 3.0;
  rs[2].fit_error = "no tail";
  const auto s = summarize(rs, 10);
  CHECK(s.n_sim == 3);
  CHECK(s.n_fit == 2);
  CHECK(s.mean_degree == doctest::Approx(2.0));
  CHECK(s.mean_gamma == doctest::Approx(2.5));
  CHECK(s.sd_gamma == doctest::Approx(std::sqrt(0.5)));
  CHECK_FALSE(s.gamma_avg.has_value());
}

TEST_CASE("table rows and output") {
  const auto specs = table1_specs(3, 500, 1, 10, 2);
  REQUIRE(specs.size() == 5);
  CHECK(specs[0].model == GrowthModel::kBa);
  CHECK(specs[3].params.lambda == 3.0);
  CHECK(specs[2].stream_base != specs[1].stream_base);
  const std::vector<double> expected{3.0, 3.0, 2.44, 2.72, 3.17};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::round(specs[i].predicted_gamma() * 100) / 100 ==
          doctest::Approx(expected[i]));
  }

  const auto rows = run_table1(3, 500, 1, 10, 2);
  std::ostringstream text, csv;
  write_table1_text(text, rows);
  write_table1_csv(csv, rows);
  CHECK(text.str().find("theta=(-0.9,0.1,3)") != std::string::npos);
  std::istringstream lines(csv.str());
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 6);
  CHECK(csv.str().rfind("model,parameters,n_sim", 0) == 0);
}
