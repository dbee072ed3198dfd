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

#include <cmath>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "doctest.h"
#include "pgnet/error.hpp"
#include "pgnet/generate.hpp"

using namespace pgnet;

namespace {

MultiGraph with_degrees_path3() {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

// Two-sample chi-squared homogeneity p-value over categorical outcomes.
// Categories with a pooled count below 10 are merged into one bin.
double homogeneity_p_value(const std::map<std::vector<std::uint32_t>, double>& x,
                           const std::map<std::vector<std::uint32_t>, double>& y) {
  std::map<std::vector<std::uint32_t>, std::pair<double, double>> pooled;
  for (const auto& [k, c] : x) pooled[k].first += c;
  for (const auto& [k, c] : y) pooled[k].second += c;
  std::vector<std::pair<double, double>> bins;
  std::pair<double, double> rare{0.0, 0.0};
  for (const auto& [k, c] : pooled) {
    if (c.first + c.second < 10) {
      rare.first += c.first;
      rare.second += c.second;
    } else {
      bins.push_back(c);
    }
  }
  if (rare.first + rare.second > 0) bins.push_back(rare);
  double nx = 0, ny = 0;
  for (const auto& b : bins) {
    nx += b.first;
    ny += b.second;
  }
  double stat = 0.0;
  for (const auto& b : bins) {
    const double total = b.first + b.second;
    const double ex = total * nx / (nx + ny);
    const double ey = total * ny / (nx + ny);
    stat += (b.first - ex) * (b.first - ex) / ex + (b.second - ey) * (b.second - ey) / ey;
  }
  boost::math::chi_squared dist(static_cast<double>(bins.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST_CASE("attachment weights follow the threshold form") {
  MultiGraph h(4);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  // degrees [0, 1, 2, 1]
  const auto w = attachment_weights(h, {-0.9, 0.1, 1.0});
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(0.1));
  CHECK(w[1] == doctest::Approx(0.1));
  CHECK(w[2] == doctest::Approx(1.1));

  MultiGraph two(3);
  two.add_edge(1, 2, 3);
  // degrees [0, 3, 3]
  const auto plain = attachment_weights(two, {0.0, 0.0, 1.0});
  CHECK(plain[0] == 0.0);
  CHECK(plain[1] == 3.0);

  MultiGraph pair(2);
  pair.add_edge(0, 1, 2);
  const auto offset = attachment_weights(pair, {0.5, 0.5, 1.0});
  CHECK(offset[0] == 2.5);
  CHECK(offset[1] == 2.5);

  CHECK_THROWS_AS(attachment_weights(pair, {-1.5, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(attachment_weights(pair, {0.0, -0.1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(attachment_weights(pair, {0.0, 0.0, 0.0}), InvalidArgument);
}

TEST_CASE("offset form needs a == b >= 0") {
  const ModelParams offset{0.5, 0.5, 3.0};
  const ModelParams threshold{-0.9, 0.1, 1.0};
  const ModelParams negative{-0.5, -0.5, 1.0};
  CHECK_NOTHROW(offset.validate_offset_form());
  CHECK_THROWS_AS(threshold.validate_offset_form(), InvalidArgument);
  CHECK_THROWS_AS(negative.validate(), InvalidArgument);
}

TEST_CASE("sampler draws match attachment probabilities") {
  MultiGraph h(3);
  h.add_node();
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_node();
  // degrees [0, 1, 2, 1, 0]; weights [0.1, 0.1, 1.1, 0.1, 0.1], total 1.5
  const ModelParams p{-0.9, 0.1, 1.0};
  AttachmentSampler sampler(h, p);
  CHECK(sampler.total_weight() == doctest::Approx(1.5));
  Rng rng = make_rng({11, 0});
  const int n = 200000;
  std::vector<int> hits(5, 0);
  for (NodeId v : sampler.draw_with_replacement(n, rng)) ++hits[v];
  const std::vector<double> expected{0.1 / 1.5, 0.1 / 1.5, 1.1 / 1.5, 0.1 / 1.5, 0.1 / 1.5};
  for (int v = 0; v < 5; ++v) {
    const double se = std::sqrt(expected[v] * (1 - expected[v]) / n);
    CHECK(std::fabs(hits[v] / double(n) - expected[v]) < 4 * se);
  }
}

TEST_CASE("sampler without replacement returns distinct nodes") {
  MultiGraph g(6);
  for (NodeId v = 1; v < 6; ++v) g.add_edge(0, v);
  AttachmentSampler sampler(g, {0.0, 0.0, 1.0});
  Rng rng = make_rng({3, 1});
  for (int rep = 0; rep < 1000; ++rep) {
    auto picks = sampler.draw_without_replacement(4, rng);
    std::sort(picks.begin(), picks.end());
    CHECK(std::adjacent_find(picks.begin(), picks.end()) == picks.end());
  }
  CHECK(sampler.draw_without_replacement(6, rng).size() == 6);
  CHECK_THROWS_AS(sampler.draw_without_replacement(7, rng), InvalidArgument);
}

TEST_CASE("zero total weight falls back to uniform selection") {
  // a = -1, b = 0: every node of the connected pair has weight 0.
  MultiGraph g = MultiGraph::ConnectedPair();
  g.add_node();
  const ModelParams p{-1.0, 0.0, 1.0};
  AttachmentSampler sampler(g, p);
  CHECK(sampler.total_weight() == 0.0);
  Rng rng = make_rng({5, 0});
  std::vector<int> hits(3, 0);
  const int n = 30000;
  for (NodeId v : sampler.draw_with_replacement(n, rng)) ++hits[v];
  for (int v = 0; v < 3; ++v) {
    CHECK(std::fabs(hits[v] / double(n) - 1.0 / 3) < 4 * std::sqrt((2.0 / 9) / n));
  }
  CHECK_NOTHROW(generate_pg(MultiGraph(1), {0.0, 0.0, 1.0}, 200, {1, 1}));
  CHECK_NOTHROW(generate_pg(MultiGraph::ConnectedPair(), p, 200, {1, 2}));
}

TEST_CASE("single-node seed with one edge attaches to the only node") {
  for (double a : {-0.9, 0.0, 2.0}) {
    MultiGraph g(1);
    Rng rng = make_rng({1, 0});
    const auto step = attach_new_node(g, {a, a < 0 ? 0.1 : a, 1.0}, 1, rng);
    CHECK(step.m == 1);
    REQUIRE(step.targets.size() == 1);
    CHECK(step.targets[0] == std::pair<NodeId, std::uint32_t>{0, 1});
    CHECK(g.num_nodes() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
  }
}

TEST_CASE("pg_step appends one node with Poisson many edges") {
  MultiGraph g = with_degrees_path3();
  Rng rng = make_rng({9, 9});
  for (int i = 0; i < 50; ++i) {
    const auto edges_before = g.num_edges();
    const auto step = pg_step(g, {0.0, 0.0, 2.0}, rng);
    std::uint64_t s_total = 0;
    for (const auto& [v, s] : step.targets) {
      CHECK(v < g.num_nodes() - 1);
      s_total += s;
    }
    CHECK(s_total == step.m);
    CHECK(g.num_edges() == edges_before + step.m);
    CHECK(g.degree(static_cast<NodeId>(g.num_nodes() - 1)) == step.m);
  }
}

TEST_CASE("mean number of new edges per step converges to lambda") {
  const std::size_t steps = 100000;
  const auto g = generate_pg(MultiGraph::ConnectedPair(), {0.0, 0.0, 1.0},
                             steps + 2, {2024, 0});
  const double mean_m = (static_cast<double>(g.num_edges()) - 1.0) / steps;
  CHECK(std::fabs(mean_m - 1.0) < 0.01);
}

TEST_CASE("generate_pg edge count matches its expectation") {
  const std::size_t n = 5000;
  const int reps = 100;
  for (const ModelParams p : {ModelParams{0.0, 0.0, 1.0}, ModelParams{-0.9, 0.1, 3.0}}) {
    double edge_sum = 0.0;
    double degree_sum = 0.0;
    for (int r = 0; r < reps; ++r) {
      const auto g = generate_pg(MultiGraph::ConnectedPair(), p, n, {77, std::uint64_t(r)});
      CHECK(g.num_nodes() == n);
      const double added = static_cast<double>(g.num_edges()) - 1.0;
      edge_sum += added;
      degree_sum += g.mean_degree();
      CHECK(std::fabs(added + 1.0 - (1.0 + p.lambda * (n - 2))) / (1.0 + p.lambda * (n - 2)) < 0.05);
    }
    const double mean_added = edge_sum / reps;
    const double se = std::sqrt(p.lambda * (n - 2)) / std::sqrt(double(reps));
    CHECK(std::fabs(mean_added - p.lambda * (n - 2)) < 4 * se);
    CHECK(degree_sum / reps == doctest::Approx(2.0 * p.lambda).epsilon(0.02));
  }
}

TEST_CASE("generators return the seed when no growth is needed") {
  const auto seed = MultiGraph::ConnectedPair();
  CHECK(generate_pg(seed, {0.0, 0.0, 1.0}, 2, {1, 0}) == seed);
  CHECK(generate_ba(seed, 1, 2, {1, 0}) == seed);
  CHECK(generate_pg_binomial(seed, {0.0, 0.0, 1.0}, 2, {1, 0}) == seed);
  CHECK_THROWS_AS(generate_pg(seed, {0.0, 0.0, 1.0}, 1, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(generate_pg(MultiGraph(), {0.0, 0.0, 1.0}, 5, {1, 0}), InvalidArgument);
}

TEST_CASE("generation is reproducible per stream") {
  const ModelParams p{-0.9, 0.1, 3.0};
  const auto a = generate_pg(MultiGraph::ConnectedPair(), p, 2000, {42, 3});
  const auto b = generate_pg(MultiGraph::ConnectedPair(), p, 2000, {42, 3});
  const auto c = generate_pg(MultiGraph::ConnectedPair(), p, 2000, {42, 4});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(generate_ba(MultiGraph::ConnectedPair(), 1, 1000, {8, 1}) ==
        generate_ba(MultiGraph::ConnectedPair(), 1, 1000, {8, 1}));
  const ModelParams q{-0.9, 0.1, 2.0};
  CHECK(generate_pg_binomial(MultiGraph::ConnectedPair(), q, 1000, {8, 1}) ==
        generate_pg_binomial(MultiGraph::ConnectedPair(), q, 1000, {8, 1}));
}

TEST_CASE("BA edge count identity and simple edges") {
  for (std::uint64_t r = 0; r < 20; ++r) {
    const auto g = generate_ba(MultiGraph::ConnectedPair(), 1, 5000, {5, r});
    CHECK(g.num_nodes() == 5000);
    CHECK(g.num_edges() == 4999);
    CHECK(g.max_multiplicity() == 1);
  }
  MultiGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  const auto g3 = generate_ba(triangle, 3, 800, {5, 99});
  CHECK(g3.num_edges() == 3 * (800 - 3) + 3);
  CHECK(g3.max_multiplicity() == 1);

  CHECK_THROWS_AS(generate_ba(MultiGraph::ConnectedPair(), 3, 10, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(generate_ba(MultiGraph::ConnectedPair(), 0, 10, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(generate_ba(MultiGraph(2), 1, 10, {1, 0}), InvalidArgument);
}

TEST_CASE("binomial variant has no multi-edges") {
  const ModelParams p{0.0, 0.0, 1.0};
  double degree_sum = 0.0;
  for (std::uint64_t r = 0; r < 20; ++r) {
    const auto g = generate_pg_binomial(MultiGraph::ConnectedPair(), p, 5000, {6, r});
    CHECK(g.max_multiplicity() == 1);
    degree_sum += g.mean_degree();
  }
  CHECK(degree_sum / 20 == doctest::Approx(2.0).epsilon(0.02));
  const auto dense = generate_pg_binomial(MultiGraph::ConnectedPair(), {-0.9, 0.1, 2.0}, 3000, {6, 1});
  CHECK(dense.max_multiplicity() == 1);
  CHECK_THROWS_AS(generate_pg_binomial(MultiGraph::ConnectedPair(), {0.0, 0.0, 3.0}, 100, {1, 0}),
                  InvalidArgument);
}

TEST_CASE("multinomial selection agrees with independent Poisson counts") {
  // Path 0-1-2 with theta = (0, 0, 1.5): q = (1/4, 1/2, 1/4).
  const ModelParams p{0.0, 0.0, 1.5};
  const auto base = with_degrees_path3();
  const int trials = 20000;
  Rng rng = make_rng({31337, 0});
  std::map<std::vector<std::uint32_t>, double> multinomial, poisson;
  for (int i = 0; i < trials; ++i) {
    MultiGraph g = base;
    const auto step = pg_step(g, p, rng);
    std::vector<std::uint32_t> s(3, 0);
    for (const auto& [v, c] : step.targets) s[v] = c;
    multinomial[s] += 1;
  }
  const std::vector<double> q{0.25, 0.5, 0.25};
  Rng other = make_rng({31337, 1});
  for (int i = 0; i < trials; ++i) {
    std::vector<std::uint32_t> s(3, 0);
    for (int v = 0; v < 3; ++v) {
      s[v] = static_cast<std::uint32_t>(sample_poisson(other, p.lambda * q[v]));
    }
    poisson[s] += 1;
  }
  CHECK(homogeneity_p_value(multinomial, poisson) > 1e-3);
}

TEST_CASE("Poisson and binomial samplers have the right moments") {
  Rng rng = make_rng({1, 2});
  const int n = 200000;
  for (double mean : {0.3, 1.0, 3.0, 12.0, 45.0}) {
    double s = 0, ss = 0;
    for (int i = 0; i < n; ++i) {
      const double x = static_cast<double>(sample_poisson(rng, mean));
      s += x;
      ss += x * x;
    }
    const double m = s / n;
    const double v = ss / n - m * m;
    CHECK(std::fabs(m - mean) < 4 * std::sqrt(mean / n));
    CHECK(v == doctest::Approx(mean).epsilon(0.03));
  }
  for (auto [trials, prob] : {std::pair<std::uint64_t, double>{10, 0.3},
                              {5000, 1.0 / 5000}, {4, 0.75}}) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      const auto x = sample_binomial(rng, trials, prob);
      CHECK(x <= trials);
      s += static_cast<double>(x);
    }
    const double mean = trials * prob;
    CHECK(std::fabs(s / n - mean) < 4 * std::sqrt(mean * (1 - prob) / n));
  }
  CHECK(sample_binomial(rng, 7, 1.0) == 7);
  CHECK(sample_poisson(rng, 0.0) == 0);
}
