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

#ifndef PGNET_GENERATE_HPP_
#define PGNET_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pgnet/graph.hpp"
#include "pgnet/model.hpp"
#include "pgnet/random.hpp"

namespace pgnet {

// Attachment weight r(k_i) of every node in `g`.
std::vector<double> attachment_weights(const MultiGraph& g,
                                       const ModelParams& params);

// Edges brought by one new node: m copies split over existing targets.
struct GrowthStep {
  std::uint64_t m = 0;
  // (target, s_i) with s_i > 0, sorted by target; the s_i sum to m.
  std::vector<std::pair<NodeId, std::uint32_t>> targets;
};

// Weighted node selection by attachment weight, grouped into degree classes.
// Selecting a class costs O(number of distinct degrees) and a node within a
// class is uniform, so the draw is exact for any (a, b). When every weight is
// zero the draw falls back to uniform over the candidates.
class AttachmentSampler {
 public:
  AttachmentSampler(const MultiGraph& g, const ModelParams& params);

  // Registers a new node of degree 0.
  void add_node();
  void set_degree(NodeId v, std::uint32_t degree);
  std::uint32_t degree(NodeId v) const { return degree_[v]; }
  std::size_t num_nodes() const { return degree_.size(); }

  // Sum of attachment weights over all nodes.
  double total_weight() const;

  // m independent draws (multinomial selection); nodes may repeat.
  std::vector<NodeId> draw_with_replacement(std::uint64_t m, Rng& rng);
  // m distinct nodes, renormalising after each removal. m <= num_nodes().
  std::vector<NodeId> draw_without_replacement(std::uint64_t m, Rng& rng);

 private:
  void insert(NodeId v, std::uint32_t degree);
  void erase(NodeId v);
  // Builds the cumulative class table; returns its total.
  double prepare();
  NodeId pick(double total, Rng& rng) const;

  ModelParams params_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<NodeId>> classes_;  // nodes by degree
  std::vector<double> cumulative_;
};

// Adds a node joined to `m` targets drawn independently by preferential
// attachment on the current graph.
GrowthStep attach_new_node(MultiGraph& g, const ModelParams& params,
                           std::uint64_t m, Rng& rng);

// One Poisson-growth step: m ~ Poisson(lambda), then attach_new_node.
GrowthStep pg_step(MultiGraph& g, const ModelParams& params, Rng& rng);

// Grows `seed` to `n_final` nodes under the Poisson-growth model.
MultiGraph generate_pg(MultiGraph seed, const ModelParams& params,
                       std::size_t n_final, const RngSpec& rng_spec);

// Barabasi-Albert reduction: every new node attaches to exactly m distinct
// nodes with probability proportional to degree. Seed must be connected and
// have at least m nodes.
MultiGraph generate_ba(MultiGraph seed, std::uint32_t m, std::size_t n_final,
                       const RngSpec& rng_spec);

// No-multi-edge variant: at a step with t nodes, m ~ Binomial(t, lambda / t)
// and the m targets are distinct. Needs lambda <= seed node count.
MultiGraph generate_pg_binomial(MultiGraph seed, const ModelParams& params,
                                std::size_t n_final, const RngSpec& rng_spec);

bool is_connected(const MultiGraph& g);

}  // namespace pgnet

#endif  // PGNET_GENERATE_HPP_
