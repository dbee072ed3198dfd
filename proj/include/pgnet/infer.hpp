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

#ifndef PGNET_INFER_HPP_
#define PGNET_INFER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgnet/graph.hpp"
#include "pgnet/model.hpp"
#include "pgnet/random.hpp"

namespace pgnet {

// Arrival order of the observed nodes: position i (0-based) holds the label
// of the (i+1)-th node to arrive.
class Permutation {
 public:
  Permutation() = default;
  static Permutation Identity(std::size_t n);
  // Throws InvalidArgument unless `labels` is a permutation of 0..n-1.
  static Permutation FromArrivalOrder(std::vector<NodeId> labels);

  std::size_t size() const { return labels_.size(); }
  NodeId label_at(std::size_t position) const { return labels_[position]; }
  std::size_t position_of(NodeId label) const { return positions_[label]; }
  std::span<const NodeId> arrival_order() const { return labels_; }

  void swap_positions(std::size_t i, std::size_t j);
  // The permutation that maps positions back to labels, i.e. with arrival
  // order equal to this one's position table.
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<NodeId> labels_;
  std::vector<std::uint32_t> positions_;
};

// State seen by the node that arrives at step t (t = 1..N-1): the degrees of
// the t earlier nodes and how many edge copies it sends to each, both indexed
// by arrival position.
struct ReplayStep {
  std::vector<std::uint32_t> degrees;
  std::vector<std::uint32_t> copies;
};

// Replays the growth of `g` under arrival order `sigma` from a single-node
// seed. O(N^2) memory; meant for inspection and small graphs.
std::vector<ReplayStep> replay(const MultiGraph& g, const Permutation& sigma);

// Sufficient statistics of one (graph, arrival order) pair for the exact
// Poisson-growth likelihood. Construction is O(N + E); each evaluation is
// O(N + distinct degrees).
class NetworkLikelihood {
 public:
  NetworkLikelihood(const MultiGraph& g, const Permutation& sigma);

  // log P(G | theta, sigma); -infinity when an edge lands on a node whose
  // attachment weight is zero. Steps where every weight is zero use the
  // uniform fallback q = 1/t, as the generator does.
  double log_prob(const ModelParams& params) const;

 private:
  struct Step {
    std::uint32_t t = 0;            // nodes present before the arrival
    std::uint32_t m = 0;            // copies sent to earlier nodes
    std::uint32_t zero_degree = 0;  // earlier nodes with degree 0
    double degree_sum = 0.0;        // sum of earlier degrees
    // Degrees are all <= 1, so every weight can vanish for some params.
    bool may_be_uniform = false;
    std::uint32_t first_target = 0, end_target = 0;  // into uniform_targets_
  };
  struct Target {
    std::uint32_t degree = 0;
    std::uint32_t copies = 0;
  };

  std::size_t num_steps_ = 0;
  std::uint64_t total_copies_ = 0;
  double log_factorials_ = 0.0;
  std::vector<Step> steps_;  // steps with m > 0 only
  std::vector<Target> uniform_targets_;
  std::vector<double> copies_by_degree_;
};

double log_prob_network(const MultiGraph& g, const ModelParams& params,
                        const Permutation& sigma);

// Default starting order: highest-degree node first, then repeatedly the
// highest-degree node adjacent to the nodes already placed (ties broken by
// label). Isolated nodes come last.
Permutation initial_arrival_order(const MultiGraph& g);

// Independent exponential priors: lambda ~ Exp(lambda_rate), b ~ Exp(b_rate),
// 1 + a ~ Exp(a_rate). With a and b locked, a = b ~ Exp(b_rate).
struct PriorSpec {
  double lambda_rate = 1.0;
  double a_rate = 1.0;
  double b_rate = 1.0;
};

double log_prior(const ModelParams& theta, const PriorSpec& prior, bool lock_ab);

// Random-walk scales on log(lambda), log(1 + a) and log(b). A zero scale
// keeps that component fixed. With lock_ab the `a` scale drives log(a = b).
struct ThetaStep {
  double a = 0.2;
  double b = 0.2;
  double lambda = 0.05;
};

struct McmcConfig {
  std::uint64_t n_iter = 20000;
  std::uint64_t burn_in = 2000;
  std::uint64_t thin = 1;
  ThetaStep theta_step;
  std::uint32_t swap_moves_per_iter = 2;
  std::uint32_t graph_moves_per_iter = 1;  // mcmc_graph only
  bool lock_ab = false;
  PriorSpec prior;
  ModelParams initial{0.5, 0.5, 1.0};
  std::optional<Permutation> initial_sigma;
  // Keep sigma on every k-th retained sample; 0 never.
  std::uint64_t sigma_every = 0;
  RngSpec rng;

  void validate() const;
};

struct AcceptanceStats {
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;
  double rate() const {
    return proposed == 0 ? 0.0
                         : static_cast<double>(accepted) /
                               static_cast<double>(proposed);
  }
};

struct McmcSample {
  std::uint64_t iter = 0;
  ModelParams theta;
  double log_post = 0.0;
  std::optional<std::vector<NodeId>> sigma;
};

struct McmcChain {
  std::vector<McmcSample> samples;
  AcceptanceStats theta_moves;
  AcceptanceStats sigma_moves;
};

// Metropolis-Hastings over (theta, sigma) targeting
// P(G | theta, sigma) pi(theta) with a uniform prior on sigma.
McmcChain mcmc_theta(const MultiGraph& g, const McmcConfig& config);

// log P(D | G) supplied by the caller. May return -infinity; NaN, +infinity
// or an exception aborts the chain.
using DataLogLikelihood = std::function<double(const MultiGraph&)>;

struct GraphChainState {
  std::uint64_t iter;
  const MultiGraph& graph;
  const ModelParams& theta;
  const Permutation& sigma;
  double log_post;
};

struct GraphChainStats {
  AcceptanceStats graph_moves;
  AcceptanceStats theta_moves;
  AcceptanceStats sigma_moves;
};

// Metropolis-Hastings over (G, theta, sigma) targeting
// P(D | G) P(G | theta, sigma) pi(theta). Graph moves add or remove one edge
// copy between a uniformly chosen node pair. `visit` sees every retained
// state.
GraphChainStats mcmc_graph_visit(
    const DataLogLikelihood& data_loglik, MultiGraph initial,
    const McmcConfig& config,
    const std::function<void(const GraphChainState&)>& visit);

struct GraphSample {
  std::uint64_t iter = 0;
  MultiGraph graph;
  ModelParams theta;
  std::vector<NodeId> sigma;
  double log_post = 0.0;
};

struct GraphChain {
  std::vector<GraphSample> samples;
  GraphChainStats stats;
};

// Starts from `initial` if given, else from the edgeless graph on n_nodes.
GraphChain mcmc_graph(const DataLogLikelihood& data_loglik, std::size_t n_nodes,
                      const McmcConfig& config,
                      const MultiGraph* initial = nullptr);

// One JSON object per retained sample: {iter, a, b, lambda, log_post} and
// "sigma" when kept.
void write_chain_jsonl(std::ostream& out, const McmcChain& chain);

// {n, mean: {a, b, lambda}, sd: {...}, acceptance: {theta, sigma}}.
std::string chain_summary_json(const McmcChain& chain);

}  // namespace pgnet

#endif  // PGNET_INFER_HPP_
