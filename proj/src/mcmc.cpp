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
#include <limits>
#include <ostream>
#include <string>

#include "json.hpp"
#include "pgnet/error.hpp"
#include "pgnet/infer.hpp"

namespace pgnet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool accept(double log_ratio, Rng& rng) {
  if (std::isnan(log_ratio)) return false;
  if (log_ratio >= 0.0) return true;
  return std::log(uniform01(rng)) < log_ratio;
}

enum class Coordinate { kLambda, kA, kB, kLockedAB };

// One component-wise random-walk sweep over theta. `log_target` returns
// log-likelihood + log-prior at a candidate theta. Each coordinate moves on a
// log scale, so the Jacobian ratio of a move is its multiplicative factor.
template <typename LogTarget>
void theta_sweep(ModelParams& theta, double& current, const McmcConfig& config,
                 Rng& rng, AcceptanceStats& stats, LogTarget&& log_target) {
  const auto& step = config.theta_step;
  const auto move = [&](Coordinate coord, double scale) {
    ++stats.proposed;
    if (scale == 0.0) {
      ++stats.accepted;
      return;
    }
    const double log_factor = scale * standard_normal(rng);
    const double factor = std::exp(log_factor);
    ModelParams cand = theta;
    switch (coord) {
      case Coordinate::kLambda: cand.lambda = theta.lambda * factor; break;
      case Coordinate::kA: cand.a = (1.0 + theta.a) * factor - 1.0; break;
      case Coordinate::kB: cand.b = theta.b * factor; break;
      case Coordinate::kLockedAB:
        cand.a = theta.a * factor;
        cand.b = cand.a;
        break;
    }
    if (!(cand.lambda > 0.0) || cand.a < -1.0 || cand.b < 0.0 ||
        !std::isfinite(cand.lambda) || !std::isfinite(cand.a) ||
        !std::isfinite(cand.b)) {
      return;
    }
    const double proposed = log_target(cand);
    const double log_ratio = proposed - current + log_factor;
    if (proposed > kNegInf && accept(log_ratio, rng)) {
      theta = cand;
      current = proposed;
      ++stats.accepted;
    }
  };
  move(Coordinate::kLambda, step.lambda);
  if (config.lock_ab) {
    move(Coordinate::kLockedAB, step.a);
  } else {
    move(Coordinate::kA, step.a);
    move(Coordinate::kB, step.b);
  }
}

std::pair<std::size_t, std::size_t> random_pair(std::size_t n, Rng& rng) {
  const auto i = uniform_index(rng, n);
  auto j = uniform_index(rng, n - 1);
  if (j >= i) ++j;
  return {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
}

bool retained(std::uint64_t iter, const McmcConfig& config) {
  return iter > config.burn_in && (iter - config.burn_in) % config.thin == 0;
}

Permutation starting_sigma(const McmcConfig& config, std::size_t n,
                           Permutation fallback) {
  if (!config.initial_sigma) return fallback;
  if (config.initial_sigma->size() != n) {
    throw InvalidArgument("initial arrival order has the wrong size");
  }
  return *config.initial_sigma;
}

}  // namespace

double log_prior(const ModelParams& theta, const PriorSpec& prior, bool lock_ab) {
  if (!(theta.lambda > 0.0) || theta.b < 0.0 || theta.a < -1.0) return kNegInf;
  double lp = std::log(prior.lambda_rate) - prior.lambda_rate * theta.lambda;
  if (lock_ab) {
    if (theta.a != theta.b) return kNegInf;
    return lp + std::log(prior.b_rate) - prior.b_rate * theta.b;
  }
  lp += std::log(prior.a_rate) - prior.a_rate * (1.0 + theta.a);
  lp += std::log(prior.b_rate) - prior.b_rate * theta.b;
  return lp;
}

void McmcConfig::validate() const {
  if (thin < 1) throw InvalidArgument("thin must be >= 1");
  if (burn_in > n_iter) throw InvalidArgument("burn_in exceeds n_iter");
  for (double s : {theta_step.a, theta_step.b, theta_step.lambda}) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw InvalidArgument("theta step sizes must be finite and >= 0");
    }
  }
  for (double r : {prior.lambda_rate, prior.a_rate, prior.b_rate}) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw InvalidArgument("prior rates must be positive");
    }
  }
  initial.validate();
  if (lock_ab) {
    if (initial.a != initial.b) {
      throw InvalidArgument("lock_ab needs initial a == b");
    }
    if (theta_step.a > 0.0 && !(initial.a > 0.0)) {
      throw InvalidArgument("locked a = b must start above 0 to move");
    }
  } else {
    if (theta_step.a > 0.0 && !(initial.a > -1.0)) {
      throw InvalidArgument("a must start above -1 to move");
    }
    if (theta_step.b > 0.0 && !(initial.b > 0.0)) {
      throw InvalidArgument("b must start above 0 to move");
    }
  }
}

McmcChain mcmc_theta(const MultiGraph& g, const McmcConfig& config) {
  config.validate();
  const std::size_t n = g.num_nodes();
  if (n == 0) throw InvalidArgument("cannot fit an empty graph");
  Permutation sigma = starting_sigma(config, n, initial_arrival_order(g));
  Rng rng = make_rng(config.rng);

  NetworkLikelihood likelihood(g, sigma);
  ModelParams theta = config.initial;
  double log_lik = likelihood.log_prob(theta);
  double log_post = log_lik + log_prior(theta, config.prior, config.lock_ab);
  if (!std::isfinite(log_post)) {
    throw McmcError("initial state " + theta.to_string() +
                    " has zero posterior probability under the starting "
                    "arrival order");
  }

  McmcChain chain;
  if (config.n_iter > config.burn_in) {
    chain.samples.reserve((config.n_iter - config.burn_in) / config.thin);
  }
  for (std::uint64_t iter = 1; iter <= config.n_iter; ++iter) {
    theta_sweep(theta, log_post, config, rng, chain.theta_moves,
                [&](const ModelParams& cand) {
                  return likelihood.log_prob(cand) +
                         log_prior(cand, config.prior, config.lock_ab);
                });
    log_lik = log_post - log_prior(theta, config.prior, config.lock_ab);

    for (std::uint32_t s = 0; s < config.swap_moves_per_iter && n >= 2; ++s) {
      const auto [i, j] = random_pair(n, rng);
      ++chain.sigma_moves.proposed;
      sigma.swap_positions(i, j);
      NetworkLikelihood candidate(g, sigma);
      const double cand_lik = candidate.log_prob(theta);
      if (cand_lik > kNegInf && accept(cand_lik - log_lik, rng)) {
        likelihood = std::move(candidate);
        log_post += cand_lik - log_lik;
        log_lik = cand_lik;
        ++chain.sigma_moves.accepted;
      } else {
        sigma.swap_positions(i, j);
      }
    }

    if (retained(iter, config)) {
      McmcSample sample{iter, theta, log_post, std::nullopt};
      if (config.sigma_every > 0 &&
          chain.samples.size() % config.sigma_every == 0) {
        auto order = sigma.arrival_order();
        sample.sigma.emplace(order.begin(), order.end());
      }
      chain.samples.push_back(std::move(sample));
    }
  }
  return chain;
}

GraphChainStats mcmc_graph_visit(
    const DataLogLikelihood& data_loglik, MultiGraph graph,
    const McmcConfig& config,
    const std::function<void(const GraphChainState&)>& visit) {
  config.validate();
  const std::size_t n = graph.num_nodes();
  if (n == 0) throw InvalidArgument("graph chain needs at least one node");
  Permutation sigma = starting_sigma(config, n, Permutation::Identity(n));
  Rng rng = make_rng(config.rng);

  std::uint64_t iter = 0;
  const auto eval_data = [&](const MultiGraph& g) {
    double value;
    try {
      value = data_loglik(g);
    } catch (const std::exception& e) {
      throw McmcError("data log-likelihood failed at iteration " +
                      std::to_string(iter) + " (" +
                      std::to_string(g.num_edges()) + " edges): " + e.what());
    }
    if (std::isnan(value) || value == std::numeric_limits<double>::infinity()) {
      throw McmcError("data log-likelihood returned " + std::to_string(value) +
                      " at iteration " + std::to_string(iter) + " (" +
                      std::to_string(g.num_edges()) + " edges)");
    }
    return value;
  };

  ModelParams theta = config.initial;
  double log_data = eval_data(graph);
  NetworkLikelihood likelihood(graph, sigma);
  double log_lik = likelihood.log_prob(theta);
  const auto prior = [&](const ModelParams& t) {
    return log_prior(t, config.prior, config.lock_ab);
  };
  if (!std::isfinite(log_data + log_lik + prior(theta))) {
    throw McmcError("initial graph has zero posterior probability");
  }

  GraphChainStats stats;
  for (iter = 1; iter <= config.n_iter; ++iter) {
    for (std::uint32_t s = 0; s < config.graph_moves_per_iter && n >= 2; ++s) {
      const auto [u, w] = random_pair(n, rng);
      const auto nu = static_cast<NodeId>(u);
      const auto nw = static_cast<NodeId>(w);
      const bool insert = uniform01(rng) < 0.5;
      ++stats.graph_moves.proposed;
      if (!insert && graph.multiplicity(nu, nw) == 0) continue;
      if (insert) {
        graph.add_edge(nu, nw);
      } else {
        graph.remove_edge(nu, nw);
      }
      const double cand_data = eval_data(graph);
      double cand_lik = kNegInf;
      std::optional<NetworkLikelihood> candidate;
      if (cand_data > kNegInf) {
        candidate.emplace(graph, sigma);
        cand_lik = candidate->log_prob(theta);
      }
      if (cand_lik > kNegInf &&
          accept(cand_data + cand_lik - log_data - log_lik, rng)) {
        likelihood = std::move(*candidate);
        log_data = cand_data;
        log_lik = cand_lik;
        ++stats.graph_moves.accepted;
      } else if (insert) {
        graph.remove_edge(nu, nw);
      } else {
        graph.add_edge(nu, nw);
      }
    }

    double log_post_theta = log_lik + prior(theta);
    theta_sweep(theta, log_post_theta, config, rng, stats.theta_moves,
                [&](const ModelParams& cand) {
                  return likelihood.log_prob(cand) + prior(cand);
                });
    log_lik = log_post_theta - prior(theta);

    for (std::uint32_t s = 0; s < config.swap_moves_per_iter && n >= 2; ++s) {
      const auto [i, j] = random_pair(n, rng);
      ++stats.sigma_moves.proposed;
      sigma.swap_positions(i, j);
      NetworkLikelihood candidate(graph, sigma);
      const double cand_lik = candidate.log_prob(theta);
      if (cand_lik > kNegInf && accept(cand_lik - log_lik, rng)) {
        likelihood = std::move(candidate);
        log_lik = cand_lik;
        ++stats.sigma_moves.accepted;
      } else {
        sigma.swap_positions(i, j);
      }
    }

    if (retained(iter, config)) {
      visit(GraphChainState{iter, graph, theta, sigma,
                            log_data + log_lik + prior(theta)});
    }
  }
  return stats;
}

GraphChain mcmc_graph(const DataLogLikelihood& data_loglik, std::size_t n_nodes,
                      const McmcConfig& config, const MultiGraph* initial) {
  MultiGraph start = initial != nullptr ? *initial : MultiGraph(n_nodes);
  if (start.num_nodes() != n_nodes) {
    throw InvalidArgument("initial graph does not have n_nodes nodes");
  }
  GraphChain chain;
  chain.stats = mcmc_graph_visit(
      data_loglik, std::move(start), config, [&](const GraphChainState& s) {
        auto order = s.sigma.arrival_order();
        chain.samples.push_back(GraphSample{
            s.iter, s.graph, s.theta,
            std::vector<NodeId>(order.begin(), order.end()), s.log_post});
      });
  return chain;
}

void write_chain_jsonl(std::ostream& out, const McmcChain& chain) {
  for (const auto& s : chain.samples) {
    nlohmann::json j{{"iter", s.iter},
                     {"a", s.theta.a},
                     {"b", s.theta.b},
                     {"lambda", s.theta.lambda},
                     {"log_post", s.log_post}};
    if (s.sigma) j["sigma"] = *s.sigma;
    out << j.dump() << '\n';
  }
}

std::string chain_summary_json(const McmcChain& chain) {
  const auto n = chain.samples.size();
  nlohmann::json mean = nlohmann::json::object();
  nlohmann::json sd = nlohmann::json::object();
  const auto column = [&](const char* name, auto field) {
    if (n == 0) {
      mean[name] = nullptr;
      sd[name] = nullptr;
      return;
    }
    double m = 0.0;
    for (const auto& s : chain.samples) m += field(s.theta);
    m /= static_cast<double>(n);
    double ss = 0.0;
    for (const auto& s : chain.samples) {
      const double d = field(s.theta) - m;
      ss += d * d;
    }
    mean[name] = m;
    sd[name] = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  };
  column("a", [](const ModelParams& t) { return t.a; });
  column("b", [](const ModelParams& t) { return t.b; });
  column("lambda", [](const ModelParams& t) { return t.lambda; });
  nlohmann::json j{{"n", n},
                   {"mean", mean},
                   {"sd", sd},
                   {"acceptance",
                    {{"theta", chain.theta_moves.rate()},
                     {"sigma", chain.sigma_moves.rate()}}}};
  return j.dump(2);
}

}  // namespace pgnet
