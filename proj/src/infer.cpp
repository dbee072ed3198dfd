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

#include "pgnet/infer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "pgnet/error.hpp"

namespace pgnet {

Permutation Permutation::Identity(std::size_t n) {
  std::vector<NodeId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<NodeId>(i);
  return FromArrivalOrder(std::move(labels));
}

Permutation Permutation::FromArrivalOrder(std::vector<NodeId> labels) {
  Permutation p;
  const std::size_t n = labels.size();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  p.positions_.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId label = labels[i];
    if (label >= n || p.positions_[label] != kUnset) {
      throw InvalidArgument("arrival order is not a bijection on 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
    }
    p.positions_[label] = static_cast<std::uint32_t>(i);
  }
  p.labels_ = std::move(labels);
  return p;
}

void Permutation::swap_positions(std::size_t i, std::size_t j) {
  std::swap(labels_[i], labels_[j]);
  positions_[labels_[i]] = static_cast<std::uint32_t>(i);
  positions_[labels_[j]] = static_cast<std::uint32_t>(j);
}

Permutation Permutation::inverse() const {
  return FromArrivalOrder(
      std::vector<NodeId>(positions_.begin(), positions_.end()));
}

namespace {

void check_sigma(const MultiGraph& g, const Permutation& sigma) {
  if (sigma.size() != g.num_nodes()) {
    throw InvalidArgument("arrival order covers " + std::to_string(sigma.size()) +
                          " nodes but the graph has " +
                          std::to_string(g.num_nodes()));
  }
}

// Calls visit(t, degrees, arrivals) for t = 1..N-1, where `arrivals` lists
// (position, copies) of the edges from the node at position t to earlier
// positions and `degrees` is the state before the arrival.
template <typename Visit>
void walk_arrivals(const MultiGraph& g, const Permutation& sigma, Visit&& visit) {
  check_sigma(g, sigma);
  const std::size_t n = g.num_nodes();
  std::vector<std::uint32_t> degrees(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arrivals;
  for (std::size_t t = 1; t < n; ++t) {
    arrivals.clear();
    for (const auto& [label, copies] : g.neighbors(sigma.label_at(t))) {
      const auto pos = sigma.position_of(label);
      if (pos < t) arrivals.emplace_back(static_cast<std::uint32_t>(pos), copies);
    }
    visit(t, std::span<const std::uint32_t>(degrees.data(), t), arrivals);
    for (const auto& [pos, copies] : arrivals) {
      degrees[pos] += copies;
      degrees[t] += copies;
    }
  }
}

double log_factorial(std::uint32_t s) {
  return std::lgamma(static_cast<double>(s) + 1.0);
}

}  // namespace

std::vector<ReplayStep> replay(const MultiGraph& g, const Permutation& sigma) {
  std::vector<ReplayStep> steps;
  walk_arrivals(g, sigma, [&](std::size_t t, std::span<const std::uint32_t> degrees,
                              const auto& arrivals) {
    ReplayStep step;
    step.degrees.assign(degrees.begin(), degrees.end());
    step.copies.assign(t, 0);
    for (const auto& [pos, copies] : arrivals) step.copies[pos] = copies;
    steps.push_back(std::move(step));
  });
  return steps;
}

NetworkLikelihood::NetworkLikelihood(const MultiGraph& g,
                                     const Permutation& sigma) {
  std::uint32_t zero_degree = g.num_nodes() > 0 ? 1 : 0;
  double degree_sum = 0.0;
  std::uint32_t max_degree = 0;
  walk_arrivals(g, sigma, [&](std::size_t t, std::span<const std::uint32_t> degrees,
                              const auto& arrivals) {
    ++num_steps_;
    std::uint32_t m = 0;
    for (const auto& [pos, copies] : arrivals) m += copies;
    if (m > 0) {
      Step step;
      step.t = static_cast<std::uint32_t>(t);
      step.m = m;
      step.zero_degree = zero_degree;
      step.degree_sum = degree_sum;
      step.may_be_uniform = max_degree <= 1;
      step.first_target = static_cast<std::uint32_t>(uniform_targets_.size());
      for (const auto& [pos, copies] : arrivals) {
        const std::uint32_t k = degrees[pos];
        log_factorials_ += log_factorial(copies);
        if (step.may_be_uniform) {
          uniform_targets_.push_back({k, copies});
        } else {
          if (k >= copies_by_degree_.size()) copies_by_degree_.resize(k + 1, 0.0);
          copies_by_degree_[k] += copies;
        }
      }
      step.end_target = static_cast<std::uint32_t>(uniform_targets_.size());
      steps_.push_back(step);
      total_copies_ += m;
    }
    // Post-arrival bookkeeping; `degrees` still holds the pre-arrival state.
    for (const auto& [pos, copies] : arrivals) {
      if (degrees[pos] == 0) --zero_degree;
      max_degree = std::max(max_degree, degrees[pos] + copies);
    }
    if (m == 0) ++zero_degree;
    max_degree = std::max(max_degree, m);
    degree_sum += 2.0 * m;
  });
}

double NetworkLikelihood::log_prob(const ModelParams& params) const {
  params.validate();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double lambda = params.lambda;
  double total = -lambda * static_cast<double>(num_steps_) +
                 static_cast<double>(total_copies_) * std::log(lambda) -
                 log_factorials_;
  for (const auto& step : steps_) {
    const double weight = step.degree_sum +
                          params.a * (step.t - step.zero_degree) +
                          params.b * step.zero_degree;
    if (step.may_be_uniform && weight == 0.0) {
      total -= step.m * std::log(static_cast<double>(step.t));
      continue;
    }
    total -= step.m * std::log(weight);
    for (std::uint32_t i = step.first_target; i < step.end_target; ++i) {
      const auto& target = uniform_targets_[i];
      const double r = params.attachment_weight(target.degree);
      if (!(r > 0.0)) return kNegInf;
      total += target.copies * std::log(r);
    }
  }
  for (std::size_t k = 0; k < copies_by_degree_.size(); ++k) {
    if (copies_by_degree_[k] == 0.0) continue;
    const double r = params.attachment_weight(k);
    if (!(r > 0.0)) return kNegInf;
    total += copies_by_degree_[k] * std::log(r);
  }
  return total;
}

double log_prob_network(const MultiGraph& g, const ModelParams& params,
                        const Permutation& sigma) {
  return NetworkLikelihood(g, sigma).log_prob(params);
}

Permutation initial_arrival_order(const MultiGraph& g) {
  const std::size_t n = g.num_nodes();
  // Max-heap on (degree, -label).
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  std::priority_queue<Entry> frontier;
  std::vector<NodeId> by_degree(n);
  for (std::size_t i = 0; i < n; ++i) by_degree[i] = static_cast<NodeId>(i);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](NodeId x, NodeId y) {
    return g.degree(x) > g.degree(y);
  });
  std::vector<bool> placed(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  std::size_t next_root = 0;
  while (order.size() < n) {
    if (frontier.empty()) {
      while (placed[by_degree[next_root]]) ++next_root;
      const NodeId root = by_degree[next_root];
      frontier.emplace(g.degree(root), -static_cast<std::int64_t>(root));
    }
    const NodeId v = static_cast<NodeId>(-frontier.top().second);
    frontier.pop();
    if (placed[v]) continue;
    placed[v] = true;
    order.push_back(v);
    for (const auto& [w, copies] : g.neighbors(v)) {
      if (!placed[w]) frontier.emplace(g.degree(w), -static_cast<std::int64_t>(w));
    }
  }
  return Permutation::FromArrivalOrder(std::move(order));
}

}  // namespace pgnet
