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

#include "pgnet/generate.hpp"

#include <algorithm>
#include <string>

#include "pgnet/error.hpp"

namespace pgnet {

std::vector<double> attachment_weights(const MultiGraph& g,
                                       const ModelParams& params) {
  params.validate();
  std::vector<double> weights;
  weights.reserve(g.num_nodes());
  for (auto k : g.degrees()) weights.push_back(params.attachment_weight(k));
  return weights;
}

AttachmentSampler::AttachmentSampler(const MultiGraph& g,
                                     const ModelParams& params)
    : params_(params) {
  params_.validate();
  degree_.reserve(g.num_nodes());
  slot_.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    degree_.push_back(0);
    slot_.push_back(0);
    insert(v, g.degree(v));
  }
}

void AttachmentSampler::insert(NodeId v, std::uint32_t degree) {
  if (degree >= classes_.size()) classes_.resize(degree + 1);
  degree_[v] = degree;
  slot_[v] = static_cast<std::uint32_t>(classes_[degree].size());
  classes_[degree].push_back(v);
}

void AttachmentSampler::erase(NodeId v) {
  auto& cls = classes_[degree_[v]];
  const NodeId moved = cls.back();
  cls[slot_[v]] = moved;
  slot_[moved] = slot_[v];
  cls.pop_back();
}

void AttachmentSampler::add_node() {
  degree_.push_back(0);
  slot_.push_back(0);
  insert(static_cast<NodeId>(degree_.size() - 1), 0);
}

void AttachmentSampler::set_degree(NodeId v, std::uint32_t degree) {
  if (degree_[v] == degree) return;
  erase(v);
  insert(v, degree);
}

double AttachmentSampler::total_weight() const {
  double total = 0.0;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    total += static_cast<double>(classes_[k].size()) *
             params_.attachment_weight(k);
  }
  return total;
}

double AttachmentSampler::prepare() {
  const std::size_t n_classes = classes_.size();
  cumulative_.resize(n_classes);
  double total = 0.0;
  for (std::size_t k = 0; k < n_classes; ++k) {
    total += static_cast<double>(classes_[k].size()) *
             params_.attachment_weight(k);
    cumulative_[k] = total;
  }
  if (total == 0.0) {
    // Every candidate has zero weight: uniform fallback.
    for (std::size_t k = 0; k < n_classes; ++k) {
      total += static_cast<double>(classes_[k].size());
      cumulative_[k] = total;
    }
  }
  if (total == 0.0) throw InvalidArgument("no candidate nodes to attach to");
  return total;
}

NodeId AttachmentSampler::pick(double total, Rng& rng) const {
  const double x = uniform01(rng) * total;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  if (it == cumulative_.end()) {
    // x rounded up to total; take the last class that carries weight.
    it = std::lower_bound(cumulative_.begin(), cumulative_.end(), total);
  }
  const auto& cls = classes_[static_cast<std::size_t>(it - cumulative_.begin())];
  return cls[uniform_index(rng, cls.size())];
}

std::vector<NodeId> AttachmentSampler::draw_with_replacement(std::uint64_t m,
                                                             Rng& rng) {
  std::vector<NodeId> out;
  out.reserve(m);
  if (m == 0) return out;
  const double total = prepare();
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(pick(total, rng));
  return out;
}

std::vector<NodeId> AttachmentSampler::draw_without_replacement(
    std::uint64_t m, Rng& rng) {
  if (m > degree_.size()) {
    throw InvalidArgument("cannot draw " + std::to_string(m) +
                          " distinct targets from " +
                          std::to_string(degree_.size()) + " nodes");
  }
  std::vector<NodeId> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const NodeId v = pick(prepare(), rng);
    erase(v);
    out.push_back(v);
  }
  for (NodeId v : out) insert(v, degree_[v]);
  return out;
}

namespace {

std::vector<std::pair<NodeId, std::uint32_t>> tally(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<NodeId, std::uint32_t>> out;
  for (NodeId v : nodes) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

// Appends a node wired to `targets` and keeps the sampler in sync.
GrowthStep attach(MultiGraph& g, AttachmentSampler& sampler,
                  std::vector<NodeId> targets) {
  GrowthStep step;
  step.m = targets.size();
  step.targets = tally(std::move(targets));
  const NodeId v = g.add_node();
  sampler.add_node();
  for (const auto& [target, copies] : step.targets) {
    g.add_edge(v, target, copies);
    sampler.set_degree(target, g.degree(target));
  }
  sampler.set_degree(v, g.degree(v));
  return step;
}

void check_growth_args(const MultiGraph& seed, std::size_t n_final) {
  if (seed.num_nodes() == 0) throw InvalidArgument("seed graph has no nodes");
  if (n_final < seed.num_nodes()) {
    throw InvalidArgument("n_final (" + std::to_string(n_final) +
                          ") is smaller than the seed (" +
                          std::to_string(seed.num_nodes()) + " nodes)");
  }
}

}  // namespace

GrowthStep attach_new_node(MultiGraph& g, const ModelParams& params,
                           std::uint64_t m, Rng& rng) {
  if (g.num_nodes() == 0) throw InvalidArgument("cannot grow an empty graph");
  AttachmentSampler sampler(g, params);
  return attach(g, sampler, sampler.draw_with_replacement(m, rng));
}

GrowthStep pg_step(MultiGraph& g, const ModelParams& params, Rng& rng) {
  params.validate();
  return attach_new_node(g, params, sample_poisson(rng, params.lambda), rng);
}

MultiGraph generate_pg(MultiGraph seed, const ModelParams& params,
                       std::size_t n_final, const RngSpec& rng_spec) {
  params.validate();
  check_growth_args(seed, n_final);
  Rng rng = make_rng(rng_spec);
  AttachmentSampler sampler(seed, params);
  while (seed.num_nodes() < n_final) {
    const auto m = sample_poisson(rng, params.lambda);
    attach(seed, sampler, sampler.draw_with_replacement(m, rng));
  }
  return seed;
}

bool is_connected(const MultiGraph& g) {
  if (g.num_nodes() == 0) return true;
  std::vector<bool> seen(g.num_nodes(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const auto& [w, copies] : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.num_nodes();
}

MultiGraph generate_ba(MultiGraph seed, std::uint32_t m, std::size_t n_final,
                       const RngSpec& rng_spec) {
  check_growth_args(seed, n_final);
  if (m < 1 || m > seed.num_nodes()) {
    throw InvalidArgument("BA needs 1 <= m <= seed size, got m=" +
                          std::to_string(m));
  }
  if (!is_connected(seed)) throw InvalidArgument("BA seed must be connected");
  Rng rng = make_rng(rng_spec);
  AttachmentSampler sampler(seed, ModelParams{0.0, 0.0, static_cast<double>(m)});
  while (seed.num_nodes() < n_final) {
    attach(seed, sampler, sampler.draw_without_replacement(m, rng));
  }
  return seed;
}

MultiGraph generate_pg_binomial(MultiGraph seed, const ModelParams& params,
                                std::size_t n_final, const RngSpec& rng_spec) {
  params.validate();
  check_growth_args(seed, n_final);
  if (params.lambda > static_cast<double>(seed.num_nodes())) {
    throw InvalidArgument("binomial growth needs lambda <= seed size (" +
                          std::to_string(seed.num_nodes()) + ")");
  }
  Rng rng = make_rng(rng_spec);
  AttachmentSampler sampler(seed, params);
  while (seed.num_nodes() < n_final) {
    const auto t = seed.num_nodes();
    const auto m =
        sample_binomial(rng, t, params.lambda / static_cast<double>(t));
    attach(seed, sampler, sampler.draw_without_replacement(m, rng));
  }
  return seed;
}

}  // namespace pgnet
