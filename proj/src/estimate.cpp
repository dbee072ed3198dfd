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

#include "pgnet/estimate.hpp"

#include <cmath>
#include <vector>

#include "json.hpp"

#include "pgnet/error.hpp"

namespace pgnet {

double estimate_gamma_ml(std::span<const double> weight_by_degree,
                         std::uint32_t k_min) {
  if (k_min < 1) throw InvalidArgument("k_min must be >= 1");
  double tail = 0.0;
  double log_sum = 0.0;
  for (std::size_t k = k_min; k < weight_by_degree.size(); ++k) {
    const double n = weight_by_degree[k];
    if (n == 0.0) continue;
    tail += n;
    log_sum += n * std::log(static_cast<double>(k) / static_cast<double>(k_min));
  }
  if (!(tail > 0.0)) {
    throw NumericError("no degrees >= k_min=" + std::to_string(k_min));
  }
  if (!(log_sum > 0.0)) {
    throw NumericError("degenerate tail: every degree >= k_min equals k_min=" +
                       std::to_string(k_min));
  }
  return 1.0 + tail / log_sum;
}

FitResult estimate_gamma_ml(const DegreeHistogram& hist, std::uint32_t k_min) {
  std::vector<double> weights(hist.counts().begin(), hist.counts().end());
  FitResult fit;
  fit.gamma_hat = estimate_gamma_ml(weights, k_min);
  fit.k_min = k_min;
  for (std::size_t k = k_min; k < weights.size(); ++k) fit.n_tail += hist.count(k);
  return fit;
}

FitResult estimate_gamma_ml(const ExpectedDistribution& dist,
                            std::uint32_t k_min) {
  FitResult fit;
  fit.gamma_hat = estimate_gamma_ml(dist.values, k_min);
  fit.k_min = k_min;
  double tail = 0.0;
  for (std::size_t k = k_min; k < dist.values.size(); ++k) tail += dist.values[k];
  fit.n_tail = static_cast<std::uint64_t>(
      std::llround(tail * static_cast<double>(dist.t)));
  return fit;
}

ExpectedDistribution average_distribution(
    std::span<const DegreeHistogram> hists) {
  if (hists.empty()) throw InvalidArgument("no histograms to average");
  const std::uint64_t total = hists.front().total();
  if (total == 0) throw InvalidArgument("histograms are empty");
  std::size_t width = 0;
  for (const auto& h : hists) {
    if (h.total() != total) {
      throw InvalidArgument("histograms have different node counts (" +
                            std::to_string(total) + " vs " +
                            std::to_string(h.total()) + ")");
    }
    width = std::max(width, h.counts().size());
  }
  ExpectedDistribution out;
  out.t = total;
  out.values.assign(width, 0.0);
  // Sum counts first so the result does not depend on replicate order.
  std::vector<std::uint64_t> sums(width, 0);
  for (const auto& h : hists) {
    for (std::size_t k = 0; k < h.counts().size(); ++k) sums[k] += h.count(k);
  }
  const double denom =
      static_cast<double>(total) * static_cast<double>(hists.size());
  for (std::size_t k = 0; k < width; ++k) {
    out.values[k] = static_cast<double>(sums[k]) / denom;
  }
  return out;
}

double empirical_variance(std::span<const DegreeHistogram> hists, std::size_t k) {
  if (hists.empty()) throw InvalidArgument("no histograms");
  if (hists.size() == 1) return 0.0;
  double mean = 0.0;
  for (const auto& h : hists) mean += h.p(k);
  mean /= static_cast<double>(hists.size());
  double ss = 0.0;
  for (const auto& h : hists) {
    const double d = h.p(k) - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(hists.size() - 1);
}

std::string to_json(const FitResult& fit) {
  nlohmann::json j{{"gamma_hat", fit.gamma_hat},
                   {"k_min", fit.k_min},
                   {"n_tail", fit.n_tail}};
  return j.dump();
}

}  // namespace pgnet
