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

#ifndef PGNET_ESTIMATE_HPP_
#define PGNET_ESTIMATE_HPP_

#include <cstdint>
#include <span>
#include <string>

#include "pgnet/graph.hpp"
#include "pgnet/theory.hpp"

namespace pgnet {

inline constexpr std::uint32_t kDefaultKMin = 10;

struct FitResult {
  double gamma_hat = 0.0;
  std::uint32_t k_min = kDefaultKMin;
  std::uint64_t n_tail = 0;
};

// Discrete power-law ML estimate over the tail k >= k_min:
//   gamma_hat = 1 + sum n(k) / sum n(k) ln(k / k_min).
// Throws NumericError when the tail is empty or every tail degree equals
// k_min.
FitResult estimate_gamma_ml(const DegreeHistogram& hist, std::uint32_t k_min);

// Same estimator over a normalised distribution; the values are scaled back
// to counts with dist.t, which only affects n_tail.
FitResult estimate_gamma_ml(const ExpectedDistribution& dist,
                            std::uint32_t k_min);

// Estimator on raw per-degree weights.
double estimate_gamma_ml(std::span<const double> weight_by_degree,
                         std::uint32_t k_min);

// Replicate mean of p(k) = n(k) / N. All histograms must share N.
ExpectedDistribution average_distribution(std::span<const DegreeHistogram> hists);

// Sample variance (n - 1 denominator) of p(k) across replicates; 0 for a
// single replicate.
double empirical_variance(std::span<const DegreeHistogram> hists, std::size_t k);

std::string to_json(const FitResult& fit);

}  // namespace pgnet

#endif  // PGNET_ESTIMATE_HPP_
