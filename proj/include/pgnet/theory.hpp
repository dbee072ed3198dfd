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

#ifndef PGNET_THEORY_HPP_
#define PGNET_THEORY_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pgnet/graph.hpp"
#include "pgnet/model.hpp"

namespace pgnet {

struct TheoryPrediction {
  double p0 = 0.0;           // limiting fraction of degree-0 nodes
  double gamma = 0.0;        // power-law exponent
  double mean_degree = 0.0;  // 2 * lambda
};

// Expected degree distribution p(k), k = 0..values.size()-1, after the
// network has grown to `t` nodes.
struct ExpectedDistribution {
  std::vector<double> values;
  std::uint64_t t = 0;

  double mass() const;
  double mean() const;
};

// Stationary degree-0 fraction: the root in (0, 1) of
//   (b-a) x^2 + (2l + a + l b - (b-a) e^-l) x - (2l + a) e^-l = 0
// at which the drift f(x) is decreasing. The equation is linear when a == b.
// Throws NumericError if no admissible stable root exists.
double solve_p0(const ModelParams& params);

// Drift f(x) of the degree-0 fraction and its derivative.
double p0_drift(const ModelParams& params, double x);
double p0_drift_derivative(const ModelParams& params, double x);

// gamma = 3 + (a + (b-a) p0) / lambda; 3 + a / lambda when a == b.
double predicted_gamma(const ModelParams& params);

TheoryPrediction predict(const ModelParams& params);

// Asymptotic ratio p(k) / p(k-1) = (k+a-1) / (k+a-1+gamma).
// Throws InvalidArgument when k + a - 1 <= 0.
double tail_ratio(const ModelParams& params, std::uint64_t k);

// Iterates the expected-count recursion
//   E n_{t+1}(k) = sum_s E n_t(k-s) Pois(s; lambda q_t(k-s)) + Pois(k; lambda)
// from `seed` until t_final nodes, with q_t(j) = r(j) / sum_i r(k_i) and the
// denominator evaluated on the current expected counts. Mass pushed beyond
// k_max is dropped; check ExpectedDistribution::mass() against 1.
ExpectedDistribution evolve_master_equation(const ModelParams& params,
                                            const DegreeHistogram& seed,
                                            std::uint64_t t_final,
                                            std::uint64_t k_max);

// "k,p_k" rows after '#' comment lines carrying the parameters and t.
void write_distribution_csv(std::ostream& out, const ExpectedDistribution& dist,
                            const ModelParams* params = nullptr);

}  // namespace pgnet

#endif  // PGNET_THEORY_HPP_
