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

#include "pgnet/theory.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "pgnet/error.hpp"

namespace pgnet {

namespace {

// Below this |b - a| the quadratic coefficient is treated as zero.
constexpr double kLinearThreshold = 1e-9;
// Poisson kernel terms smaller than this fraction of the source mass are
// dropped once past the mode.
constexpr double kKernelCutoff = 1e-16;

}  // namespace

double ExpectedDistribution::mass() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

double ExpectedDistribution::mean() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += static_cast<double>(k) * values[k];
  }
  return sum;
}

double p0_drift(const ModelParams& params, double x) {
  const auto& [a, b, lambda] = params;
  return -x * (1.0 + lambda * b / (2.0 * lambda + a + (b - a) * x)) +
         std::exp(-lambda);
}

double p0_drift_derivative(const ModelParams& params, double x) {
  const auto& [a, b, lambda] = params;
  const double denom = 2.0 * lambda + a + (b - a) * x;
  return -(1.0 + lambda * b * (2.0 * lambda + a) / (denom * denom));
}

double solve_p0(const ModelParams& params) {
  params.validate();
  const auto& [a, b, lambda] = params;
  const double e = std::exp(-lambda);
  const double quad = b - a;
  const double lin = 2.0 * lambda + a + lambda * b - quad * e;
  const double constant = -(2.0 * lambda + a) * e;

  double root;
  if (std::fabs(quad) < kLinearThreshold) {
    root = -constant / lin;
  } else {
    const double disc = lin * lin - 4.0 * quad * constant;
    if (disc < 0.0) {
      throw NumericError("p(0) quadratic has no real root for " +
                         params.to_string());
    }
    const double sq = std::sqrt(disc);
    // Root (-lin + sq) / (2 quad), evaluated without cancellation.
    root = lin >= 0.0 ? (2.0 * constant) / (-lin - sq)
                      : (-lin + sq) / (2.0 * quad);
  }
  if (!(root > 0.0 && root < 1.0)) {
    throw NumericError("p(0) root " + std::to_string(root) +
                       " outside (0, 1) for " + params.to_string());
  }
  if (!(2.0 * lambda + a + (b - a) * root > 0.0) ||
      !(p0_drift_derivative(params, root) < 0.0)) {
    throw NumericError("p(0) root is not stable for " + params.to_string());
  }
  return root;
}

double predicted_gamma(const ModelParams& params) {
  params.validate();
  if (params.a == params.b) return 3.0 + params.a / params.lambda;
  return 3.0 +
         (params.a + (params.b - params.a) * solve_p0(params)) / params.lambda;
}

TheoryPrediction predict(const ModelParams& params) {
  return {solve_p0(params), predicted_gamma(params), 2.0 * params.lambda};
}

double tail_ratio(const ModelParams& params, std::uint64_t k) {
  const double shifted = static_cast<double>(k) + params.a - 1.0;
  if (!(shifted > 0.0)) {
    throw InvalidArgument("tail_ratio needs k + a - 1 > 0, got k=" +
                          std::to_string(k));
  }
  return shifted / (shifted + predicted_gamma(params));
}

ExpectedDistribution evolve_master_equation(const ModelParams& params,
                                            const DegreeHistogram& seed,
                                            std::uint64_t t_final,
                                            std::uint64_t k_max) {
  params.validate();
  if (seed.total() == 0) throw InvalidArgument("seed histogram is empty");
  if (t_final < seed.total()) {
    throw InvalidArgument("t_final is smaller than the seed");
  }
  if (seed.max_degree() > k_max) {
    throw InvalidArgument("seed has degrees above k_max");
  }
  const std::size_t width = static_cast<std::size_t>(k_max) + 1;
  std::vector<double> counts(width, 0.0);
  for (std::size_t k = 0; k <= seed.max_degree(); ++k) {
    counts[k] = static_cast<double>(seed.count(k));
  }

  // Poisson(lambda) pmf of the newcomer's degree.
  std::vector<double> newcomer(width, 0.0);
  {
    double pmf = std::exp(-params.lambda);
    for (std::size_t k = 0; k < width; ++k) {
      newcomer[k] = pmf;
      pmf *= params.lambda / static_cast<double>(k + 1);
    }
  }

  std::vector<double> next(width);
  std::size_t top = seed.max_degree();  // highest index with non-zero mass
  std::uint64_t t = seed.total();
  while (t < t_final) {
    double total_weight = 0.0;
    for (std::size_t k = 0; k <= top; ++k) {
      total_weight += counts[k] * params.attachment_weight(k);
    }
    const bool uniform = !(total_weight > 0.0);
    const double scale = uniform ? params.lambda / static_cast<double>(t)
                                 : params.lambda / total_weight;

    std::fill(next.begin(), next.end(), 0.0);
    std::size_t next_top = 0;
    for (std::size_t k = 0; k <= top; ++k) {
      const double n = counts[k];
      if (n == 0.0) continue;
      const double mu = uniform ? scale : scale * params.attachment_weight(k);
      double term = n * std::exp(-mu);
      for (std::size_t s = 0; k + s < width; ++s) {
        next[k + s] += term;
        if (term > 0.0) next_top = std::max(next_top, k + s);
        term *= mu / static_cast<double>(s + 1);
        if (static_cast<double>(s) >= mu && term < kKernelCutoff * n) break;
      }
    }
    for (std::size_t k = 0; k < width; ++k) {
      next[k] += newcomer[k];
      if (newcomer[k] > 0.0) next_top = std::max(next_top, k);
    }
    for (std::size_t k = 0; k <= next_top; ++k) {
      if (!std::isfinite(next[k])) {
        throw NumericError("non-finite expected count at t=" +
                           std::to_string(t + 1) + ", k=" + std::to_string(k));
      }
    }
    counts.swap(next);
    top = next_top;
    ++t;
  }

  ExpectedDistribution out;
  out.t = t;
  out.values.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    out.values[k] = counts[k] / static_cast<double>(t);
  }
  return out;
}

void write_distribution_csv(std::ostream& out, const ExpectedDistribution& dist,
                            const ModelParams* params) {
  if (params != nullptr) {
    out << "# a=" << params->a << " b=" << params->b
        << " lambda=" << params->lambda << '\n';
  }
  out << "# t=" << dist.t << '\n';
  out << "k,p_k\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t k = 0; k < dist.values.size(); ++k) {
    out << k << ',' << dist.values[k] << '\n';
  }
}

}  // namespace pgnet
