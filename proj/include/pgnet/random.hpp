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

#ifndef PGNET_RANDOM_HPP_
#define PGNET_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace pgnet {

using Rng = std::mt19937_64;

// Identifies one reproducible random stream: the same (master_seed,
// stream_id) always yields the same engine state.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

Rng make_rng(const RngSpec& spec);

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// Unlike std::uniform_real_distribution this is identical on every standard
// library.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

double standard_normal(Rng& rng);

// Exact inversion by sequential search for mean <= 30.
std::uint64_t sample_poisson(Rng& rng, double mean);

// Exact inversion by sequential search when n*p <= 30.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p);

}  // namespace pgnet

#endif  // PGNET_RANDOM_HPP_
