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

#include "pgnet/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "pgnet/error.hpp"
#include "pgnet/generate.hpp"
#include "pgnet/theory.hpp"

namespace pgnet {

GrowthModel parse_growth_model(std::string_view name) {
  if (name == "pg") return GrowthModel::kPg;
  if (name == "ba") return GrowthModel::kBa;
  if (name == "pg-binomial") return GrowthModel::kPgBinomial;
  throw InvalidArgument("unknown model '" + std::string(name) +
                        "' (expected pg, ba or pg-binomial)");
}

std::string to_string(GrowthModel model) {
  switch (model) {
    case GrowthModel::kPg: return "pg";
    case GrowthModel::kBa: return "ba";
    case GrowthModel::kPgBinomial: return "pg-binomial";
  }
  return "?";
}

MultiGraph make_seed(std::size_t seed_nodes) {
  if (seed_nodes == 1) return MultiGraph(1);
  if (seed_nodes == 2) return MultiGraph::ConnectedPair();
  throw InvalidArgument("seed must have 1 or 2 nodes, got " +
                        std::to_string(seed_nodes));
}

void CampaignSpec::validate() const {
  if (n_sim < 1) throw InvalidArgument("n_sim must be >= 1");
  if (n_final < 2) throw InvalidArgument("n_final must be >= 2");
  if (k_min < 1) throw InvalidArgument("k_min must be >= 1");
  if (n_final < seed_nodes) throw InvalidArgument("n_final is below the seed size");
  make_seed(seed_nodes);
  if (model == GrowthModel::kBa) {
    if (m < 1 || m > seed_nodes) {
      throw InvalidArgument("BA needs 1 <= m <= seed size");
    }
  } else {
    params.validate();
  }
}

double CampaignSpec::predicted_gamma() const {
  if (model == GrowthModel::kBa) return 3.0;
  return pgnet::predicted_gamma(params);
}

std::string CampaignSpec::describe() const {
  std::ostringstream os;
  if (model == GrowthModel::kBa) {
    os << "m=" << m;
  } else {
    os << "theta=(" << params.a << "," << params.b << "," << params.lambda << ")";
  }
  return os.str();
}

MultiGraph generate_replicate(const CampaignSpec& spec, std::size_t index) {
  const RngSpec rng{spec.master_seed, spec.stream_base + index};
  MultiGraph seed = make_seed(spec.seed_nodes);
  switch (spec.model) {
    case GrowthModel::kPg:
      return generate_pg(std::move(seed), spec.params, spec.n_final, rng);
    case GrowthModel::kBa:
      return generate_ba(std::move(seed), spec.m, spec.n_final, rng);
    case GrowthModel::kPgBinomial:
      return generate_pg_binomial(std::move(seed), spec.params, spec.n_final, rng);
  }
  throw InvalidArgument("unknown model");
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<ReplicateResult> run_campaign(
    const CampaignSpec& spec,
    const std::function<void(std::size_t, const MultiGraph&)>& on_graph) {
  spec.validate();
  std::vector<ReplicateResult> results(spec.n_sim);
  parallel_for(spec.n_sim, spec.threads, [&](std::size_t i) {
    const MultiGraph g = generate_replicate(spec, i);
    if (on_graph) on_graph(i, g);
    ReplicateResult& r = results[i];
    r.index = i;
    r.hist = degree_histogram(g);
    r.mean_degree = g.mean_degree();
    try {
      r.fit = estimate_gamma_ml(r.hist, spec.k_min);
    } catch (const NumericError& e) {
      r.fit_error = e.what();
    }
  });
  return results;
}

CampaignSummary summarize(std::span<const ReplicateResult> results,
                          std::uint32_t k_min) {
  CampaignSummary s;
  s.n_sim = results.size();
  if (results.empty()) return s;
  std::vector<DegreeHistogram> hists;
  hists.reserve(results.size());
  double gamma_sum = 0.0;
  for (const auto& r : results) {
    s.mean_degree += r.mean_degree;
    hists.push_back(r.hist);
    if (r.fit) {
      ++s.n_fit;
      gamma_sum += r.fit->gamma_hat;
    }
  }
  s.mean_degree /= static_cast<double>(results.size());
  if (s.n_fit > 0) {
    s.mean_gamma = gamma_sum / static_cast<double>(s.n_fit);
    double ss = 0.0;
    for (const auto& r : results) {
      if (!r.fit) continue;
      const double d = r.fit->gamma_hat - s.mean_gamma;
      ss += d * d;
    }
    s.sd_gamma = s.n_fit > 1 ? std::sqrt(ss / static_cast<double>(s.n_fit - 1)) : 0.0;
  }
  try {
    s.gamma_avg = estimate_gamma_ml(average_distribution(hists), k_min).gamma_hat;
  } catch (const NumericError&) {
    s.gamma_avg.reset();
  }
  return s;
}

std::vector<CampaignSpec> table1_specs(std::size_t n_sim, std::size_t n_final,
                                       std::uint64_t master_seed,
                                       std::uint32_t k_min, unsigned threads) {
  std::vector<CampaignSpec> specs(5);
  specs[0].model = GrowthModel::kBa;
  specs[0].m = 1;
  specs[0].params = {0.0, 0.0, 1.0};
  specs[1].params = {0.0, 0.0, 1.0};
  specs[2].params = {-0.9, 0.1, 1.0};
  specs[3].params = {-0.9, 0.1, 3.0};
  specs[4].params = {0.5, 0.5, 3.0};
  for (std::size_t row = 0; row < specs.size(); ++row) {
    auto& s = specs[row];
    s.n_final = n_final;
    s.n_sim = n_sim;
    s.k_min = k_min;
    s.master_seed = master_seed;
    s.stream_base = static_cast<std::uint64_t>(row) << 32;
    s.seed_nodes = 2;
    s.threads = threads;
  }
  return specs;
}

std::vector<Table1Row> run_table1(std::size_t n_sim, std::size_t n_final,
                                  std::uint64_t master_seed,
                                  std::uint32_t k_min, unsigned threads) {
  std::vector<Table1Row> rows;
  for (const auto& spec : table1_specs(n_sim, n_final, master_seed, k_min, threads)) {
    Table1Row row;
    row.model = spec.model == GrowthModel::kBa ? "BA" : "PG";
    row.parameters = spec.describe();
    row.spec = spec;
    row.predicted_gamma = spec.predicted_gamma();
    const auto results = run_campaign(spec);
    row.summary = summarize(results, k_min);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void write_table1_text(std::ostream& out, std::span<const Table1Row> rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-22s %8s %18s %10s %8s\n", "Model",
                "Parameters", "Mean k", "Mean gamma +- sd", "gamma_avg", "gamma");
  out << line;
  for (const auto& r : rows) {
    const auto& s = r.summary;
    const std::string fit = fixed(s.mean_gamma, 2) + " +- " + fixed(s.sd_gamma, 2);
    std::snprintf(line, sizeof line, "%-6s %-22s %8s %18s %10s %8s\n",
                  r.model.c_str(), r.parameters.c_str(),
                  fixed(s.mean_degree, 2).c_str(), fit.c_str(),
                  s.gamma_avg ? fixed(*s.gamma_avg, 2).c_str() : "n/a",
                  fixed(r.predicted_gamma, 2).c_str());
    out << line;
  }
}

void write_table1_csv(std::ostream& out, std::span<const Table1Row> rows) {
  out << "model,parameters,n_sim,n_final,mean_k,mean_gamma_hat,sd_gamma_hat,"
         "gamma_avg,predicted_gamma\n";
  for (const auto& r : rows) {
    const auto& s = r.summary;
    out << r.model << ",\"" << r.parameters << "\"," << s.n_sim << ','
        << r.spec.n_final << ',' << fixed(s.mean_degree, 6) << ','
        << fixed(s.mean_gamma, 6) << ',' << fixed(s.sd_gamma, 6) << ','
        << (s.gamma_avg ? fixed(*s.gamma_avg, 6) : std::string()) << ','
        << fixed(r.predicted_gamma, 6) << '\n';
  }
}

}  // namespace pgnet
