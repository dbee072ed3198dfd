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

#include "pgnet/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "json.hpp"
#include "pgnet/error.hpp"
#include "pgnet/estimate.hpp"
#include "pgnet/theory.hpp"

namespace pgnet::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) != nullptr) return kExitUsage;
  if (dynamic_cast<const IoError*>(&e) != nullptr) return kExitIo;
  if (dynamic_cast<const fs::filesystem_error*>(&e) != nullptr) return kExitIo;
  if (dynamic_cast<const NumericError*>(&e) != nullptr) return kExitNumeric;
  if (dynamic_cast<const McmcError*>(&e) != nullptr) return kExitNumeric;
  return 1;
}

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string() + ": " +
                  ec.message());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string numbered(const char* stem, std::size_t i, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%05zu.%s", stem, i, ext);
  return buf;
}

json params_json(const ModelParams& p) {
  return json{{"a", p.a}, {"b", p.b}, {"lambda", p.lambda}};
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void cmd_generate(const CampaignSpec& spec, const fs::path& out_dir,
                  std::ostream& log) {
  spec.validate();
  ensure_dir(out_dir);
  const auto results = run_campaign(spec, [&](std::size_t i, const MultiGraph& g) {
    write_graph_file(out_dir / numbered("graph", i, "txt"), g);
  });
  for (const auto& r : results) {
    json fit;
    if (r.fit) {
      fit = json::parse(to_json(*r.fit));
    } else {
      std::uint64_t tail = 0;
      for (std::size_t k = spec.k_min; k <= r.hist.max_degree(); ++k) {
        tail += r.hist.count(k);
      }
      fit = json{{"gamma_hat", nullptr},
                 {"k_min", spec.k_min},
                 {"n_tail", tail},
                 {"error", r.fit_error}};
    }
    write_text(out_dir / numbered("fit", r.index, "json"), fit.dump() + "\n");
  }
  const auto s = summarize(results, spec.k_min);
  json summary{{"model", to_string(spec.model)},
               {"n_final", spec.n_final},
               {"n_sim", spec.n_sim},
               {"k_min", spec.k_min},
               {"master_seed", spec.master_seed},
               {"seed_nodes", spec.seed_nodes},
               {"mean_degree", s.mean_degree},
               {"n_fit", s.n_fit},
               {"mean_gamma_hat", s.n_fit > 0 ? json(s.mean_gamma) : json(nullptr)},
               {"sd_gamma_hat", s.n_fit > 0 ? json(s.sd_gamma) : json(nullptr)},
               {"gamma_avg", optional_number(s.gamma_avg)},
               {"predicted_gamma", spec.predicted_gamma()}};
  if (spec.model == GrowthModel::kBa) {
    summary["m"] = spec.m;
  } else {
    summary["params"] = params_json(spec.params);
  }
  write_text(out_dir / "summary.json", summary.dump(2) + "\n");
  log << "wrote " << spec.n_sim << " " << to_string(spec.model)
      << " networks to " << out_dir.string() << "\n";
}

std::vector<Table1Row> cmd_table1(const Table1Options& options, std::ostream& out) {
  const auto rows = run_table1(options.n_sim, options.n_final, options.master_seed,
                               options.k_min, options.threads);
  write_table1_text(out, rows);
  if (options.out_dir) {
    ensure_dir(*options.out_dir);
    std::ofstream csv(*options.out_dir / "table1.csv", std::ios::binary);
    if (!csv) throw IoError("cannot write table1.csv");
    write_table1_csv(csv, rows);
  }
  return rows;
}

void cmd_theory(const TheoryOptions& options, std::ostream& out) {
  options.params.validate();
  const auto prediction = predict(options.params);
  json j{{"p0", prediction.p0},
         {"gamma", prediction.gamma},
         {"mean_degree", prediction.mean_degree}};
  out << j.dump(2) << "\n";
  if (options.master_csv) {
    const auto dist = evolve_master_equation(
        options.params, degree_histogram(make_seed(options.seed_nodes)),
        options.t_final, options.k_max);
    std::ofstream csv(*options.master_csv, std::ios::binary);
    if (!csv) throw IoError("cannot write " + options.master_csv->string());
    write_distribution_csv(csv, dist, &options.params);
  }
}

void cmd_fit(const FitOptions& options, std::ostream& out) {
  const MultiGraph g = read_graph_file(options.graph);
  const McmcChain chain = mcmc_theta(g, options.config);
  ensure_dir(options.out_dir);
  {
    std::ofstream jsonl(options.out_dir / "chain.jsonl", std::ios::binary);
    if (!jsonl) throw IoError("cannot write chain.jsonl");
    write_chain_jsonl(jsonl, chain);
  }
  const std::string summary = chain_summary_json(chain);
  write_text(options.out_dir / "summary.json", summary + "\n");
  out << summary << "\n";
}

void cmd_distplot(const DistplotOptions& options, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& input : options.inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }
  if (files.empty()) throw InvalidArgument("distplot needs at least one graph");

  std::vector<DegreeHistogram> hists;
  hists.reserve(files.size());
  for (const auto& f : files) hists.push_back(degree_histogram(read_graph_file(f)));
  const ExpectedDistribution dist = average_distribution(hists);
  const FitResult fit = estimate_gamma_ml(dist, options.k_min);
  const double anchor =
      options.k_min < dist.values.size() ? dist.values[options.k_min] : 0.0;

  out << "# graphs=" << files.size() << " N=" << dist.t << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "# gamma_hat=" << fit.gamma_hat << " k_min=" << fit.k_min
      << " n_tail=" << fit.n_tail << '\n';
  out << "# line: p_line(k) = " << anchor << " * (k / " << fit.k_min
      << ")^(-gamma_hat)\n";
  out << "k,p_k,p_line\n";
  for (std::size_t k = 1; k < dist.values.size(); ++k) {
    if (dist.values[k] <= 0.0) continue;
    const double line =
        anchor * std::pow(static_cast<double>(k) / fit.k_min, -fit.gamma_hat);
    out << k << ',' << dist.values[k] << ',' << line << '\n';
  }
}

}  // namespace pgnet::cli
