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

// Command-line front end: generate, table1, theory, fit, distplot.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgnet/commands.hpp"
#include "pgnet/error.hpp"

namespace {

using namespace pgnet;

constexpr std::size_t kPaperScaleNsim = 10000;

// Reads `key = value` lines ('#' comments) and turns them into `--key=value`
// arguments. Boolean keys become bare flags when true.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(line_no) +
                            ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key + "=" + value);
    }
  }
  return args;
}

// Splices config-file arguments in front of the user's so flags given on the
// command line win (options take their last value).
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> user(argv + 1, argv + argc);
  std::vector<std::string> out;
  std::string config;
  for (std::size_t i = 0; i < user.size(); ++i) {
    if (user[i] == "--config" && i + 1 < user.size()) {
      config = user[++i];
    } else if (user[i].rfind("--config=", 0) == 0) {
      config = user[i].substr(9);
    } else {
      out.push_back(user[i]);
    }
  }
  if (config.empty() || out.empty()) return out;
  auto extra = config_args(config);
  out.insert(out.begin() + 1, extra.begin(), extra.end());
  return out;
}

void add_theta_options(CLI::App* cmd, ModelParams& params) {
  cmd->add_option("--a", params.a, "attachment offset a (>= -1)");
  cmd->add_option("--b", params.b, "weight of degree-0 nodes b (>= 0)");
  cmd->add_option("--lambda", params.lambda, "expected edges per new node");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson-growth preferential attachment toolkit"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::string config_unused;
  app.add_option("--config", config_unused, "key=value file; flags override");

  // generate
  CampaignSpec gen;
  std::string gen_model = "pg";
  std::string gen_out = "out";
  bool gen_paper = false;
  auto* generate = app.add_subcommand("generate", "generate replicate networks");
  generate->add_option("--model", gen_model, "pg, ba or pg-binomial");
  add_theta_options(generate, gen.params);
  generate->add_option("--m", gen.m, "BA edges per node");
  generate->add_option("--n", gen.n_final, "final node count");
  generate->add_option("--nsim", gen.n_sim, "number of replicates");
  generate->add_option("--kmin", gen.k_min, "k_min for the exponent fit");
  generate->add_option("--seed", gen.master_seed, "master RNG seed");
  generate->add_option("--seed-nodes", gen.seed_nodes, "seed graph: 1 node or 2 connected");
  generate->add_option("--threads", gen.threads, "worker threads (0 = all cores)");
  generate->add_option("--out", gen_out, "output directory");
  generate->add_flag("--paper-scale", gen_paper, "use 10^4 replicates");

  // table1
  cli::Table1Options t1;
  std::string t1_out;
  bool t1_paper = false;
  auto* table1 = app.add_subcommand("table1", "exponent summary for the five reference settings");
  table1->add_option("--nsim", t1.n_sim, "replicates per row");
  table1->add_option("--n", t1.n_final, "final node count");
  table1->add_option("--kmin", t1.k_min, "k_min for the exponent fit");
  table1->add_option("--seed", t1.master_seed, "master RNG seed");
  table1->add_option("--threads", t1.threads, "worker threads (0 = all cores)");
  table1->add_option("--out", t1_out, "directory for table1.csv");
  table1->add_flag("--paper-scale", t1_paper, "use 10^4 replicates");

  // theory
  cli::TheoryOptions th;
  std::string th_csv;
  auto* theory = app.add_subcommand("theory", "predicted p(0), gamma and mean degree");
  add_theta_options(theory, th.params);
  theory->add_option("--master-csv", th_csv, "write the master-equation distribution here");
  theory->add_option("--t", th.t_final, "network size for the master equation");
  theory->add_option("--kmax", th.k_max, "largest degree tracked");
  theory->add_option("--seed-nodes", th.seed_nodes, "seed graph: 1 node or 2 connected");

  // fit
  cli::FitOptions fit;
  std::string fit_graph;
  std::string fit_out = "fit_out";
  auto& cfg = fit.config;
  auto* fitcmd = app.add_subcommand("fit", "posterior sampling of (a, b, lambda) for a graph");
  fitcmd->add_option("graph", fit_graph, "graph file")->required();
  fitcmd->add_option("--out", fit_out, "output directory");
  fitcmd->add_option("--iters", cfg.n_iter, "MCMC iterations");
  fitcmd->add_option("--burnin", cfg.burn_in, "discarded iterations");
  fitcmd->add_option("--thin", cfg.thin, "keep every k-th iteration");
  fitcmd->add_option("--seed", cfg.rng.master_seed, "RNG seed");
  fitcmd->add_flag("--lock-ab", cfg.lock_ab, "tie a = b");
  fitcmd->add_option("--a", cfg.initial.a, "initial a");
  fitcmd->add_option("--b", cfg.initial.b, "initial b");
  fitcmd->add_option("--lambda", cfg.initial.lambda, "initial lambda");
  fitcmd->add_option("--step-a", cfg.theta_step.a, "random-walk scale on log(1+a)");
  fitcmd->add_option("--step-b", cfg.theta_step.b, "random-walk scale on log(b)");
  fitcmd->add_option("--step-lambda", cfg.theta_step.lambda, "random-walk scale on log(lambda)");
  fitcmd->add_option("--swaps", cfg.swap_moves_per_iter, "arrival-order swaps per iteration");
  fitcmd->add_option("--sigma-every", cfg.sigma_every, "store the arrival order every k-th sample");

  // distplot
  cli::DistplotOptions dp;
  std::vector<std::string> dp_inputs;
  auto* distplot = app.add_subcommand("distplot", "degree distribution points and fitted line");
  distplot->add_option("inputs", dp_inputs, "graph files or campaign directories")->required();
  distplot->add_option("--kmin", dp.k_min, "k_min for the exponent fit");

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e);
  }

  try {
    if (*generate) {
      gen.model = parse_growth_model(gen_model);
      if (gen_paper) gen.n_sim = kPaperScaleNsim;
      cli::cmd_generate(gen, gen_out, std::cerr);
    } else if (*table1) {
      if (t1_paper) t1.n_sim = kPaperScaleNsim;
      if (!t1_out.empty()) t1.out_dir = t1_out;
      cli::cmd_table1(t1, std::cout);
    } else if (*theory) {
      if (!th_csv.empty()) th.master_csv = th_csv;
      cli::cmd_theory(th, std::cout);
    } else if (*fitcmd) {
      fit.graph = fit_graph;
      fit.out_dir = fit_out;
      if (cfg.lock_ab) cfg.initial.b = cfg.initial.a;
      cli::cmd_fit(fit, std::cout);
    } else if (*distplot) {
      dp.inputs.assign(dp_inputs.begin(), dp_inputs.end());
      cli::cmd_distplot(dp, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e);
  }
  return cli::kExitOk;
}
