// Copyright 2026 The dpmst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command line front end: instance generation, trial runs, sweeps and
// statistical checks.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dpmst/errors.h"
#include "dpmst/harness.h"
#include "dpmst/instances.h"
#include "dpmst/mechanisms.h"
#include "dpmst/privacy.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStatistical = 2;
constexpr int kExitIo = 3;

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

int run_gen(const dpmst::InstanceSpec& spec, const std::string& out) {
  const dpmst::WeightedGraph g = dpmst::generate_instance(spec);
  if (out == "-") {
    dpmst::write_instance(g, std::cout);
  } else {
    dpmst::write_instance(g, std::filesystem::path(out));
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private minimum spanning trees"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads for trials")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  dpmst::InstanceSpec spec;
  std::string model = "er";
  std::string gen_out = "-";
  gen->add_option("--model", model, "er | mi-chain | hard")
      ->check(CLI::IsMember({"er", "mi-chain", "hard"}));
  gen->add_option("--n", spec.n, "Vertices");
  gen->add_option("--p", spec.p, "Edge probability (er)");
  gen->add_option("--wmin", spec.wmin, "Minimum weight (er)");
  gen->add_option("--wmax", spec.wmax, "Maximum weight (er)");
  gen->add_option("--delta-inf", spec.delta_inf, "Weight sensitivity (er)");
  gen->add_option("--flip-p", spec.flip_p, "Per-step flip probability (mi-chain)");
  gen->add_option("--dataset-size", spec.dataset_size, "Dataset size d (mi-chain)");
  gen->add_option("--beta", spec.beta, "Beta parameter, default 0.5 ln n (hard)");
  gen->add_option("--s", spec.s, "Binomial trials (hard)");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--out", gen_out, "Output file, '-' for stdout");

  // run
  auto* run = app.add_subcommand("run", "Run a mechanism repeatedly on an instance");
  std::string graph_path;
  std::string mech;
  double eps = 1.0;
  double delta = 1e-6;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::string run_out;
  bool zero_runtime = false;
  bool ten_run = false;
  run->add_option("--graph", graph_path, "Instance file")->required();
  run->add_option("--mech", mech,
                  "perturb | kruskal | onepass | pamst | sealfon-laplace | sealfon-gauss")
      ->required();
  run->add_option("--eps", eps, "Target epsilon")->check(CLI::PositiveNumber);
  run->add_option("--delta", delta, "Target delta")->check(CLI::Range(0.0, 1.0));
  run->add_option("--trials", trials, "Trials")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--out", run_out, "CSV output")->required();
  run->add_flag("--no-timing", zero_runtime, "Write runtime_ns as 0");

  // sweep-density
  auto* sweep = app.add_subcommand("sweep-density", "Erdos-Renyi density sweep");
  dpmst::DensitySweepConfig sweep_cfg;
  std::string sweep_out;
  sweep->add_option("--n", sweep_cfg.n, "Vertices");
  sweep->add_option("--densities", sweep_cfg.densities, "Edge probabilities")
      ->delimiter(',');
  sweep->add_option("--rho", sweep_cfg.rho, "zCDP budget")->check(CLI::PositiveNumber);
  sweep->add_option("--delta", sweep_cfg.delta, "Delta for the eps column");
  sweep->add_option("--delta-inf", sweep_cfg.delta_inf, "Weight sensitivity");
  sweep->add_option("--trials", sweep_cfg.trials, "Trials per point")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--ten-run", ten_run, "Use ten trials per point");
  sweep->add_option("--seed", sweep_cfg.seed, "Master seed");
  sweep->add_option("--out", sweep_out, "CSV output")->required();
  sweep->add_flag("--no-timing", zero_runtime, "Write runtime_ns as 0");

  // check-equiv
  auto* equiv = app.add_subcommand("check-equiv", "Chi-square equivalence check");
  std::string family = "k3";
  double eps_prime = 1.0;
  std::size_t equiv_trials = 200000;
  double alpha = 0.001;
  equiv->add_option("--family", family, "k3 | k4")->check(CLI::IsMember({"k3", "k4"}));
  equiv->add_option("--eps-prime", eps_prime, "Per-round epsilon")
      ->check(CLI::PositiveNumber);
  equiv->add_option("--trials", equiv_trials, "Samples per mechanism")
      ->check(CLI::PositiveNumber);
  equiv->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  equiv->add_option("--seed", seed, "Master seed");

  auto* self = app.add_subcommand("selftest", "Fast property and oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) {
      spec.model = dpmst::parse_instance_model(model);
      return run_gen(spec, gen_out);
    }
    if (*run) {
      const dpmst::WeightedGraph g = dpmst::read_instance(std::filesystem::path(graph_path));
      const auto id = dpmst::parse_mechanism(mech);
      const auto budget = dpmst::PrivacyBudget::from_eps_delta(eps, delta, g.delta_inf());
      const auto report = dpmst::run_trials(g, id, budget, trials, seed, {threads});
      dpmst::emit_csv(report, std::filesystem::path(run_out), {zero_runtime});
      std::cout << "mean error " << report.error.mean << " median " << report.error.median
                << " (" << report.records.size() << " trials)\n";
      return kExitPass;
    }
    if (*sweep) {
      if (ten_run) sweep_cfg.trials = 10;
      sweep_cfg.threads = threads;
      const auto result = dpmst::density_sweep(sweep_cfg);
      dpmst::emit_csv(result, std::filesystem::path(sweep_out), {zero_runtime});
      for (const auto& row : result.rows) {
        std::cout << "p=" << row.p << ' ' << row.mechanism << " median_ratio="
                  << row.median_ratio << " median_error=" << row.median_error << '\n';
      }
      return kExitPass;
    }
    if (*equiv) {
      const auto g = dpmst::equivalence_graph(dpmst::parse_equivalence_family(family));
      const auto results =
          dpmst::equivalence_suite(g, eps_prime, equiv_trials, alpha, seed, threads);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.chi.passed ? "PASS " : "FAIL ") << r.mechanism
                  << " chi2=" << r.chi.statistic << " critical=" << r.chi.critical
                  << " p=" << r.chi.p_value << '\n';
        ok = ok && r.chi.passed;
      }
      return ok ? kExitPass : kExitStatistical;
    }
    if (*self) {
      bool ok = true;
      for (const auto& check : dpmst::selftest()) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) std::cout << " (" << check.detail << ')';
        std::cout << '\n';
        ok = ok && check.passed;
      }
      return ok ? kExitPass : kExitStatistical;
    }
  } catch (const dpmst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool io = e.code() == dpmst::ErrorCode::kIo || e.code() == dpmst::ErrorCode::kParse;
    return io ? kExitIo : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
