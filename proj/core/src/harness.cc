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


#include "dpmst/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "dpmst/errors.h"
#include "dpmst/instances.h"
#include "text_format.h"

namespace dpmst {

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i, w);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double edge_density(const WeightedGraph& g) {
  const double n = static_cast<double>(g.num_vertices());
  return n < 2 ? 0.0 : static_cast<double>(g.num_edges()) / (n * (n - 1) / 2.0);
}

void write_record(std::ostream& out, const TrialRecord& r, const CsvOptions& options) {
  using internal::format_double;
  out << r.mechanism << ',' << r.n << ',' << r.m << ',' << format_double(r.p) << ','
      << format_double(r.eps) << ',' << format_double(r.delta) << ','
      << format_double(r.rho) << ',' << format_double(r.eps_prime) << ','
      << format_double(r.delta_inf) << ',' << r.trial << ',' << r.seed << ','
      << format_double(r.true_weight) << ',' << format_double(r.private_weight) << ','
      << format_double(r.error) << ',' << (options.zero_runtime ? 0 : r.runtime_ns)
      << '\n';
}

template <typename Emit>
void write_file(const std::filesystem::path& path, Emit&& emit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  emit(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<double> RunReport::errors() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const TrialRecord& r : records) out.push_back(r.error);
  return out;
}

void RunReport::recompute() {
  const std::vector<double> e = errors();
  error = summarize(e);
}

RunReport run_trials(const WeightedGraph& g, MechanismId mechanism,
                     const PrivacyBudget& budget, std::size_t trials,
                     std::uint64_t master_seed, const RunOptions& options) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  if (!g.connected()) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  const SpanningTree optimum = kruskal_mst(g);
  const double true_weight = tree_weight(g, optimum);
  const double eps_prime =
      g.num_vertices() > 1 ? budget.eps_round_for(g.num_vertices() - 1) : 0.0;
  const double tolerance = 1e-9 * std::max(1.0, std::fabs(true_weight));

  TrialRecord base;
  base.mechanism = std::string(mechanism_name(mechanism));
  base.n = g.num_vertices();
  base.m = g.num_edges();
  base.p = edge_density(g);
  base.eps = budget.epsilon();
  base.delta = budget.delta();
  base.rho = budget.rho();
  base.eps_prime = eps_prime;
  base.delta_inf = budget.delta_inf();
  base.seed = master_seed;
  base.true_weight = true_weight;

  RunReport report;
  report.records.assign(trials, base);
  parallel_for(trials, options.threads, [&](std::size_t i, unsigned) {
    RngStream r(master_seed, i);
    const MechanismResult result = run_mechanism(mechanism, g, budget, r);
    TrialRecord& rec = report.records[i];
    rec.trial = i;
    rec.private_weight = tree_weight(g, result.tree);
    rec.error = rec.private_weight - true_weight;
    rec.runtime_ns = result.wall_time.count();
    if (rec.error < -tolerance) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "private tree lighter than the minimum spanning tree");
    }
  });
  report.recompute();
  return report;
}

DensitySweep density_sweep(const DensitySweepConfig& config) {
  DensitySweep sweep;
  const PrivacyBudget budget =
      PrivacyBudget::from_rho(config.rho, config.delta, config.delta_inf);
  const RngStream master(config.seed);
  for (std::size_t k = 0; k < config.densities.size(); ++k) {
    const double p = config.densities[k];
    RngStream graph_rng = master.derive(k);
    const WeightedGraph g = erdos_renyi_instance(config.n, p, config.wmin, config.wmax,
                                                 graph_rng, config.delta_inf);
    for (std::size_t j = 0; j < config.mechanisms.size(); ++j) {
      const std::uint64_t seed = mix64(config.seed ^ mix64(k * 131 + j + 1));
      RunReport report = run_trials(g, config.mechanisms[j], budget, config.trials,
                                    seed, {config.threads});
      std::vector<double> ratios;
      for (const TrialRecord& rec : report.records) {
        ratios.push_back(rec.private_weight / rec.true_weight);
      }
      SweepRow row;
      row.p = p;
      row.mechanism = std::string(mechanism_name(config.mechanisms[j]));
      row.median_ratio = quantile(ratios, 0.5);
      row.median_error = report.error.median;
      row.q1_error = report.error.q1;
      row.q3_error = report.error.q3;
      sweep.rows.push_back(row);
      for (TrialRecord& rec : report.records) {
        sweep.records.push_back({p, std::move(rec)});
      }
    }
  }
  return sweep;
}

EquivalenceFamily parse_equivalence_family(std::string_view name) {
  if (name == "k3") return EquivalenceFamily::kK3;
  if (name == "k4") return EquivalenceFamily::kK4;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

WeightedGraph triangle_graph(double w12, double w13, double w23) {
  return WeightedGraph::build(3, {{1, 2}, {1, 3}, {2, 3}}, {w12, w13, w23}, 1.0);
}

WeightedGraph equivalence_graph(EquivalenceFamily family) {
  if (family == EquivalenceFamily::kK3) return triangle_graph(1.0, 2.0, 3.0);
  return WeightedGraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                              std::vector<double>(6, 1.0), 1.0);
}

ChiSquareResult check_sampler_against_oracle(const WeightedGraph& g, double eps_prime,
                                             const TreeSampler& sampler,
                                             std::size_t trials, double alpha,
                                             std::uint64_t seed, unsigned threads) {
  const ExactDistribution exact =
      exact_private_mst_distribution(g, eps_prime, g.delta_inf());
  const unsigned workers = std::max(1u, threads);
  std::vector<std::map<Outcome, std::uint64_t>> local(workers);
  parallel_for(trials, workers, [&](std::size_t i, unsigned w) {
    RngStream r(seed, i);
    ++local[w][tree_outcome(sampler(r))];
  });
  std::map<Outcome, std::uint64_t> counts;
  for (const auto& part : local) {
    for (const auto& [outcome, c] : part) counts[outcome] += c;
  }
  return chi_square_gof(counts, exact, alpha);
}

std::vector<EquivalenceResult> equivalence_suite(const WeightedGraph& g,
                                                 double eps_prime, std::size_t trials,
                                                 double alpha, std::uint64_t seed,
                                                 unsigned threads) {
  const PrivacyBudget budget =
      PrivacyBudget::from_eps_prime(eps_prime, g.num_vertices() - 1, 1e-6, g.delta_inf());
  std::vector<EquivalenceResult> out;
  for (MechanismId id : {MechanismId::kPerturb, MechanismId::kKruskal,
                         MechanismId::kOnePass}) {
    const TreeSampler sampler = [&, id](RngStream& r) {
      return run_mechanism(id, g, budget, r).tree;
    };
    out.push_back({std::string(mechanism_name(id)),
                   check_sampler_against_oracle(g, eps_prime, sampler, trials, alpha,
                                                mix64(seed + static_cast<int>(id)),
                                                threads)});
  }
  return out;
}

std::string csv_header(bool with_sweep_param) {
  std::string h =
      "mechanism,n,m,p,eps,delta,rho,eps_prime,delta_inf,trial,seed,true_weight,"
      "private_weight,error,runtime_ns";
  return with_sweep_param ? "sweep_param," + h : h;
}

void emit_csv(const RunReport& report, std::ostream& out, const CsvOptions& options) {
  out << csv_header(false) << '\n';
  for (const TrialRecord& r : report.records) write_record(out, r, options);
}

void emit_csv(const DensitySweep& sweep, std::ostream& out, const CsvOptions& options) {
  out << csv_header(true) << '\n';
  for (const SweepRecord& r : sweep.records) {
    out << internal::format_double(r.sweep_param) << ',';
    write_record(out, r.record, options);
  }
}

void emit_csv(const RunReport& report, const std::filesystem::path& path,
              const CsvOptions& options) {
  write_file(path, [&](std::ostream& out) { emit_csv(report, out, options); });
}

void emit_csv(const DensitySweep& sweep, const std::filesystem::path& path,
              const CsvOptions& options) {
  write_file(path, [&](std::ostream& out) { emit_csv(sweep, out, options); });
}

std::vector<SelftestCheck> selftest(std::uint64_t seed) {
  std::vector<SelftestCheck> checks;
  auto run = [&](std::string name, auto&& body) {
    SelftestCheck check{std::move(name), false, {}};
    try {
      check.passed = body(check.detail);
    } catch (const std::exception& e) {
      check.detail = e.what();
    }
    checks.push_back(std::move(check));
  };

  run("philox known answer", [](std::string& detail) {
    const auto out = philox4x32_10({0, 0, 0, 0}, {0, 0});
    detail = "first word " + std::to_string(out[0]);
    return out == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                                0x9b00dbd8u};
  });

  run("zcdp round trip", [](std::string& detail) {
    double worst = 0.0;
    for (double eps : {0.1, 1.0, 10.0}) {
      for (double delta : {1e-9, 1e-6, 1e-3}) {
        worst = std::max(worst, std::fabs(eps - eps_from_rho_delta(
                                                    rho_from_eps_delta(eps, delta), delta)));
      }
    }
    detail = "max deviation " + internal::format_double(worst);
    return worst <= 1e-9;
  });

  run("kruskal matches enumeration", [seed](std::string& detail) {
    RngStream r(seed, 1);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 2 + r.next_u32() % 5;
      const WeightedGraph g = erdos_renyi_instance(n, 0.6, 0.0, 1.0, r);
      if (kruskal_mst(g) != brute_force_mst(g)) {
        detail = "mismatch on graph " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  run("mutual information weights", [](std::string& detail) {
    const double expect[] = {0.7136, 0.5471, 0.4277};
    double worst = 0.0;
    for (std::uint64_t k = 1; k <= 3; ++k) {
      worst = std::max(worst, std::fabs(mi_weight(0.05, k) - expect[k - 1]));
    }
    detail = "max deviation " + internal::format_double(worst);
    return worst <= 5e-4;
  });

  for (EquivalenceFamily family : {EquivalenceFamily::kK3, EquivalenceFamily::kK4}) {
    const std::string label = family == EquivalenceFamily::kK3 ? "k3" : "k4";
    run("equivalence " + label, [&](std::string& detail) {
      const auto results =
          equivalence_suite(equivalence_graph(family), 1.0, 20000, 0.001, seed, 1);
      bool ok = true;
      for (const auto& res : results) {
        detail += res.mechanism + " chi2=" + internal::format_double(res.chi.statistic) + " ";
        ok = ok && res.chi.passed;
      }
      return ok;
    });
  }
  return checks;
}

}  // namespace dpmst
