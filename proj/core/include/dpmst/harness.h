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


#ifndef DPMST_HARNESS_H_
#define DPMST_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dpmst/graph.h"
#include "dpmst/mechanisms.h"
#include "dpmst/oracle.h"
#include "dpmst/privacy.h"
#include "dpmst/rng.h"
#include "dpmst/stats.h"

namespace dpmst {

struct TrialRecord {
  std::string mechanism;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;  // edge density m / (n choose 2)
  double eps = 0.0;
  double delta = 0.0;
  double rho = 0.0;
  double eps_prime = 0.0;
  double delta_inf = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // master seed; trial i uses stream (seed, i)
  double true_weight = 0.0;
  double private_weight = 0.0;
  double error = 0.0;
  std::int64_t runtime_ns = 0;
};

struct RunReport {
  std::vector<TrialRecord> records;
  Summary error;  // recomputable from records

  std::vector<double> errors() const;
  void recompute();
};

struct RunOptions {
  unsigned threads = 1;
};

// Trial i runs on RngStream(master_seed, i). Records are in trial order and
// do not depend on the thread count.
RunReport run_trials(const WeightedGraph& g, MechanismId mechanism,
                     const PrivacyBudget& budget, std::size_t trials,
                     std::uint64_t master_seed, const RunOptions& options = {});

struct SweepRow {
  double p = 0.0;
  std::string mechanism;
  double median_ratio = 0.0;  // private / true tree weight
  double median_error = 0.0;
  double q1_error = 0.0;
  double q3_error = 0.0;
};

struct SweepRecord {
  double sweep_param = 0.0;
  TrialRecord record;
};

struct DensitySweep {
  std::vector<SweepRow> rows;
  std::vector<SweepRecord> records;
};

struct DensitySweepConfig {
  std::size_t n = 256;
  std::vector<double> densities = {0.1, 0.3, 0.5, 0.8, 1.0};
  double rho = 1.0;
  double delta = 1e-6;
  double delta_inf = 0.1;
  double wmin = 0.0;
  double wmax = 100.0;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::vector<MechanismId> mechanisms = {MechanismId::kPerturb, MechanismId::kPamst,
                                         MechanismId::kSealfonGauss};
  unsigned threads = 1;
};

// One Erdos-Renyi graph per density, then `trials` runs of every mechanism.
DensitySweep density_sweep(const DensitySweepConfig& config);

enum class EquivalenceFamily { kK3, kK4 };
EquivalenceFamily parse_equivalence_family(std::string_view name);

// K3 with weights w (default 1, 2, 3) or K4 with unit weights; delta_inf 1.
WeightedGraph equivalence_graph(EquivalenceFamily family);
WeightedGraph triangle_graph(double w12, double w13, double w23);

using TreeSampler = std::function<SpanningTree(RngStream&)>;

// Draws `trials` trees (trial i on RngStream(seed, i)) and tests them against
// the exact private-Kruskal law on g.
ChiSquareResult check_sampler_against_oracle(const WeightedGraph& g, double eps_prime,
                                             const TreeSampler& sampler,
                                             std::size_t trials, double alpha,
                                             std::uint64_t seed, unsigned threads = 1);

struct EquivalenceResult {
  std::string mechanism;
  ChiSquareResult chi;
};

// Input perturbation, private Kruskal and the one-pass variant, each against
// the exact law.
std::vector<EquivalenceResult> equivalence_suite(const WeightedGraph& g,
                                                 double eps_prime, std::size_t trials,
                                                 double alpha, std::uint64_t seed,
                                                 unsigned threads = 1);

struct CsvOptions {
  bool zero_runtime = false;  // write runtime_ns as 0 for byte-stable output
};

std::string csv_header(bool with_sweep_param);
void emit_csv(const RunReport& report, std::ostream& out, const CsvOptions& options = {});
void emit_csv(const DensitySweep& sweep, std::ostream& out,
              const CsvOptions& options = {});
void emit_csv(const RunReport& report, const std::filesystem::path& path,
              const CsvOptions& options = {});
void emit_csv(const DensitySweep& sweep, const std::filesystem::path& path,
              const CsvOptions& options = {});

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fast subset of the property and oracle checks.
std::vector<SelftestCheck> selftest(std::uint64_t seed = 1);

}  // namespace dpmst

#endif  // DPMST_HARNESS_H_
