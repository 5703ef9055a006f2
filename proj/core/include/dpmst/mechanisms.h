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

// Private minimum spanning tree mechanisms under l-infinity edge-weight
// neighbouring.
//
// Every mechanism spends its budget over n - 1 rounds with per-round
// eps' = sqrt(2 rho / (n - 1)) and scales all noise by delta_inf. The three
// mechanisms `perturb`, `kruskal` and `onepass` release trees with the same
// distribution; `pamst` is the Prim-Jarnik in-place baseline and the two
// `sealfon-*` mechanisms privatize the whole weight vector.

#ifndef DPMST_MECHANISMS_H_
#define DPMST_MECHANISMS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpmst/graph.h"
#include "dpmst/privacy.h"
#include "dpmst/rng.h"

namespace dpmst {

struct OpsCounter {
  // Times each edge was inspected while pruning cycle-forming candidates,
  // indexed by edge id - 1. Only private_kruskal fills this.
  std::vector<std::uint32_t> edge_checks;
  std::uint64_t samples = 0;
  std::uint64_t tree_updates = 0;
  std::uint64_t rebases = 0;

  std::uint32_t max_edge_checks() const;
};

struct MechanismResult {
  SpanningTree tree;
  // Noisy weight vector behind the tree. For perturb/kruskal/onepass this is
  // diagnostic only: the noise is too weak to privatize the vector itself,
  // and `noisy_weights_private` is false. The sealfon mechanisms release it.
  std::optional<std::vector<double>> noisy_weights;
  bool noisy_weights_private = false;
  std::chrono::nanoseconds wall_time{0};
  OpsCounter ops;
};

enum class MechanismId { kPerturb, kKruskal, kOnePass, kPamst, kSealfonLaplace, kSealfonGauss };

enum class SealfonMode { kLaplacePure, kGaussianZcdp };

// Stable CLI identifiers: perturb, kruskal, onepass, pamst, sealfon-laplace,
// sealfon-gauss.
std::string_view mechanism_name(MechanismId id);
MechanismId parse_mechanism(std::string_view name);
std::vector<MechanismId> all_mechanisms();

// w + delta_inf * (2 / eps') * ln(Exp(1)), one draw per edge in id order.
std::vector<double> perturb_exponential_noise(const WeightedGraph& g,
                                              double eps_prime, double delta_inf,
                                              RngStream& r);

MechanismResult private_mst_input_perturbation(const WeightedGraph& g,
                                               const PrivacyBudget& budget,
                                               const MstAlgorithm& mst_algo,
                                               RngStream& r);
MechanismResult private_mst_input_perturbation(const WeightedGraph& g,
                                               const PrivacyBudget& budget,
                                               RngStream& r);

// n - 1 rounds of the exponential mechanism over the live candidates, using a
// sampling tree for the draws and small-to-large component scans to drop
// cycle-forming edges.
MechanismResult private_kruskal(const WeightedGraph& g, const PrivacyBudget& budget,
                                RngStream& r);

// Draws every race key once and runs plain Kruskal in key order. Consumes the
// stream exactly like private_mst_input_perturbation.
MechanismResult one_pass_private_kruskal(const WeightedGraph& g,
                                         const PrivacyBudget& budget, RngStream& r);

MechanismResult sealfon_input_privatization(const WeightedGraph& g,
                                            const PrivacyBudget& budget,
                                            SealfonMode mode, RngStream& r);

// Prim-Jarnik growth from vertex 1; each round draws a cut-crossing edge with
// the exponential mechanism at budget eps'.
MechanismResult pamst(const WeightedGraph& g, const PrivacyBudget& budget,
                      RngStream& r);

MechanismResult run_mechanism(MechanismId id, const WeightedGraph& g,
                              const PrivacyBudget& budget, RngStream& r);

}  // namespace dpmst

#endif  // DPMST_MECHANISMS_H_
