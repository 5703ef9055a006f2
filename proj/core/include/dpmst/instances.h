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

#ifndef DPMST_INSTANCES_H_
#define DPMST_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "dpmst/graph.h"
#include "dpmst/rng.h"

namespace dpmst {

enum class InstanceModel { kErdosRenyi, kMiChain, kHard };

InstanceModel parse_instance_model(std::string_view name);

struct InstanceSpec {
  InstanceModel model = InstanceModel::kErdosRenyi;
  std::size_t n = 100;
  // Erdos-Renyi
  double p = 1.0;
  double wmin = 0.0;
  double wmax = 100.0;
  double delta_inf = 1.0;
  // Mutual-information chain
  double flip_p = 0.05;
  std::uint64_t dataset_size = 10000;
  // Hard distribution; beta <= 0 means 0.5 * ln(n).
  double beta = 0.0;
  std::uint64_t s = 10;
  std::uint64_t seed = 0;
};

// Each of the n(n-1)/2 pairs (in lexicographic order) is kept with
// probability p; weights are uniform on [wmin, wmax]. Draws are repeated
// until the graph is connected, at most `max_attempts` times.
WeightedGraph erdos_renyi_instance(std::size_t n, double p, double wmin,
                                   double wmax, RngStream& r,
                                   double delta_inf = 1.0,
                                   int max_attempts = 1000);

// Probability that a Binomial(k, flip_p) count is even: 1/2 + 1/2 (1-2p)^k.
double parity_even_prob(std::uint64_t k, double flip_p);

// Mutual information (bits) between two bits k steps apart on a chain that
// flips each step with probability flip_p.
double mi_weight(double flip_p, std::uint64_t k);

// Complete graph on n vertices with w_ij = -mi_weight(flip_p, |i-j|) and
// delta_inf = log2(d) / d.
WeightedGraph mutual_info_chain_instance(std::size_t n, double flip_p,
                                         std::uint64_t dataset_size);

// Complete graph; per edge P_e ~ Beta(beta, beta), w_e ~ Binomial(s, P_e).
// delta_inf is 1 (one row of the underlying dataset).
WeightedGraph hard_instance(std::size_t n, double beta, std::uint64_t s,
                            RngStream& r);

WeightedGraph generate_instance(const InstanceSpec& spec);

// Edge-list text format: a header line "n m delta_inf" followed by m lines
// "u v w" (1-based). Lines starting with '#' and blank lines are skipped.
// Numbers are written in shortest round-trip form.
void write_instance(const WeightedGraph& g, std::ostream& out);
void write_instance(const WeightedGraph& g, const std::filesystem::path& path);
WeightedGraph read_instance(std::istream& in);
WeightedGraph read_instance(const std::filesystem::path& path);

}  // namespace dpmst

#endif  // DPMST_INSTANCES_H_
