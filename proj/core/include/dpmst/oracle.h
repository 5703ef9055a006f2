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


#ifndef DPMST_ORACLE_H_
#define DPMST_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dpmst/graph.h"
#include "dpmst/ppsacr.h"

namespace dpmst {

// An outcome is a selection sequence or, after marginalizing, a sorted set.
using Outcome = std::vector<std::size_t>;

struct ExactDistribution {
  std::map<Outcome, long double> probs;

  long double total() const;  // compensated sum
  long double probability(const Outcome& o) const;
  std::size_t support_size() const { return probs.size(); }
  // Forgets pick order: sequences with the same set of items are merged.
  ExactDistribution unordered() const;
};

// All spanning trees of g. Throws kGuardExceeded for n > 10 or more than
// `max_trees` trees.
std::vector<SpanningTree> enumerate_spanning_trees(const WeightedGraph& g,
                                                   std::size_t max_trees = 1u << 20);

// Minimum weight spanning tree by enumeration. Among equal weights, picks the
// tree Kruskal with lower-index tie-breaking returns.
SpanningTree brute_force_mst(const WeightedGraph& g);

// Exact law of the ordered PPSACR selection. Guards: at most 8 items, k <= 6.
ExactDistribution exact_ppsacr_distribution(std::span<const long double> sizes,
                                            std::size_t k, const RemovalRule& rule);

// Exact law of the private Kruskal tree (sorted 1-based edge ids), using
// sizes exp(-eps' w / (2 delta_inf)). At most 8 edges.
ExactDistribution exact_private_mst_distribution(const WeightedGraph& g,
                                                 double eps_prime, double delta_inf);

Outcome tree_outcome(const SpanningTree& t);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double critical = 0.0;
  double p_value = 1.0;
  bool passed = false;
  std::size_t bins = 0;  // after merging
  std::uint64_t outside_support = 0;
};

// Goodness of fit of observed counts to an exact law. Bins with expected
// count below 5 are merged; any observation outside the support fails.
ChiSquareResult chi_square_gof(const std::map<Outcome, std::uint64_t>& counts,
                               const ExactDistribution& exact, double alpha);

}  // namespace dpmst

#endif  // DPMST_ORACLE_H_
