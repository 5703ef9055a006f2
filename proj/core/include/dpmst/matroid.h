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

#ifndef DPMST_MATROID_H_
#define DPMST_MATROID_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpmst/graph.h"
#include "dpmst/privacy.h"
#include "dpmst/rng.h"

namespace dpmst {

// Independence oracle over the ground set {0, ..., ground_size() - 1}.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(std::span<const std::size_t> set) const = 0;
};

// Forests of a graph; element j is edge j + 1.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(const WeightedGraph& g) : g_(&g) {}
  std::size_t ground_size() const override { return g_->num_edges(); }
  bool is_independent(std::span<const std::size_t> set) const override;

 private:
  const WeightedGraph* g_;
};

// Every set of at most `rank` elements.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t ground_size, std::size_t rank)
      : ground_size_(ground_size), rank_(rank) {}
  std::size_t ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const std::size_t> set) const override;

 private:
  std::size_t ground_size_;
  std::size_t rank_;
};

// Element j belongs to block block_of[j]; a set is independent when it takes
// at most capacity[b] elements from each block b.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<std::size_t> block_of,
                   std::vector<std::size_t> capacity);
  std::size_t ground_size() const override { return block_of_.size(); }
  bool is_independent(std::span<const std::size_t> set) const override;
  std::size_t block_of(std::size_t element) const { return block_of_.at(element); }
  std::size_t capacity(std::size_t block) const { return capacity_.at(block); }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> capacity_;
};

// Rank of the whole ground set (greedy in index order).
std::size_t matroid_rank(const Matroid& m);

// Greedy maximum-weight basis: scan by decreasing weight (ties: lower index
// first) and keep every element that preserves independence. Elements are
// returned in pick order.
std::vector<std::size_t> greedy_max_weight_basis(const Matroid& m,
                                                 std::span<const double> weights);

// Adds delta_inf * (2 / eps') * Gumbel(1) to each weight, with
// eps' = per-round epsilon over rank(m) rounds, and runs the greedy on the
// noisy weights. The noise draws ln Exp(1) once per element in index order
// and subtracts it, so on a graphic matroid with negated weights this is the
// input-perturbation MST on the same stream.
//
// Throws ErrorCode::kOracleInconsistent when spot checks of the matroid
// axioms fail (empty set dependent, or the greedy basis size disagrees with
// the rank).
std::vector<std::size_t> matroid_private_max_weight_basis(
    const Matroid& m, std::span<const double> weights,
    const PrivacyBudget& budget, RngStream& r);

}  // namespace dpmst

#endif  // DPMST_MATROID_H_
