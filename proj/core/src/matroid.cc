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

#include "dpmst/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "dpmst/errors.h"

namespace dpmst {

bool GraphicMatroid::is_independent(std::span<const std::size_t> set) const {
  DisjointSets ds(g_->num_vertices());
  for (std::size_t j : set) {
    if (j >= g_->num_edges()) return false;
    const Edge& e = g_->edges()[j];
    if (!ds.merge(e.u, e.v)) return false;
  }
  return true;
}

bool UniformMatroid::is_independent(std::span<const std::size_t> set) const {
  if (set.size() > rank_) return false;
  std::vector<std::size_t> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return sorted.empty() || sorted.back() < ground_size_;
}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> block_of,
                                   std::vector<std::size_t> capacity)
    : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {
  for (std::size_t b : block_of_) {
    if (b >= capacity_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "block index without capacity");
    }
  }
}

bool PartitionMatroid::is_independent(std::span<const std::size_t> set) const {
  std::vector<std::size_t> used(capacity_.size(), 0);
  std::vector<char> seen(block_of_.size(), 0);
  for (std::size_t j : set) {
    if (j >= block_of_.size() || seen[j]) return false;
    seen[j] = 1;
    if (++used[block_of_[j]] > capacity_[block_of_[j]]) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> greedy_in_order(const Matroid& m,
                                         std::span<const std::size_t> order) {
  std::vector<std::size_t> picked;
  for (std::size_t j : order) {
    picked.push_back(j);
    if (!m.is_independent(picked)) picked.pop_back();
  }
  return picked;
}

}  // namespace

std::size_t matroid_rank(const Matroid& m) {
  std::vector<std::size_t> order(m.ground_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return greedy_in_order(m, order).size();
}

std::vector<std::size_t> greedy_max_weight_basis(const Matroid& m,
                                                 std::span<const double> weights) {
  if (weights.size() != m.ground_size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "weight vector does not match the ground set");
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] > weights[b] || (weights[a] == weights[b] && a < b);
  });
  return greedy_in_order(m, order);
}

std::vector<std::size_t> matroid_private_max_weight_basis(
    const Matroid& m, std::span<const double> weights,
    const PrivacyBudget& budget, RngStream& r) {
  if (weights.size() != m.ground_size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "weight vector does not match the ground set");
  }
  if (!m.is_independent(std::span<const std::size_t>{})) {
    throw Error(ErrorCode::kOracleInconsistent,
                "the empty set must be independent");
  }
  const std::size_t rank = matroid_rank(m);
  if (rank == 0) return {};
  const double eps_prime = budget.eps_round_for(rank);
  const double scale = budget.delta_inf() * 2.0 / eps_prime;

  std::vector<double> noisy(weights.begin(), weights.end());
  for (double& w : noisy) w -= scale * sample_ln_exponential(r);

  std::vector<std::size_t> basis = greedy_max_weight_basis(m, noisy);
  if (basis.size() != rank) {
    throw Error(ErrorCode::kOracleInconsistent,
                "greedy basis has " + std::to_string(basis.size()) +
                    " elements but the rank is " + std::to_string(rank));
  }
  for (std::size_t j : basis) {
    const std::size_t single[] = {j};
    if (!m.is_independent(single)) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "subset of an independent set reported dependent");
    }
  }
  return basis;
}

}  // namespace dpmst
