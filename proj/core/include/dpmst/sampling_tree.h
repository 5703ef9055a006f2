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

#ifndef DPMST_SAMPLING_TREE_H_
#define DPMST_SAMPLING_TREE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpmst/rng.h"

namespace dpmst {

// Complete binary tree over m leaves stored in heap order (node 0 is the root,
// leaf i is node m - 1 + i). Every internal node holds the sum of its two
// children, so proportional sampling and leaf removal both walk one
// root-to-leaf path.
//
// A tree built from log-weights keeps leaf weights as exp(log_w - shift). The
// shift starts at the largest log-weight and is moved ("rebased") only when
// the live mass underflows or a re-inserted leaf would overflow; shifting all
// leaves by one constant does not change the sampling distribution.
class SamplingTree {
 public:
  // All weights must be positive and finite.
  explicit SamplingTree(std::span<const double> weights);

  static SamplingTree from_log_weights(std::span<const double> log_weights,
                                       bool all_live = true);

  std::size_t size() const { return leaves_; }
  std::size_t live_count() const { return live_count_; }
  bool is_live(std::size_t leaf) const;
  double total() const { return sums_.empty() ? 0.0 : sums_[0]; }
  double leaf_weight(std::size_t leaf) const;
  double node_sum(std::size_t node) const { return sums_.at(node); }
  std::size_t node_count() const { return sums_.size(); }
  std::uint64_t rebase_count() const { return rebases_; }

  // Draws a live leaf with probability proportional to its weight.
  std::size_t sample(RngStream& r);
  // Zeroes a live leaf and repairs the path sums.
  void remove(std::size_t leaf);
  // Re-activates a removed leaf (log-weight trees only).
  void insert(std::size_t leaf);

 private:
  SamplingTree() = default;

  void set_leaf(std::size_t leaf, double weight);
  void rebuild_sums();
  void rebase();
  void check_leaf(std::size_t leaf) const;

  std::size_t leaves_ = 0;
  std::vector<double> sums_;
  std::vector<char> live_;
  std::size_t live_count_ = 0;
  std::vector<double> log_weights_;  // empty unless built from log-weights
  double shift_ = 0.0;
  std::uint64_t rebases_ = 0;
};

}  // namespace dpmst

#endif  // DPMST_SAMPLING_TREE_H_
