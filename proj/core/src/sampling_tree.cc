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

#include "dpmst/sampling_tree.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dpmst/errors.h"

namespace dpmst {

namespace {

// Live mass below this is rebased before sampling; well above the subnormal
// range so leaf ratios keep full precision.
constexpr double kRebaseFloor = 1e-250;
// A leaf may exceed the current shift by at most this much in log space.
constexpr double kRebaseCeiling = 500.0;

}  // namespace

SamplingTree::SamplingTree(std::span<const double> weights)
    : leaves_(weights.size()),
      sums_(weights.empty() ? 0 : 2 * weights.size() - 1, 0.0),
      live_(weights.size(), 1),
      live_count_(weights.size()) {
  if (weights.empty()) {
    throw Error(ErrorCode::kEmpty, "sampling tree needs at least one leaf");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "leaf " + std::to_string(i) + " has non-positive weight");
    }
    sums_[leaves_ - 1 + i] = weights[i];
  }
  rebuild_sums();
}

SamplingTree SamplingTree::from_log_weights(std::span<const double> log_weights,
                                            bool all_live) {
  if (log_weights.empty()) {
    throw Error(ErrorCode::kEmpty, "sampling tree needs at least one leaf");
  }
  SamplingTree t;
  t.leaves_ = log_weights.size();
  t.sums_.assign(2 * t.leaves_ - 1, 0.0);
  t.live_.assign(t.leaves_, all_live ? 1 : 0);
  t.live_count_ = all_live ? t.leaves_ : 0;
  t.log_weights_.assign(log_weights.begin(), log_weights.end());
  for (double lw : log_weights) {
    if (!std::isfinite(lw)) {
      throw Error(ErrorCode::kInvalidArgument, "log-weights must be finite");
    }
  }
  t.shift_ = *std::max_element(log_weights.begin(), log_weights.end());
  if (all_live) {
    for (std::size_t i = 0; i < t.leaves_; ++i) {
      t.sums_[t.leaves_ - 1 + i] = std::exp(log_weights[i] - t.shift_);
    }
    t.rebuild_sums();
  }
  return t;
}

void SamplingTree::check_leaf(std::size_t leaf) const {
  if (leaf >= leaves_) {
    throw Error(ErrorCode::kInvalidArgument,
                "leaf " + std::to_string(leaf) + " out of range");
  }
}

bool SamplingTree::is_live(std::size_t leaf) const {
  check_leaf(leaf);
  return live_[leaf] != 0;
}

double SamplingTree::leaf_weight(std::size_t leaf) const {
  check_leaf(leaf);
  return sums_[leaves_ - 1 + leaf];
}

void SamplingTree::rebuild_sums() {
  for (std::size_t node = leaves_ - 1; node-- > 0;) {
    sums_[node] = sums_[2 * node + 1] + sums_[2 * node + 2];
  }
}

void SamplingTree::set_leaf(std::size_t leaf, double weight) {
  std::size_t node = leaves_ - 1 + leaf;
  sums_[node] = weight;
  while (node > 0) {
    node = (node - 1) / 2;
    sums_[node] = sums_[2 * node + 1] + sums_[2 * node + 2];
  }
}

void SamplingTree::rebase() {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < leaves_; ++i) {
    if (live_[i]) best = std::max(best, log_weights_[i]);
  }
  shift_ = best;
  for (std::size_t i = 0; i < leaves_; ++i) {
    sums_[leaves_ - 1 + i] = live_[i] ? std::exp(log_weights_[i] - shift_) : 0.0;
  }
  rebuild_sums();
  ++rebases_;
}

std::size_t SamplingTree::sample(RngStream& r) {
  if (live_count_ == 0) {
    throw Error(ErrorCode::kEmpty, "no live leaves to sample from");
  }
  if (!log_weights_.empty() && total() < kRebaseFloor) rebase();
  std::size_t node = 0;
  while (node < leaves_ - 1) {
    const std::size_t left = 2 * node + 1;
    const std::size_t right = left + 1;
    const double u = r.uniform() * sums_[node];
    // A zero-mass child is never entered, whatever the rounding of u.
    if (sums_[right] == 0.0 || (sums_[left] > 0.0 && u < sums_[left])) {
      node = left;
    } else {
      node = right;
    }
  }
  return node - (leaves_ - 1);
}

void SamplingTree::remove(std::size_t leaf) {
  check_leaf(leaf);
  if (!live_[leaf]) {
    throw Error(ErrorCode::kDoubleRemoval,
                "leaf " + std::to_string(leaf) + " already removed");
  }
  live_[leaf] = 0;
  --live_count_;
  set_leaf(leaf, 0.0);
}

void SamplingTree::insert(std::size_t leaf) {
  check_leaf(leaf);
  if (log_weights_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "insert is only supported on log-weight trees");
  }
  if (live_[leaf]) {
    throw Error(ErrorCode::kInvalidArgument,
                "leaf " + std::to_string(leaf) + " is already live");
  }
  live_[leaf] = 1;
  ++live_count_;
  if (log_weights_[leaf] - shift_ > kRebaseCeiling) {
    rebase();
  } else {
    set_leaf(leaf, std::exp(log_weights_[leaf] - shift_));
  }
}

}  // namespace dpmst
