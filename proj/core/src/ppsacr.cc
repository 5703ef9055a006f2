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

#include "dpmst/ppsacr.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dpmst/errors.h"
#include "dpmst/sampling_tree.h"

namespace dpmst {

namespace {

std::vector<double> to_log_sizes(std::span<const double> sizes) {
  std::vector<double> out(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!(sizes[i] > 0.0) || !std::isfinite(sizes[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "size of item " + std::to_string(i) + " must be positive");
    }
    out[i] = std::log(sizes[i]);
  }
  return out;
}

void check_k(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
}

}  // namespace

RemovalRule no_removal() {
  return [](std::span<const std::size_t>) { return std::vector<std::size_t>{}; };
}

RemovalRule remove_larger_indices(std::size_t num_items) {
  return [num_items](std::span<const std::size_t> selected) {
    std::vector<std::size_t> out;
    if (selected.empty()) return out;
    for (std::size_t j = selected.back() + 1; j < num_items; ++j) out.push_back(j);
    return out;
  };
}

RemovalRule cycle_removal(const WeightedGraph& g) {
  return [&g](std::span<const std::size_t> selected) {
    DisjointSets ds(g.num_vertices());
    for (std::size_t j : selected) {
      const Edge& e = g.edges()[j];
      ds.merge(e.u, e.v);
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      const Edge& e = g.edges()[j];
      if (ds.same(e.u, e.v)) out.push_back(j);
    }
    return out;
  };
}

std::vector<std::size_t> ppsacr_run_log(std::span<const double> log_sizes,
                                        std::size_t k, const RemovalRule& rule,
                                        RngStream& r) {
  check_k(k);
  SamplingTree tree = SamplingTree::from_log_weights(log_sizes);
  std::vector<std::size_t> selected;
  while (selected.size() < k && tree.live_count() > 0) {
    const std::size_t j = tree.sample(r);
    selected.push_back(j);
    tree.remove(j);
    for (std::size_t extra : rule(selected)) {
      if (extra < tree.size() && tree.is_live(extra)) tree.remove(extra);
    }
  }
  return selected;
}

std::vector<std::size_t> ppsacr_run(std::span<const double> sizes, std::size_t k,
                                    const RemovalRule& rule, RngStream& r) {
  const std::vector<double> log_sizes = to_log_sizes(sizes);
  return ppsacr_run_log(log_sizes, k, rule, r);
}

std::vector<double> exponential_race_keys(std::span<const double> log_sizes,
                                          RngStream& r) {
  std::vector<double> keys(log_sizes.size());
  for (std::size_t j = 0; j < log_sizes.size(); ++j) {
    keys[j] = sample_ln_exponential(r) - log_sizes[j];
  }
  return keys;
}

std::vector<std::size_t> one_shot_from_keys(std::span<const double> keys,
                                            std::size_t k,
                                            const RemovalRule& rule) {
  check_k(k);
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b] || (keys[a] == keys[b] && a < b);
  });
  std::vector<char> gone(keys.size(), 0);
  std::vector<std::size_t> selected;
  for (std::size_t j : order) {
    if (selected.size() == k) break;
    if (gone[j]) continue;
    selected.push_back(j);
    gone[j] = 1;
    for (std::size_t extra : rule(selected)) {
      if (extra < gone.size()) gone[extra] = 1;
    }
  }
  return selected;
}

std::vector<std::size_t> one_shot_ppsacr_log(std::span<const double> log_sizes,
                                             std::size_t k,
                                             const RemovalRule& rule,
                                             RngStream& r) {
  if (log_sizes.empty()) {
    throw Error(ErrorCode::kEmpty, "item set must not be empty");
  }
  const std::vector<double> keys = exponential_race_keys(log_sizes, r);
  return one_shot_from_keys(keys, k, rule);
}

std::vector<std::size_t> one_shot_ppsacr(std::span<const double> sizes,
                                         std::size_t k, const RemovalRule& rule,
                                         RngStream& r) {
  const std::vector<double> log_sizes = to_log_sizes(sizes);
  return one_shot_ppsacr_log(log_sizes, k, rule, r);
}

}  // namespace dpmst
