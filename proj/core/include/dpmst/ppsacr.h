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

// Sequential weighted sampling with adaptive candidate removal.
//
// Items are indexed 0..|U|-1 and carry positive sizes s(j). Each step draws a
// live candidate with probability proportional to its size, appends it to the
// selection, and removes it together with rule(selection). The exponential
// race draws one key Exp(1) / s(j) per item up front and then repeatedly takes
// the live item with the smallest key; both produce the same distribution over
// selection sequences.

#ifndef DPMST_PPSACR_H_
#define DPMST_PPSACR_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dpmst/graph.h"
#include "dpmst/rng.h"

namespace dpmst {

// Maps the selection so far (in pick order) to extra items to drop from the
// candidate set. Must be a pure function of its argument: the exact-
// distribution oracle calls it on arbitrary prefixes. Returning an item that
// is already gone is harmless.
using RemovalRule =
    std::function<std::vector<std::size_t>(std::span<const std::size_t> selected)>;

// f == {} for every prefix.
RemovalRule no_removal();
// Drops every item with an index larger than the latest pick.
RemovalRule remove_larger_indices(std::size_t num_items);
// Items are the edges of `g` (item j is edge j + 1); drops every edge that
// would close a cycle with the selection. `g` must outlive the rule.
RemovalRule cycle_removal(const WeightedGraph& g);

// Stops after k picks or when no candidate is left, so the result may be
// shorter than k.
std::vector<std::size_t> ppsacr_run(std::span<const double> sizes, std::size_t k,
                                    const RemovalRule& rule, RngStream& r);
// Same, with sizes given as ln s(j).
std::vector<std::size_t> ppsacr_run_log(std::span<const double> log_sizes,
                                        std::size_t k, const RemovalRule& rule,
                                        RngStream& r);

// Race keys ln(Exp(1)) - ln s(j), one Exp(1) draw per item in index order.
// Ordering by these keys is ordering by Exp(1) / s(j).
std::vector<double> exponential_race_keys(std::span<const double> log_sizes,
                                          RngStream& r);

std::vector<std::size_t> one_shot_ppsacr(std::span<const double> sizes,
                                         std::size_t k, const RemovalRule& rule,
                                         RngStream& r);
std::vector<std::size_t> one_shot_ppsacr_log(std::span<const double> log_sizes,
                                             std::size_t k,
                                             const RemovalRule& rule,
                                             RngStream& r);
// Runs the race on precomputed keys. Ties go to the lower index.
std::vector<std::size_t> one_shot_from_keys(std::span<const double> keys,
                                            std::size_t k,
                                            const RemovalRule& rule);

}  // namespace dpmst

#endif  // DPMST_PPSACR_H_
