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


#include "dpmst/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "dpmst/errors.h"
#include "dpmst/stats.h"

namespace dpmst {

namespace {

constexpr std::size_t kMaxEnumVertices = 10;
constexpr std::size_t kMaxItems = 8;
constexpr std::size_t kMaxPicks = 6;

void guard(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kGuardExceeded, message);
}

struct Neumaier {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + comp; }
};

void enumerate(const WeightedGraph& g, std::size_t next, DisjointSets ds,
               std::vector<EdgeId>& chosen, std::vector<SpanningTree>& out,
               std::size_t max_trees) {
  const std::size_t need = g.num_vertices() - 1 - chosen.size();
  if (need == 0) {
    guard(out.size() < max_trees, "too many spanning trees to enumerate");
    out.emplace_back(chosen);
    return;
  }
  if (g.num_edges() - next < need) return;
  const Edge& e = g.edges()[next];
  if (!ds.same(e.u, e.v)) {
    DisjointSets with = ds;
    with.merge(e.u, e.v);
    chosen.push_back(static_cast<EdgeId>(next + 1));
    enumerate(g, next + 1, std::move(with), chosen, out, max_trees);
    chosen.pop_back();
  }
  enumerate(g, next + 1, std::move(ds), chosen, out, max_trees);
}

// Descending id lists; the lexicographically smaller one is Kruskal's choice.
bool kruskal_prefers(const SpanningTree& a, const SpanningTree& b) {
  return std::lexicographical_compare(a.edge_ids.rbegin(), a.edge_ids.rend(),
                                      b.edge_ids.rbegin(), b.edge_ids.rend());
}

void ppsacr_dfs(std::span<const long double> sizes, std::size_t k,
                const RemovalRule& rule, std::vector<char>& live,
                std::vector<std::size_t>& prefix, long double prob,
                ExactDistribution& out) {
  Neumaier mass;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (live[j]) mass.add(sizes[j]);
  }
  if (prefix.size() == k || mass.value() <= 0.0L) {
    out.probs[prefix] += prob;
    return;
  }
  const long double total = mass.value();
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (!live[j]) continue;
    std::vector<char> next = live;
    next[j] = 0;
    prefix.push_back(j);
    for (std::size_t x : rule(prefix)) {
      if (x < next.size()) next[x] = 0;
    }
    ppsacr_dfs(sizes, k, rule, next, prefix, prob * sizes[j] / total, out);
    prefix.pop_back();
  }
}

}  // namespace

long double ExactDistribution::total() const {
  Neumaier acc;
  for (const auto& [outcome, p] : probs) acc.add(p);
  return acc.value();
}

long double ExactDistribution::probability(const Outcome& o) const {
  const auto it = probs.find(o);
  return it == probs.end() ? 0.0L : it->second;
}

ExactDistribution ExactDistribution::unordered() const {
  ExactDistribution out;
  for (const auto& [outcome, p] : probs) {
    Outcome key = outcome;
    std::sort(key.begin(), key.end());
    out.probs[key] += p;
  }
  return out;
}

std::vector<SpanningTree> enumerate_spanning_trees(const WeightedGraph& g,
                                                   std::size_t max_trees) {
  guard(g.num_vertices() <= kMaxEnumVertices,
        "spanning tree enumeration is limited to " +
            std::to_string(kMaxEnumVertices) + " vertices");
  std::vector<SpanningTree> out;
  std::vector<EdgeId> chosen;
  enumerate(g, 0, DisjointSets(g.num_vertices()), chosen, out, max_trees);
  return out;
}

SpanningTree brute_force_mst(const WeightedGraph& g) {
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
  if (trees.empty()) throw Error(ErrorCode::kDisconnected, "graph has no spanning tree");
  const SpanningTree* best = &trees.front();
  double best_w = tree_weight(g, *best);
  for (const SpanningTree& t : trees) {
    const double w = tree_weight(g, t);
    if (w < best_w || (w == best_w && kruskal_prefers(t, *best))) {
      best = &t;
      best_w = w;
    }
  }
  return *best;
}

ExactDistribution exact_ppsacr_distribution(std::span<const long double> sizes,
                                            std::size_t k, const RemovalRule& rule) {
  guard(sizes.size() <= kMaxItems, "exact PPSACR is limited to 8 items");
  guard(k <= kMaxPicks, "exact PPSACR is limited to k <= 6");
  for (long double s : sizes) {
    if (!(s > 0.0L) || !std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidArgument, "sizes must be positive and finite");
    }
  }
  ExactDistribution out;
  std::vector<char> live(sizes.size(), 1);
  std::vector<std::size_t> prefix;
  ppsacr_dfs(sizes, k, rule, live, prefix, 1.0L, out);
  return out;
}

ExactDistribution exact_private_mst_distribution(const WeightedGraph& g,
                                                 double eps_prime, double delta_inf) {
  if (!(eps_prime > 0.0) || !(delta_inf > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps_prime and delta_inf must be positive");
  }
  if (!g.connected()) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  guard(g.num_edges() <= kMaxItems, "exact private MST is limited to 8 edges");
  const double wmin = g.num_edges() == 0
                          ? 0.0
                          : *std::min_element(g.weights().begin(), g.weights().end());
  const long double a = static_cast<long double>(eps_prime) / (2.0L * delta_inf);
  std::vector<long double> sizes(g.num_edges());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    sizes[i] = std::exp(-a * (static_cast<long double>(g.weights()[i]) - wmin));
  }
  const ExactDistribution seq =
      exact_ppsacr_distribution(sizes, g.num_vertices() - 1, cycle_removal(g));
  ExactDistribution out;
  for (const auto& [outcome, p] : seq.probs) {
    Outcome ids;
    for (std::size_t j : outcome) ids.push_back(j + 1);
    std::sort(ids.begin(), ids.end());
    out.probs[ids] += p;
  }
  return out;
}

Outcome tree_outcome(const SpanningTree& t) {
  return Outcome(t.edge_ids.begin(), t.edge_ids.end());
}

ChiSquareResult chi_square_gof(const std::map<Outcome, std::uint64_t>& counts,
                               const ExactDistribution& exact, double alpha) {
  ChiSquareResult result;
  std::uint64_t n = 0;
  for (const auto& [outcome, c] : counts) {
    n += c;
    if (c > 0 && !(exact.probability(outcome) > 0.0L)) result.outside_support += c;
  }
  if (n == 0) throw Error(ErrorCode::kEmpty, "no observations");

  std::vector<std::pair<double, double>> cells;  // (expected, observed)
  for (const auto& [outcome, p] : exact.probs) {
    if (!(p > 0.0L)) continue;
    const auto it = counts.find(outcome);
    const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    cells.emplace_back(static_cast<double>(p * n), observed);
  }
  if (cells.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "support needs at least two outcomes");
  }
  std::sort(cells.begin(), cells.end());
  std::vector<std::pair<double, double>> bins;
  std::pair<double, double> acc{0.0, 0.0};
  for (const auto& cell : cells) {
    acc.first += cell.first;
    acc.second += cell.second;
    if (acc.first >= 5.0) {
      bins.push_back(acc);
      acc = {0.0, 0.0};
    }
  }
  if (acc.first > 0.0 || acc.second > 0.0) {
    if (bins.empty()) {
      bins.push_back(acc);
    } else {
      bins.back().first += acc.first;
      bins.back().second += acc.second;
    }
  }
  result.bins = bins.size();
  if (bins.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "too few observations for a chi-square test");
  }
  result.dof = bins.size() - 1;
  for (const auto& [e, o] : bins) result.statistic += (o - e) * (o - e) / e;
  result.critical = chi_square_critical(static_cast<double>(result.dof), alpha);
  if (result.outside_support > 0) {
    result.statistic = std::numeric_limits<double>::infinity();
  }
  result.p_value = chi_square_sf(result.statistic, static_cast<double>(result.dof));
  result.passed = result.outside_support == 0 && result.statistic <= result.critical;
  return result;
}

}  // namespace dpmst
