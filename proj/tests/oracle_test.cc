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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dpmst/errors.h"
#include "dpmst/harness.h"
#include "dpmst/instances.h"

namespace dpmst {
namespace {

WeightedGraph K4(std::vector<double> w) {
  return WeightedGraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                              std::move(w));
}

TEST(Enumerate, CayleyCounts) {
  EXPECT_EQ(enumerate_spanning_trees(triangle_graph(1, 2, 3)).size(), 3u);
  EXPECT_EQ(enumerate_spanning_trees(K4(std::vector<double>(6, 1))).size(), 16u);
  const auto path = WeightedGraph::build(4, {{1, 2}, {2, 3}, {3, 4}}, {1, 1, 1});
  EXPECT_EQ(enumerate_spanning_trees(path).size(), 1u);
  RngStream r(1);
  const auto k6 = erdos_renyi_instance(6, 1.0, 0, 1, r);
  EXPECT_EQ(enumerate_spanning_trees(k6).size(), 1296u);
}

TEST(Enumerate, Guards) {
  RngStream r(2);
  const auto big = erdos_renyi_instance(11, 1.0, 0, 1, r);
  try {
    enumerate_spanning_trees(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
  RngStream r2(3);
  const auto k6 = erdos_renyi_instance(6, 1.0, 0, 1, r2);
  EXPECT_THROW(enumerate_spanning_trees(k6, 100), Error);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_mst(triangle_graph(1, 2, 3)), SpanningTree({1, 2}));
  EXPECT_EQ(brute_force_mst(triangle_graph(1, 1, 1)), SpanningTree({1, 2}));
  const auto equal = K4(std::vector<double>(6, 2.0));
  EXPECT_EQ(brute_force_mst(equal), kruskal_mst(equal));
}

TEST(BruteForce, AgreesWithKruskalUnderTies) {
  RngStream r(4);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> w(6);
    for (double& x : w) x = static_cast<double>(r.next_u32() % 3);
    const auto g = K4(w);
    EXPECT_EQ(brute_force_mst(g), kruskal_mst(g));
  }
}

TEST(ExactPpsacr, TwoItems) {
  const std::vector<long double> s = {1, 1};
  const auto d = exact_ppsacr_distribution(s, 1, no_removal());
  EXPECT_EQ(d.support_size(), 2u);
  EXPECT_DOUBLE_EQ(static_cast<double>(d.probability({0})), 0.5);
  EXPECT_DOUBLE_EQ(static_cast<double>(d.probability({1})), 0.5);
}

TEST(ExactPpsacr, HandProducts) {
  const std::vector<long double> s = {1, 2, 3};
  const auto d = exact_ppsacr_distribution(s, 2, no_removal());
  EXPECT_EQ(d.support_size(), 6u);
  EXPECT_NEAR(static_cast<double>(d.probability({2, 1})), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(d.probability({1, 2})), 0.25, 1e-15);
  EXPECT_NEAR(static_cast<double>(d.probability({0, 1})), (1.0 / 6) * (2.0 / 5), 1e-15);
  EXPECT_NEAR(static_cast<double>(d.total()), 1.0, 1e-15);
}

TEST(ExactPpsacr, ScaleInvariant) {
  const std::vector<long double> s = {1, 2, 3, 0.5};
  std::vector<long double> scaled;
  for (auto x : s) scaled.push_back(x * 1e6L);
  const auto a = exact_ppsacr_distribution(s, 3, no_removal());
  const auto b = exact_ppsacr_distribution(scaled, 3, no_removal());
  for (const auto& [o, p] : a.probs) EXPECT_NEAR(static_cast<double>(p - b.probability(o)), 0, 1e-15);
}

TEST(ExactPpsacr, Guards) {
  const std::vector<long double> nine(9, 1.0L);
  EXPECT_THROW(exact_ppsacr_distribution(nine, 2, no_removal()), Error);
  const std::vector<long double> eight(8, 1.0L);
  EXPECT_THROW(exact_ppsacr_distribution(eight, 7, no_removal()), Error);
  const std::vector<long double> bad = {1.0L, 0.0L};
  EXPECT_THROW(exact_ppsacr_distribution(bad, 1, no_removal()), Error);
}

TEST(ExactPrivateMst, TriangleMarginal) {
  const auto g = triangle_graph(1, 2, 3);
  const auto tree_law = exact_private_mst_distribution(g, 1.0, 1.0);
  const std::vector<long double> s = {std::exp(-0.5L), std::exp(-1.0L), std::exp(-1.5L)};
  const auto seq = exact_ppsacr_distribution(s, 2, cycle_removal(g)).unordered();
  ASSERT_EQ(tree_law.support_size(), 3u);
  for (const auto& [o, p] : seq.probs) {
    Outcome ids;
    for (auto j : o) ids.push_back(j + 1);
    EXPECT_NEAR(static_cast<double>(tree_law.probability(ids) - p), 0, 1e-15);
  }
  // Hand computation: P({1,2}) = s1/S (s2/(s2+s3)) + s2/S (s1/(s1+s3)).
  const long double total = s[0] + s[1] + s[2];
  const long double p12 = s[0] / total * s[1] / (s[1] + s[2]) + s[1] / total * s[0] / (s[0] + s[2]);
  EXPECT_NEAR(static_cast<double>(tree_law.probability({1, 2}) - p12), 0, 1e-15);
}

TEST(ExactPrivateMst, SymmetricTriangle) {
  const auto sym = exact_private_mst_distribution(triangle_graph(4, 4, 4), 3.0, 1.0);
  for (const auto& [o, p] : sym.probs) EXPECT_NEAR(static_cast<double>(p), 1.0 / 3, 1e-15);
}

// With equal sizes every edge order is equally likely, so the law is that of
// Kruskal over a uniformly random permutation of the edges.
ExactDistribution PermutationLaw(const WeightedGraph& g) {
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  ExactDistribution law;
  long double count = 0.0L;
  do {
    std::vector<double> rank(g.num_edges());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<double>(i);
    law.probs[tree_outcome(kruskal_mst(g, rank))] += 1.0L;
    count += 1.0L;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& [o, p] : law.probs) p /= count;
  return law;
}

TEST(ExactPrivateMst, EqualWeightsMatchRandomEdgeOrder) {
  const auto k4 = K4(std::vector<double>(6, 1.0));
  const auto law = exact_private_mst_distribution(k4, 1.0, 1.0);
  const auto perm = PermutationLaw(k4);
  ASSERT_EQ(law.support_size(), 16u);
  for (const auto& [o, p] : perm.probs) {
    EXPECT_NEAR(static_cast<double>(law.probability(o) - p), 0, 1e-15);
  }
  // Stars are more likely than paths; the law is not uniform.
  EXPECT_NEAR(static_cast<double>(law.probability({1, 2, 3})), 1.0 / 15, 1e-15);
  EXPECT_NEAR(static_cast<double>(law.probability({1, 4, 6})), 11.0 / 180, 1e-15);
}

TEST(ExactPrivateMst, TinyEpsilonApproachesRandomEdgeOrder) {
  const auto g = K4({1, 5, 2, 9, 3, 7});
  const auto flat = exact_private_mst_distribution(g, 1e-12, 1.0);
  const auto perm = PermutationLaw(K4(std::vector<double>(6, 0.0)));
  for (const auto& [o, p] : perm.probs) {
    EXPECT_NEAR(static_cast<double>(flat.probability(o) - p), 0, 1e-9);
  }
}

TEST(ExactPrivateMst, ConcentratesOnMst) {
  const auto g = K4({1, 5, 2, 9, 3, 7});
  long double prev = 0.0L;
  const Outcome mst = tree_outcome(kruskal_mst(g));
  for (double eps : {1.0, 4.0, 16.0, 64.0}) {
    const long double p = exact_private_mst_distribution(g, eps, 1.0).probability(mst);
    EXPECT_GT(p, prev);
    prev = p;
  }
  EXPECT_GT(prev, 0.99L);
}

TEST(ChiSquare, PerfectFit) {
  ExactDistribution d;
  d.probs[{0}] = 0.2L;
  d.probs[{1}] = 0.3L;
  d.probs[{2}] = 0.5L;
  const auto res = chi_square_gof({{{0}, 200}, {{1}, 300}, {{2}, 500}}, d, 0.01);
  EXPECT_DOUBLE_EQ(res.statistic, 0.0);
  EXPECT_TRUE(res.passed);
  EXPECT_EQ(res.dof, 2u);
}

TEST(ChiSquare, AllMassOnOneOutcome) {
  ExactDistribution d;
  for (std::size_t i = 0; i < 3; ++i) d.probs[{i}] = 1.0L / 3;
  const auto res = chi_square_gof({{{0}, 300}}, d, 0.999);
  EXPECT_NEAR(res.statistic, 600.0, 1e-9);
  EXPECT_FALSE(res.passed);
}

TEST(ChiSquare, OutsideSupportFails) {
  ExactDistribution d;
  d.probs[{0}] = 0.5L;
  d.probs[{1}] = 0.5L;
  const auto res = chi_square_gof({{{0}, 50}, {{1}, 49}, {{7}, 1}}, d, 1e-9);
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(res.outside_support, 1u);
}

TEST(ChiSquare, MergesSmallBins) {
  ExactDistribution d;
  d.probs[{0}] = 0.9L;
  d.probs[{1}] = 0.06L;
  d.probs[{2}] = 0.02L;
  d.probs[{3}] = 0.02L;
  const auto res = chi_square_gof({{{0}, 180}, {{1}, 12}, {{2}, 4}, {{3}, 4}}, d, 0.01);
  EXPECT_EQ(res.bins, 3u);
  EXPECT_EQ(res.dof, 2u);
  ExactDistribution point;
  point.probs[{0}] = 1.0L;
  EXPECT_THROW(chi_square_gof({{{0}, 1}}, point, 0.01), Error);
}

TEST(ChiSquare, CalibratedUnderTheNull) {
  ExactDistribution d;
  const long double probs[] = {0.1L, 0.2L, 0.3L, 0.4L};
  for (std::size_t i = 0; i < 4; ++i) d.probs[{i}] = probs[i];
  int passes = 0;
  for (std::uint64_t meta = 0; meta < 100; ++meta) {
    RngStream r(5, meta);
    std::map<Outcome, std::uint64_t> counts;
    for (int i = 0; i < 5000; ++i) {
      const double u = r.uniform();
      const std::size_t k = u < 0.1 ? 0 : u < 0.3 ? 1 : u < 0.6 ? 2 : 3;
      ++counts[{k}];
    }
    passes += chi_square_gof(counts, d, 0.001).passed;
  }
  EXPECT_GE(passes, 99);
}

}  // namespace
}  // namespace dpmst
