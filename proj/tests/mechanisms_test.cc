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


#include "dpmst/mechanisms.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "dpmst/errors.h"
#include "dpmst/harness.h"
#include "dpmst/instances.h"
#include "dpmst/oracle.h"
#include "dpmst/stats.h"

namespace dpmst {
namespace {

constexpr double kEuler = 0.57721566490153286;

const MechanismId kTreeMechanisms[] = {MechanismId::kPerturb, MechanismId::kKruskal,
                                       MechanismId::kOnePass, MechanismId::kPamst};

WeightedGraph PathGraph(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return WeightedGraph::build(n, edges, std::vector<double>(n - 1, w));
}

TEST(PerturbNoise, VanishesForHugeEpsilon) {
  const auto g = triangle_graph(1, 2, 3);
  RngStream r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto noisy = perturb_exponential_noise(g, 1e9, 1.0, r);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_LT(std::fabs(noisy[j] - g.weights()[j]), 1e-6);
  }
}

TEST(PerturbNoise, MeanIsMinusEuler) {
  const auto g = WeightedGraph::build(2, {{1, 2}}, {0.0});
  RngStream r(2);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += perturb_exponential_noise(g, 2.0, 1.0, r)[0];
  EXPECT_NEAR(sum / n, -kEuler, 0.01);
}

TEST(PerturbNoise, ScaledNoiseIsGumbel) {
  const auto g = WeightedGraph::build(2, {{1, 2}}, {5.0});
  const double eps_prime = 0.3;
  const double delta_inf = 2.0;
  RngStream r(3);
  std::vector<double> xs(100000);
  for (double& x : xs) {
    x = -(perturb_exponential_noise(g, eps_prime, delta_inf, r)[0] - 5.0) * eps_prime /
        (2.0 * delta_inf);
  }
  EXPECT_TRUE(ks_test(xs, [](double z) { return std::exp(-std::exp(-z)); }, 0.01).passed);
}

TEST(Mechanisms, SymmetricTriangleIsUniform) {
  const auto g = triangle_graph(0, 0, 0);
  for (MechanismId id : {MechanismId::kPerturb, MechanismId::kKruskal, MechanismId::kOnePass}) {
    const auto budget = PrivacyBudget::from_eps_prime(0.7, 2, 1e-6);
    const auto chi = check_sampler_against_oracle(
        g, 0.7, [&](RngStream& r) { return run_mechanism(id, g, budget, r).tree; }, 60000,
        0.001, 10 + static_cast<int>(id));
    EXPECT_TRUE(chi.passed) << mechanism_name(id);
  }
}

TEST(Mechanisms, TriangleMatchesExactLaw) {
  const auto g = triangle_graph(1, 2, 3);
  const auto budget = PrivacyBudget::from_eps_prime(1.0, 2, 1e-6);
  for (MechanismId id : {MechanismId::kPerturb, MechanismId::kKruskal, MechanismId::kOnePass}) {
    const auto chi = check_sampler_against_oracle(
        g, 1.0, [&](RngStream& r) { return run_mechanism(id, g, budget, r).tree; }, 200000,
        0.001, 20 + static_cast<int>(id));
    EXPECT_TRUE(chi.passed) << mechanism_name(id) << " chi2=" << chi.statistic;
  }
}

TEST(Mechanisms, HugeEpsilonFindsTrueMst) {
  RngStream gen(4);
  const auto g = erdos_renyi_instance(30, 0.4, 0.0, 100.0, gen);
  const auto budget = PrivacyBudget::from_eps_prime(1e7, 29, 1e-6);
  const SpanningTree optimum = kruskal_mst(g);
  for (MechanismId id : kTreeMechanisms) {
    int hits = 0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
      RngStream r(5, t);
      hits += run_mechanism(id, g, budget, r).tree == optimum;
    }
    EXPECT_GE(hits, 999) << mechanism_name(id);
  }
}

TEST(Mechanisms, OnePassSharesPerturbationRandomness) {
  RngStream gen(6);
  for (int i = 0; i < 10; ++i) {
    const auto g = erdos_renyi_instance(25, 0.3, 0.0, 10.0, gen, 0.5);
    const auto budget = PrivacyBudget::from_eps_delta(2.0, 1e-6, 0.5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      RngStream a(seed);
      RngStream b(seed);
      EXPECT_EQ(one_pass_private_kruskal(g, budget, a).tree,
                private_mst_input_perturbation(g, budget, b).tree);
    }
  }
}

TEST(Mechanisms, TreeInputReturnsItself) {
  const auto g = PathGraph(8, 3.0);
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  for (MechanismId id : all_mechanisms()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RngStream r(seed);
      EXPECT_EQ(run_mechanism(id, g, budget, r).tree, SpanningTree({1, 2, 3, 4, 5, 6, 7}));
    }
  }
}

TEST(Mechanisms, SingleEdgeAndSingleVertex) {
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  const auto edge = PathGraph(2);
  const auto lone = WeightedGraph::build(1, {}, {});
  for (MechanismId id : all_mechanisms()) {
    RngStream r(7);
    EXPECT_EQ(run_mechanism(id, edge, budget, r).tree, SpanningTree({1}));
    EXPECT_TRUE(run_mechanism(id, lone, budget, r).tree.edge_ids.empty());
  }
}

TEST(Mechanisms, RejectDisconnected) {
  const auto g = WeightedGraph::build(4, {{1, 2}, {3, 4}}, {1.0, 1.0}, 1.0,
                                      Connectivity::kAllow);
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  for (MechanismId id : all_mechanisms()) {
    RngStream r(8);
    try {
      run_mechanism(id, g, budget, r);
      ADD_FAILURE() << mechanism_name(id);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
    }
  }
}

TEST(Mechanisms, OutputsAreSpanningTrees) {
  RngStream gen(9);
  const auto budget = PrivacyBudget::from_eps_delta(0.5, 1e-6);
  for (int i = 0; i < 20; ++i) {
    const auto g = erdos_renyi_instance(40, 0.2, -5.0, 5.0, gen);
    for (MechanismId id : all_mechanisms()) {
      RngStream r(10, static_cast<std::uint64_t>(i));
      EXPECT_TRUE(is_spanning_tree(g, run_mechanism(id, g, budget, r).tree));
    }
  }
}

TEST(Mechanisms, NoisyWeightFlags) {
  const auto g = triangle_graph(1, 2, 3);
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  RngStream r(11);
  const auto perturb = run_mechanism(MechanismId::kPerturb, g, budget, r);
  ASSERT_TRUE(perturb.noisy_weights.has_value());
  EXPECT_FALSE(perturb.noisy_weights_private);
  const auto sealfon = run_mechanism(MechanismId::kSealfonGauss, g, budget, r);
  ASSERT_TRUE(sealfon.noisy_weights.has_value());
  EXPECT_TRUE(sealfon.noisy_weights_private);
  EXPECT_FALSE(run_mechanism(MechanismId::kKruskal, g, budget, r).noisy_weights.has_value());
}

TEST(Sealfon, LaplaceNoiseScalesWithEdgeCount) {
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  auto noise_sd = [&](std::size_t m, int trials) {
    const auto g = PathGraph(m + 1, 0.0);
    std::vector<double> diffs;
    for (int t = 0; t < trials; ++t) {
      RngStream r(12, static_cast<std::uint64_t>(t));
      const auto res = sealfon_input_privatization(g, budget, SealfonMode::kLaplacePure, r);
      diffs.insert(diffs.end(), res.noisy_weights->begin(), res.noisy_weights->end());
    }
    return summarize(diffs).stddev;
  };
  EXPECT_NEAR(noise_sd(100, 200) / noise_sd(10, 2000), 10.0, 0.5);
}

TEST(Pamst, PathIsReturned) {
  const auto g = PathGraph(20, 1.0);
  const auto budget = PrivacyBudget::from_eps_delta(0.1, 1e-6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RngStream r(seed);
    EXPECT_EQ(pamst(g, budget, r).tree.size(), 19u);
  }
}

// Exact law of Prim with exponential-mechanism selection over the cut.
void PamstLaw(const WeightedGraph& g, double a, std::vector<char>& in_tree,
              std::vector<EdgeId>& chosen, long double prob, ExactDistribution& out) {
  if (chosen.size() + 1 == g.num_vertices()) {
    std::vector<EdgeId> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.probs[Outcome(sorted.begin(), sorted.end())] += prob;
    return;
  }
  std::vector<EdgeId> cut;
  long double total = 0.0L;
  for (EdgeId id = 1; id <= g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (in_tree[e.u] != in_tree[e.v]) {
      cut.push_back(id);
      total += std::exp(-a * static_cast<long double>(g.weight(id)));
    }
  }
  for (EdgeId id : cut) {
    const Edge& e = g.edge(id);
    const Vertex fresh = in_tree[e.u] ? e.v : e.u;
    const long double p = std::exp(-a * static_cast<long double>(g.weight(id))) / total;
    in_tree[fresh] = 1;
    chosen.push_back(id);
    PamstLaw(g, a, in_tree, chosen, prob * p, out);
    chosen.pop_back();
    in_tree[fresh] = 0;
  }
}

TEST(Pamst, MatchesExactPrimLaw) {
  const auto k4 = WeightedGraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                                       {1.0, 3.0, 0.5, 2.0, 4.0, 1.5});
  const auto sparse = WeightedGraph::build(
      5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 4}}, {2.0, 0.0, 1.0, 3.0, 0.5, 1.0});
  for (const WeightedGraph* g : {&k4, &sparse}) {
    const double eps_prime = 1.2;
    ExactDistribution exact;
    std::vector<char> in_tree(g->num_vertices() + 1, 0);
    in_tree[1] = 1;
    std::vector<EdgeId> chosen;
    PamstLaw(*g, eps_prime / 2.0, in_tree, chosen, 1.0L, exact);
    EXPECT_NEAR(static_cast<double>(exact.total()), 1.0, 1e-15);
    const auto budget = PrivacyBudget::from_eps_prime(eps_prime, g->num_vertices() - 1, 1e-6);
    std::map<Outcome, std::uint64_t> counts;
    for (std::uint64_t t = 0; t < 100000; ++t) {
      RngStream r(30, t);
      ++counts[tree_outcome(pamst(*g, budget, r).tree)];
    }
    EXPECT_TRUE(chi_square_gof(counts, exact, 0.001).passed);
  }
}

TEST(Pamst, ErrorResemblesInputPerturbation) {
  RngStream gen(13);
  const auto g = erdos_renyi_instance(256, 1.0, 0.0, 100.0, gen, 0.1);
  const auto budget = PrivacyBudget::from_rho(1.0, 1e-6, 0.1);
  const auto a = run_trials(g, MechanismId::kPerturb, budget, 50, 14, {4});
  const auto b = run_trials(g, MechanismId::kPamst, budget, 50, 15, {4});
  EXPECT_LE(a.error.ci95_low, b.error.ci95_high);
  EXPECT_LE(b.error.ci95_low, a.error.ci95_high);
}

TEST(PrivateKruskal, EdgeChecksAreLogarithmic) {
  RngStream gen(16);
  const std::size_t n = 128;
  const auto g = erdos_renyi_instance(n, 0.5, 0.0, 1.0, gen);
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  RngStream r(17);
  const auto res = private_kruskal(g, budget, r);
  const auto bound = 2 * static_cast<std::uint32_t>(std::ceil(std::log2(n))) + 2;
  EXPECT_LE(res.ops.max_edge_checks(), bound);
  EXPECT_EQ(res.ops.samples, n - 1);
}

TEST(PrivateKruskal, ExtremeEpsilonStaysFinite) {
  RngStream gen(18);
  const auto g = erdos_renyi_instance(60, 0.3, 0.0, 1000.0, gen);
  const auto budget = PrivacyBudget::from_eps_prime(1e4, 59, 1e-6);
  RngStream r(19);
  EXPECT_EQ(private_kruskal(g, budget, r).tree, kruskal_mst(g));
  RngStream r2(19);
  EXPECT_EQ(pamst(g, budget, r2).tree, kruskal_mst(g));
}

TEST(MechanismNames, RoundTrip) {
  for (MechanismId id : all_mechanisms()) {
    EXPECT_EQ(parse_mechanism(mechanism_name(id)), id);
  }
  EXPECT_EQ(all_mechanisms().size(), 6u);
  try {
    parse_mechanism("prim");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMechanism);
  }
}

TEST(InputPerturbation, AcceptsAnyMstAlgorithm) {
  RngStream gen(20);
  const auto g = erdos_renyi_instance(30, 0.5, 0.0, 1.0, gen);
  const auto budget = PrivacyBudget::from_eps_delta(1.0, 1e-6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RngStream a(seed);
    RngStream b(seed);
    EXPECT_EQ(private_mst_input_perturbation(g, budget, a).tree,
              private_mst_input_perturbation(g, budget, prim_mst, b).tree);
  }
}

}  // namespace
}  // namespace dpmst
