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


#include "dpmst/instances.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dpmst/errors.h"

namespace dpmst {
namespace {

double BruteParity(std::uint64_t k, double p) {
  double sum = 0.0;
  for (std::uint64_t i = 0; i <= k; i += 2) {
    sum += std::tgamma(k + 1.0) / (std::tgamma(i + 1.0) * std::tgamma(k - i + 1.0)) *
           std::pow(p, static_cast<double>(i)) * std::pow(1 - p, static_cast<double>(k - i));
  }
  return sum;
}

// Mutual information from the joint law of two bits that agree with
// probability q, each marginally uniform.
double MiFromJoint(double q) {
  const double cells[] = {q / 2, q / 2, (1 - q) / 2, (1 - q) / 2};
  double mi = 0.0;
  for (double c : cells) {
    if (c > 0) mi += c * std::log2(c / 0.25);
  }
  return mi;
}

TEST(ErdosRenyi, CompleteGraph) {
  RngStream r(1);
  const auto g = erdos_renyi_instance(20, 1.0, 0.0, 1.0, r);
  EXPECT_EQ(g.num_edges(), 190u);
}

TEST(ErdosRenyi, Density) {
  RngStream r(2);
  const auto g = erdos_renyi_instance(1000, 0.05, 0.0, 1.0, r);
  EXPECT_NEAR(static_cast<double>(g.num_edges()) / (1000.0 * 999.0 / 2.0), 0.05, 0.005);
}

TEST(ErdosRenyi, WeightsInRange) {
  RngStream r(3);
  const auto g = erdos_renyi_instance(50, 0.3, -2.0, 7.0, r);
  for (double w : g.weights()) {
    EXPECT_GE(w, -2.0);
    EXPECT_LE(w, 7.0);
  }
}

TEST(ErdosRenyi, GivesUpOnHopelessDensity) {
  RngStream r(4);
  try {
    erdos_renyi_instance(50, 0.0, 0.0, 1.0, r, 1.0, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(MutualInformation, ReferenceValues) {
  EXPECT_NEAR(mi_weight(0.05, 1), 0.7136, 5e-4);
  EXPECT_NEAR(mi_weight(0.05, 2), 0.5471, 5e-4);
  EXPECT_NEAR(mi_weight(0.05, 3), 0.4277, 5e-4);
}

TEST(MutualInformation, MatchesJointLaw) {
  for (double p : {0.01, 0.05, 0.2, 0.45}) {
    for (std::uint64_t k = 1; k <= 10; ++k) {
      EXPECT_NEAR(mi_weight(p, k), MiFromJoint(BruteParity(k, p)), 1e-12);
    }
  }
}

TEST(MutualInformation, IndependenceLimit) {
  EXPECT_LT(mi_weight(0.4999999, 1), 1e-10);
  EXPECT_THROW(mi_weight(0.5, 1), Error);
  EXPECT_THROW(mi_weight(0.05, 0), Error);
}

TEST(Parity, Examples) {
  EXPECT_DOUBLE_EQ(parity_even_prob(1, 0.3), 0.7);
  for (std::uint64_t k = 1; k < 20; ++k) EXPECT_DOUBLE_EQ(parity_even_prob(k, 0.5), 0.5);
}

TEST(Parity, MatchesBinomialSum) {
  for (double p : {0.0, 0.05, 0.3, 0.77, 1.0}) {
    for (std::uint64_t k = 0; k <= 10; ++k) {
      EXPECT_NEAR(parity_even_prob(k, p), BruteParity(k, p), 1e-12);
    }
  }
}

TEST(MiChain, MstIsThePath) {
  for (std::size_t n : {2u, 4u, 17u, 50u}) {
    const auto g = mutual_info_chain_instance(n, 0.05, 10000);
    const auto t = kruskal_mst(g);
    ASSERT_EQ(t.size(), n - 1);
    for (EdgeId id : t.edge_ids) EXPECT_EQ(g.edge(id).v - g.edge(id).u, 1u);
  }
}

TEST(MiChain, FourVertexWeight) {
  const auto g = mutual_info_chain_instance(4, 0.05, 10000);
  EXPECT_NEAR(tree_weight(g, kruskal_mst(g)), -3 * 0.7136, 1e-3);
}

TEST(MiChain, Sensitivity) {
  const auto g = mutual_info_chain_instance(3, 0.05, 10000);
  EXPECT_NEAR(g.delta_inf(), 0.0013288, 1e-7);
}

TEST(Hard, WeightsInSupport) {
  RngStream r(5);
  const auto g = hard_instance(30, 0.5 * std::log(30.0), 10, r);
  EXPECT_EQ(g.num_edges(), 435u);
  EXPECT_DOUBLE_EQ(g.delta_inf(), 1.0);
  for (double w : g.weights()) {
    EXPECT_GE(w, 0.0);
    EXPECT_LE(w, 10.0);
    EXPECT_EQ(w, std::floor(w));
  }
}

TEST(InstanceSpec, DefaultsAndModels) {
  EXPECT_EQ(parse_instance_model("mi-chain"), InstanceModel::kMiChain);
  EXPECT_THROW(parse_instance_model("grid"), Error);
  InstanceSpec spec;
  spec.model = InstanceModel::kHard;
  spec.n = 12;
  spec.seed = 3;
  EXPECT_EQ(generate_instance(spec), generate_instance(spec));
}

TEST(InstanceIo, RoundTrip) {
  const auto g = WeightedGraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                                      {0.1, 1e-300, -3.5, 1.0 / 3.0, 7e20, 0.0}, 0.25);
  std::stringstream buf;
  write_instance(g, buf);
  EXPECT_EQ(read_instance(buf), g);
}

TEST(InstanceIo, CommentsAndBlankLines) {
  std::istringstream in("# header comment\n\n3 2 1\n# edge\n1 2 0.5\n\n2 3 1.5\n");
  const auto g = read_instance(in);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.weight(2), 1.5);
}

std::string ParseMessage(const std::string& text) {
  std::istringstream in(text);
  try {
    read_instance(in);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

TEST(InstanceIo, MalformedHeaderNamesLineOne) {
  EXPECT_NE(ParseMessage("three 2 1\n1 2 1\n").find("line 1"), std::string::npos);
}

TEST(InstanceIo, OtherErrors) {
  EXPECT_NE(ParseMessage("3 1 1\n1 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(ParseMessage("3 1 1\n1 2 1\n2 3 1\n").find("more edge"), std::string::npos);
  EXPECT_NE(ParseMessage("3 2 1\n1 2 1\n").find("expected 2"), std::string::npos);
  EXPECT_NE(ParseMessage("3 1 1\n1 4 1\n").find("range"), std::string::npos);
  EXPECT_NE(ParseMessage("3 1 1\n2 2 1\n").find("self-loop"), std::string::npos);
  EXPECT_NE(ParseMessage("").find("missing header"), std::string::npos);
}

TEST(InstanceIo, MissingFile) {
  try {
    read_instance(std::filesystem::path("/nonexistent/graph.txt"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace dpmst
