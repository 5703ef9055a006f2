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

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "dpmst/errors.h"
#include "dpmst/ppsacr.h"
#include "dpmst/sampling_tree.h"

namespace dpmst {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<MechanismId, std::string_view>, 6> kNames = {{
    {MechanismId::kPerturb, "perturb"},
    {MechanismId::kKruskal, "kruskal"},
    {MechanismId::kOnePass, "onepass"},
    {MechanismId::kPamst, "pamst"},
    {MechanismId::kSealfonLaplace, "sealfon-laplace"},
    {MechanismId::kSealfonGauss, "sealfon-gauss"},
}};

void require_connected(const WeightedGraph& g) {
  if (!g.connected()) {
    throw Error(ErrorCode::kDisconnected, "mechanisms need a connected graph");
  }
}

double eps_prime_for(const WeightedGraph& g, const PrivacyBudget& budget) {
  return budget.eps_round_for(g.num_vertices() - 1);
}

// Exponential-mechanism log-weights -eps' * w / (2 delta_inf).
std::vector<double> selection_log_weights(const WeightedGraph& g,
                                          double eps_prime, double delta_inf) {
  const double a = eps_prime / (2.0 * delta_inf);
  std::vector<double> out(g.num_edges());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a * g.weights()[i];
  return out;
}

template <typename Body>
MechanismResult timed(const WeightedGraph& g, Body&& body) {
  require_connected(g);
  const auto start = Clock::now();
  MechanismResult result;
  if (g.num_vertices() > 1) body(result);
  result.wall_time =
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

}  // namespace

std::uint32_t OpsCounter::max_edge_checks() const {
  return edge_checks.empty()
             ? 0
             : *std::max_element(edge_checks.begin(), edge_checks.end());
}

std::string_view mechanism_name(MechanismId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

MechanismId parse_mechanism(std::string_view name) {
  for (const auto& [key, known] : kNames) {
    if (known == name) return key;
  }
  throw Error(ErrorCode::kUnknownMechanism,
              "unknown mechanism '" + std::string(name) + "'");
}

std::vector<MechanismId> all_mechanisms() {
  std::vector<MechanismId> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

std::vector<double> perturb_exponential_noise(const WeightedGraph& g,
                                              double eps_prime, double delta_inf,
                                              RngStream& r) {
  if (!(eps_prime > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps_prime must be positive");
  }
  if (!(delta_inf > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta_inf must be positive");
  }
  const double scale = delta_inf * 2.0 / eps_prime;
  std::vector<double> noisy(g.weights().begin(), g.weights().end());
  for (double& w : noisy) w += scale * sample_ln_exponential(r);
  return noisy;
}

MechanismResult private_mst_input_perturbation(const WeightedGraph& g,
                                               const PrivacyBudget& budget,
                                               const MstAlgorithm& mst_algo,
                                               RngStream& r) {
  return timed(g, [&](MechanismResult& out) {
    const double eps_prime = eps_prime_for(g, budget);
    std::vector<double> noisy =
        perturb_exponential_noise(g, eps_prime, budget.delta_inf(), r);
    out.tree = mst_algo(g, noisy);
    out.noisy_weights = std::move(noisy);
    out.noisy_weights_private = false;
  });
}

MechanismResult private_mst_input_perturbation(const WeightedGraph& g,
                                               const PrivacyBudget& budget,
                                               RngStream& r) {
  return private_mst_input_perturbation(
      g, budget,
      [](const WeightedGraph& graph, std::span<const double> w) {
        return kruskal_mst(graph, w);
      },
      r);
}

MechanismResult private_kruskal(const WeightedGraph& g, const PrivacyBudget& budget,
                                RngStream& r) {
  return timed(g, [&](MechanismResult& out) {
    const std::size_t n = g.num_vertices();
    const double eps_prime = eps_prime_for(g, budget);
    const std::vector<double> log_w =
        selection_log_weights(g, eps_prime, budget.delta_inf());
    SamplingTree candidates = SamplingTree::from_log_weights(log_w);
    DisjointSets components(n);
    OpsCounter& ops = out.ops;
    ops.edge_checks.assign(g.num_edges(), 0);

    std::vector<EdgeId> picked;
    picked.reserve(n - 1);
    for (std::size_t round = 0; round + 1 < n; ++round) {
      const std::size_t leaf = candidates.sample(r);
      ++ops.samples;
      const auto id = static_cast<EdgeId>(leaf + 1);
      const Edge e = g.edges()[leaf];
      picked.push_back(id);
      candidates.remove(leaf);
      ++ops.tree_updates;

      // Scan the smaller side; every edge from it into the larger side would
      // now close a cycle.
      Vertex small = e.u;
      Vertex large = e.v;
      if (components.component_size(small) > components.component_size(large)) {
        std::swap(small, large);
      }
      const Vertex large_root = components.find(large);
      for (Vertex x : components.members(small)) {
        for (EdgeId other_id : g.incident(x)) {
          ++ops.edge_checks[other_id - 1];
          if (!candidates.is_live(other_id - 1)) continue;
          const Edge& f = g.edges()[other_id - 1];
          const Vertex y = f.u == x ? f.v : f.u;
          if (components.find(y) == large_root) {
            candidates.remove(other_id - 1);
            ++ops.tree_updates;
          }
        }
      }
      components.merge(e.u, e.v);
    }
    ops.rebases = candidates.rebase_count();
    out.tree = SpanningTree(std::move(picked));
  });
}

MechanismResult one_pass_private_kruskal(const WeightedGraph& g,
                                         const PrivacyBudget& budget,
                                         RngStream& r) {
  return timed(g, [&](MechanismResult& out) {
    const double eps_prime = eps_prime_for(g, budget);
    const std::vector<double> log_w =
        selection_log_weights(g, eps_prime, budget.delta_inf());
    // ln(Exp(1) / s(e)); Kruskal only needs the order, and ln is monotone.
    const std::vector<double> keys = exponential_race_keys(log_w, r);
    out.ops.samples = keys.size();
    out.tree = kruskal_mst(g, keys);
  });
}

MechanismResult sealfon_input_privatization(const WeightedGraph& g,
                                            const PrivacyBudget& budget,
                                            SealfonMode mode, RngStream& r) {
  return timed(g, [&](MechanismResult& out) {
    const std::size_t m = g.num_edges();
    std::vector<double> noisy(g.weights().begin(), g.weights().end());
    if (mode == SealfonMode::kLaplacePure) {
      const double scale =
          laplace_scale_for_input_privatization(budget.epsilon(), m, budget.delta_inf());
      for (double& w : noisy) w += sample_laplace(r, scale);
    } else {
      const double sigma =
          gaussian_sigma_for_input_privatization(budget.rho(), m, budget.delta_inf());
      for (double& w : noisy) w += sample_gaussian(r, sigma);
    }
    out.ops.samples = m;
    out.tree = kruskal_mst(g, noisy);
    out.noisy_weights = std::move(noisy);
    out.noisy_weights_private = true;
  });
}

MechanismResult pamst(const WeightedGraph& g, const PrivacyBudget& budget,
                      RngStream& r) {
  return timed(g, [&](MechanismResult& out) {
    const std::size_t n = g.num_vertices();
    const double eps_prime = eps_prime_for(g, budget);
    const std::vector<double> log_w =
        selection_log_weights(g, eps_prime, budget.delta_inf());
    // Live leaves are exactly the edges crossing the current cut.
    SamplingTree cut = SamplingTree::from_log_weights(log_w, /*all_live=*/false);
    std::vector<char> in_tree(n + 1, 0);
    OpsCounter& ops = out.ops;

    auto absorb = [&](Vertex x) {
      in_tree[x] = 1;
      for (EdgeId id : g.incident(x)) {
        const Edge& f = g.edges()[id - 1];
        const Vertex y = f.u == x ? f.v : f.u;
        if (in_tree[y]) {
          if (cut.is_live(id - 1)) cut.remove(id - 1);
        } else {
          cut.insert(id - 1);
        }
        ++ops.tree_updates;
      }
    };

    std::vector<EdgeId> picked;
    picked.reserve(n - 1);
    absorb(1);
    for (std::size_t round = 0; round + 1 < n; ++round) {
      const std::size_t leaf = cut.sample(r);
      ++ops.samples;
      const Edge& e = g.edges()[leaf];
      picked.push_back(static_cast<EdgeId>(leaf + 1));
      absorb(in_tree[e.u] ? e.v : e.u);
    }
    ops.rebases = cut.rebase_count();
    out.tree = SpanningTree(std::move(picked));
  });
}

MechanismResult run_mechanism(MechanismId id, const WeightedGraph& g,
                              const PrivacyBudget& budget, RngStream& r) {
  switch (id) {
    case MechanismId::kPerturb:
      return private_mst_input_perturbation(g, budget, r);
    case MechanismId::kKruskal:
      return private_kruskal(g, budget, r);
    case MechanismId::kOnePass:
      return one_pass_private_kruskal(g, budget, r);
    case MechanismId::kPamst:
      return pamst(g, budget, r);
    case MechanismId::kSealfonLaplace:
      return sealfon_input_privatization(g, budget, SealfonMode::kLaplacePure, r);
    case MechanismId::kSealfonGauss:
      return sealfon_input_privatization(g, budget, SealfonMode::kGaussianZcdp, r);
  }
  throw Error(ErrorCode::kUnknownMechanism, "unknown mechanism id");
}

}  // namespace dpmst
