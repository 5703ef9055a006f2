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

#include "dpmst/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "dpmst/errors.h"

namespace dpmst {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kEndpointOutOfRange: return "endpoint out of range";
    case ErrorCode::kLengthMismatch: return "length mismatch";
    case ErrorCode::kDisconnected: return "disconnected graph";
    case ErrorCode::kDoubleRemoval: return "double removal";
    case ErrorCode::kEmpty: return "empty";
    case ErrorCode::kGuardExceeded: return "size guard exceeded";
    case ErrorCode::kOracleInconsistent: return "oracle inconsistent";
    case ErrorCode::kUnknownMechanism: return "unknown mechanism";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown";
}

WeightedGraph WeightedGraph::build(std::size_t n, std::vector<Edge> edges,
                                   std::vector<double> weights,
                                   double delta_inf,
                                   Connectivity connectivity) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  }
  if (edges.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(edges.size()) + " edges but " +
                    std::to_string(weights.size()) + " weights");
  }
  if (!(delta_inf > 0.0) || !std::isfinite(delta_inf)) {
    throw Error(ErrorCode::kInvalidArgument, "delta_inf must be positive");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorCode::kEndpointOutOfRange,
                  "edge " + std::to_string(i + 1) + " (" + std::to_string(e.u) +
                      "," + std::to_string(e.v) + ") has an endpoint outside [1," +
                      std::to_string(n) + "]");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "edge " + std::to_string(i + 1) + " is a self-loop on vertex " +
                      std::to_string(e.u));
    }
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(i + 1) + " has a non-finite weight");
    }
  }

  WeightedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.weights_ = std::move(weights);
  g.delta_inf_ = delta_inf;

  g.offsets_.assign(n + 2, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.incidence_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto id = static_cast<EdgeId>(i + 1);
    g.incidence_[cursor[g.edges_[i].u]++] = id;
    g.incidence_[cursor[g.edges_[i].v]++] = id;
  }

  DisjointSets ds(n);
  for (const Edge& e : g.edges_) ds.merge(e.u, e.v);
  g.connected_ = ds.num_components() == 1;
  if (!g.connected_ && connectivity == Connectivity::kRequire) {
    throw Error(ErrorCode::kDisconnected,
                "graph has " + std::to_string(ds.num_components()) +
                    " connected components");
  }
  return g;
}

const Edge& WeightedGraph::edge(EdgeId id) const {
  if (id < 1 || id > edges_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge id " + std::to_string(id) + " out of range");
  }
  return edges_[id - 1];
}

double WeightedGraph::weight(EdgeId id) const {
  edge(id);
  return weights_[id - 1];
}

std::span<const EdgeId> WeightedGraph::incident(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::kEndpointOutOfRange,
                "vertex " + std::to_string(v) + " out of range");
  }
  return std::span<const EdgeId>(incidence_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

SpanningTree::SpanningTree(std::vector<EdgeId> ids) : edge_ids(std::move(ids)) {
  std::sort(edge_ids.begin(), edge_ids.end());
}

DisjointSets::DisjointSets(std::size_t n)
    : parent_(n + 1), size_(n + 1, 1), members_(n + 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
  for (std::size_t v = 1; v <= n; ++v) {
    members_[v].push_back(static_cast<Vertex>(v));
  }
}

void DisjointSets::check(Vertex v) const {
  if (v < 1 || v >= parent_.size()) {
    throw Error(ErrorCode::kEndpointOutOfRange,
                "vertex " + std::to_string(v) + " out of range");
  }
}

Vertex DisjointSets::find(Vertex v) {
  check(v);
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::merge(Vertex u, Vertex v) {
  Vertex ru = find(u);
  Vertex rv = find(v);
  if (ru == rv) return false;
  if (size_[ru] < size_[rv]) std::swap(ru, rv);
  parent_[rv] = ru;
  size_[ru] += size_[rv];
  auto& big = members_[ru];
  auto& small = members_[rv];
  big.insert(big.end(), small.begin(), small.end());
  small.clear();
  small.shrink_to_fit();
  --components_;
  return true;
}

std::size_t DisjointSets::component_size(Vertex v) { return size_[find(v)]; }

std::span<const Vertex> DisjointSets::members(Vertex v) {
  return members_[find(v)];
}

namespace {

void check_weights(const WeightedGraph& g, std::span<const double> weights) {
  if (weights.size() != g.num_edges()) {
    throw Error(ErrorCode::kLengthMismatch,
                "weight vector has " + std::to_string(weights.size()) +
                    " entries, graph has " + std::to_string(g.num_edges()) +
                    " edges");
  }
}

[[noreturn]] void throw_disconnected() {
  throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

}  // namespace

SpanningTree kruskal_mst(const WeightedGraph& g, std::span<const double> weights) {
  check_weights(g, weights);
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{1});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const double wa = weights[a - 1];
    const double wb = weights[b - 1];
    return wa < wb || (wa == wb && a < b);
  });

  DisjointSets ds(n);
  std::vector<EdgeId> picked;
  picked.reserve(n - 1);
  for (EdgeId id : order) {
    if (picked.size() + 1 == n) break;
    const Edge& e = g.edges()[id - 1];
    if (ds.merge(e.u, e.v)) picked.push_back(id);
  }
  if (picked.size() + 1 != n) throw_disconnected();
  return SpanningTree(std::move(picked));
}

SpanningTree kruskal_mst(const WeightedGraph& g) {
  return kruskal_mst(g, g.weights());
}

SpanningTree prim_mst(const WeightedGraph& g, std::span<const double> weights) {
  check_weights(g, weights);
  const std::size_t n = g.num_vertices();
  using Entry = std::tuple<double, EdgeId, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<char> in_tree(n + 1, 0);
  std::vector<EdgeId> picked;
  picked.reserve(n - 1);

  auto absorb = [&](Vertex v) {
    in_tree[v] = 1;
    for (EdgeId id : g.incident(v)) {
      const Edge& e = g.edges()[id - 1];
      const Vertex other = e.u == v ? e.v : e.u;
      if (!in_tree[other]) heap.emplace(weights[id - 1], id, other);
    }
  };

  absorb(1);
  while (!heap.empty() && picked.size() + 1 < n) {
    const auto [w, id, v] = heap.top();
    heap.pop();
    if (in_tree[v]) continue;
    picked.push_back(id);
    absorb(v);
  }
  if (picked.size() + 1 != n) throw_disconnected();
  return SpanningTree(std::move(picked));
}

bool is_spanning_tree(const WeightedGraph& g, std::span<const EdgeId> edge_ids) {
  const std::size_t n = g.num_vertices();
  if (edge_ids.size() + 1 != n) return false;
  DisjointSets ds(n);
  for (EdgeId id : edge_ids) {
    if (id < 1 || id > g.num_edges()) return false;
    const Edge& e = g.edges()[id - 1];
    if (!ds.merge(e.u, e.v)) return false;
  }
  return ds.num_components() == 1;
}

double tree_weight(std::span<const double> weights, const SpanningTree& t) {
  double total = 0.0;
  for (EdgeId id : t.edge_ids) {
    if (id < 1 || id > weights.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge id " + std::to_string(id) + " out of range");
    }
    total += weights[id - 1];
  }
  return total;
}

double tree_weight(const WeightedGraph& g, const SpanningTree& t) {
  return tree_weight(g.weights(), t);
}

}  // namespace dpmst
