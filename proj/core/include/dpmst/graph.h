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

#ifndef DPMST_GRAPH_H_
#define DPMST_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dpmst {

// Vertices are numbered 1..n and edges 1..m. Containers indexed by these ids
// are stored 0-based, so edge `e` lives at position `e - 1`.
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Connectivity { kRequire, kAllow };

// Public topology plus the private weight vector. Immutable once built.
class WeightedGraph {
 public:
  // Validates endpoints, lengths and finiteness. With Connectivity::kRequire a
  // disconnected graph is rejected with ErrorCode::kDisconnected.
  static WeightedGraph build(std::size_t n, std::vector<Edge> edges,
                             std::vector<double> weights,
                             double delta_inf = 1.0,
                             Connectivity connectivity = Connectivity::kRequire);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  double delta_inf() const { return delta_inf_; }
  bool connected() const { return connected_; }

  const Edge& edge(EdgeId id) const;
  double weight(EdgeId id) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const double> weights() const { return weights_; }

  // Ids of the edges incident to `v`, in increasing order.
  std::span<const EdgeId> incident(Vertex v) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  WeightedGraph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  double delta_inf_ = 1.0;
  bool connected_ = false;
  // CSR incidence lists.
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

// A set of edge ids, kept sorted ascending. Whether it actually spans a given
// graph is checked with is_spanning_tree().
struct SpanningTree {
  std::vector<EdgeId> edge_ids;

  SpanningTree() = default;
  explicit SpanningTree(std::vector<EdgeId> ids);

  std::size_t size() const { return edge_ids.size(); }
  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

// Union-find with union by size, path halving, and per-component member
// lists. Members of the smaller component are appended to the larger one.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t num_vertices() const { return parent_.size() - 1; }
  Vertex find(Vertex v);
  bool same(Vertex u, Vertex v) { return find(u) == find(v); }
  // Returns false when u and v were already in one component.
  bool merge(Vertex u, Vertex v);
  std::size_t component_size(Vertex v);
  std::span<const Vertex> members(Vertex v);
  std::size_t num_components() const { return components_; }

 private:
  void check(Vertex v) const;

  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::vector<Vertex>> members_;
  std::size_t components_;
};

// A non-private MST routine: given the topology and a weight vector (which may
// differ from g.weights()), returns an MST with respect to those weights.
using MstAlgorithm =
    std::function<SpanningTree(const WeightedGraph&, std::span<const double>)>;

// Ties are broken by the lower edge index.
SpanningTree kruskal_mst(const WeightedGraph& g, std::span<const double> weights);
SpanningTree kruskal_mst(const WeightedGraph& g);

// Prim-Jarnik from vertex 1 with a binary heap; ties broken by lower edge index.
SpanningTree prim_mst(const WeightedGraph& g, std::span<const double> weights);

bool is_spanning_tree(const WeightedGraph& g, std::span<const EdgeId> edge_ids);
inline bool is_spanning_tree(const WeightedGraph& g, const SpanningTree& t) {
  return is_spanning_tree(g, t.edge_ids);
}

double tree_weight(const WeightedGraph& g, const SpanningTree& t);
double tree_weight(std::span<const double> weights, const SpanningTree& t);

}  // namespace dpmst

#endif  // DPMST_GRAPH_H_
