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

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dpmst/errors.h"
#include "text_format.h"

namespace dpmst {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

void require_flip_p(double flip_p) {
  require(flip_p > 0.0 && flip_p < 0.5, "flip probability must lie in (0, 1/2)");
}

std::vector<Edge> complete_edges(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return edges;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

InstanceModel parse_instance_model(std::string_view name) {
  if (name == "er") return InstanceModel::kErdosRenyi;
  if (name == "mi-chain") return InstanceModel::kMiChain;
  if (name == "hard") return InstanceModel::kHard;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown instance model '" + std::string(name) + "'");
}

WeightedGraph erdos_renyi_instance(std::size_t n, double p, double wmin,
                                   double wmax, RngStream& r, double delta_inf,
                                   int max_attempts) {
  require(n >= 1, "n must be at least 1");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  require(std::isfinite(wmin) && std::isfinite(wmax) && wmin <= wmax,
          "weight range must satisfy wmin <= wmax");
  require(max_attempts >= 1, "need at least one attempt");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (p < 1.0 && !(r.uniform() < p)) continue;
        edges.push_back({u, v});
        weights.push_back(wmin + (wmax - wmin) * r.uniform());
      }
    }
    WeightedGraph g = WeightedGraph::build(n, std::move(edges), std::move(weights),
                                           delta_inf, Connectivity::kAllow);
    if (g.connected()) return g;
  }
  throw Error(ErrorCode::kDisconnected,
              "no connected G(" + std::to_string(n) + ", p) sample in " +
                  std::to_string(max_attempts) + " attempts");
}

double parity_even_prob(std::uint64_t k, double flip_p) {
  require(flip_p >= 0.0 && flip_p <= 1.0, "flip probability must lie in [0, 1]");
  return 0.5 + 0.5 * std::pow(1.0 - 2.0 * flip_p, static_cast<double>(k));
}

double mi_weight(double flip_p, std::uint64_t k) {
  require_flip_p(flip_p);
  require(k >= 1, "hop distance must be at least 1");
  const double c = std::pow(1.0 - 2.0 * flip_p, static_cast<double>(k));
  const double p1 = 1.0 + c;
  const double p2 = 1.0 - c;
  const double t2 = p2 > 0.0 ? p2 * std::log2(p2) : 0.0;
  return 0.5 * (p1 * std::log2(p1) + t2);
}

WeightedGraph mutual_info_chain_instance(std::size_t n, double flip_p,
                                         std::uint64_t dataset_size) {
  require(n >= 2, "n must be at least 2");
  require_flip_p(flip_p);
  require(dataset_size >= 2, "dataset size must be at least 2");
  std::vector<Edge> edges = complete_edges(n);
  // Weights only depend on the hop distance.
  std::vector<double> by_distance(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) by_distance[k] = -mi_weight(flip_p, k);
  std::vector<double> weights;
  weights.reserve(edges.size());
  for (const Edge& e : edges) weights.push_back(by_distance[e.v - e.u]);
  const double d = static_cast<double>(dataset_size);
  return WeightedGraph::build(n, std::move(edges), std::move(weights),
                              std::log2(d) / d);
}

WeightedGraph hard_instance(std::size_t n, double beta, std::uint64_t s,
                            RngStream& r) {
  require(n >= 2, "n must be at least 2");
  require(beta > 0.0 && std::isfinite(beta), "beta must be positive");
  require(s >= 1, "s must be at least 1");
  std::vector<Edge> edges = complete_edges(n);
  std::vector<double> weights;
  weights.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double p_e = sample_beta(r, beta, beta);
    weights.push_back(static_cast<double>(sample_binomial(r, s, p_e)));
  }
  return WeightedGraph::build(n, std::move(edges), std::move(weights), 1.0);
}

WeightedGraph generate_instance(const InstanceSpec& spec) {
  RngStream r(spec.seed);
  switch (spec.model) {
    case InstanceModel::kErdosRenyi:
      return erdos_renyi_instance(spec.n, spec.p, spec.wmin, spec.wmax, r,
                                  spec.delta_inf);
    case InstanceModel::kMiChain:
      return mutual_info_chain_instance(spec.n, spec.flip_p, spec.dataset_size);
    case InstanceModel::kHard: {
      const double beta =
          spec.beta > 0.0 ? spec.beta : 0.5 * std::log(static_cast<double>(spec.n));
      return hard_instance(spec.n, beta, spec.s, r);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown instance model");
}

void write_instance(const WeightedGraph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << ' '
      << internal::format_double(g.delta_inf()) << '\n';
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.u << ' ' << e.v << ' ' << internal::format_double(g.weights()[i])
        << '\n';
  }
}

void write_instance(const WeightedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  }
  write_instance(g, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

WeightedGraph read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  double delta_inf = 1.0;
  std::vector<Edge> edges;
  std::vector<double> weights;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 3) parse_error(line_no, "expected header 'n m delta_inf'");
      const auto pn = internal::parse_number<std::size_t>(tokens[0]);
      const auto pm = internal::parse_number<std::size_t>(tokens[1]);
      const auto pd = internal::parse_number<double>(tokens[2]);
      if (!pn || !pm || !pd) parse_error(line_no, "malformed header");
      if (*pn < 1) parse_error(line_no, "vertex count must be at least 1");
      if (!(*pd > 0.0)) parse_error(line_no, "delta_inf must be positive");
      n = *pn;
      m = *pm;
      delta_inf = *pd;
      edges.reserve(m);
      weights.reserve(m);
      have_header = true;
      continue;
    }
    if (edges.size() == m) parse_error(line_no, "more edge lines than declared");
    if (tokens.size() != 3) parse_error(line_no, "expected 'u v w'");
    const auto pu = internal::parse_number<Vertex>(tokens[0]);
    const auto pv = internal::parse_number<Vertex>(tokens[1]);
    const auto pw = internal::parse_number<double>(tokens[2]);
    if (!pu || !pv || !pw) parse_error(line_no, "malformed edge");
    if (*pu < 1 || *pu > n || *pv < 1 || *pv > n) {
      parse_error(line_no, "endpoint out of range");
    }
    if (*pu == *pv) parse_error(line_no, "self-loop");
    edges.push_back({*pu, *pv});
    weights.push_back(*pw);
  }
  if (!have_header) parse_error(line_no + 1, "missing header");
  if (edges.size() != m) {
    parse_error(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return WeightedGraph::build(n, std::move(edges), std::move(weights), delta_inf);
}

WeightedGraph read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_instance(in);
}

}  // namespace dpmst
