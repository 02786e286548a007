// Copyright 2026 The kappalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kappalab/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappalab {

std::string_view family_name(Family family) {
  return family == Family::AlternatingGroup ? "ag" : "s2";
}

Family parse_family(std::string_view name) {
  if (name == "ag") return Family::AlternatingGroup;
  if (name == "s2") return Family::SplitStar;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

CayleyGraph::CayleyGraph(Family family, int n, Graph graph, std::vector<Permutation> labels)
    : family_(family), n_(n), graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != graph_.vertex_count()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
}

Vertex CayleyGraph::id_of(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("permutation size mismatch");
  if (family_ == Family::AlternatingGroup) {
    return static_cast<Vertex>(even_rank(p));
  }
  return static_cast<Vertex>(rank(p));
}

std::vector<std::string> CayleyGraph::labels_of(std::span<const Vertex> vertices) const {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(label(v).to_string());
  return out;
}

CayleyGraph CayleyGraph::with_graph(Graph graph) const {
  return CayleyGraph(family_, n_, std::move(graph), labels_);
}

std::vector<GeneratorOp> generators(Family family, int n) {
  std::vector<GeneratorOp> ops;
  for (int i = 3; i <= n; ++i) {
    ops.push_back(GeneratorOp::rot_plus(i));
    ops.push_back(GeneratorOp::rot_minus(i));
  }
  if (family == Family::SplitStar) ops.push_back(GeneratorOp::exchange());
  return ops;
}

namespace {

CayleyGraph build_family(Family family, int n) {
  const std::uint64_t count =
      family == Family::AlternatingGroup ? factorial(n) / 2 : factorial(n);
  std::vector<Permutation> labels;
  labels.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    labels.push_back(family == Family::AlternatingGroup ? even_unrank(k, n) : unrank(k, n));
  }
  const auto ops = generators(family, n);
  std::vector<Edge> edges;
  edges.reserve(count * ops.size());
  for (std::uint64_t k = 0; k < count; ++k) {
    for (const auto& op : ops) {
      const Permutation q = apply(labels[k], op);
      const auto id = family == Family::AlternatingGroup ? even_rank(q) : rank(q);
      if (k < id) edges.emplace_back(static_cast<Vertex>(k), static_cast<Vertex>(id));
    }
  }
  return CayleyGraph(family, n, Graph::from_edges(count, edges), std::move(labels));
}

}  // namespace

CayleyGraph build_ag(int n) {
  if (n < 3 || n > kMaxAlternatingN) {
    throw std::invalid_argument("alternating group graph needs 3 <= n <= 8");
  }
  return build_family(Family::AlternatingGroup, n);
}

CayleyGraph build_splitstar(int n) {
  if (n < 3 || n > kMaxSplitStarN) {
    throw std::invalid_argument("split-star needs 3 <= n <= 7");
  }
  return build_family(Family::SplitStar, n);
}

CayleyGraph build(Family family, int n) {
  return family == Family::AlternatingGroup ? build_ag(n) : build_splitstar(n);
}

EdgeKind classify_edge(const CayleyGraph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.graph().adjacent(u, v)) {
    throw std::invalid_argument("classify_edge: not an edge");
  }
  const Permutation& p = g.label(u);
  const Permutation& q = g.label(v);
  EdgeKind kind;
  kind.locality = p.last() == q.last() ? Locality::Internal : Locality::External;
  if (g.family() == Family::SplitStar && apply(p, GeneratorOp::exchange()) == q) {
    kind.generator = EdgeGenerator::TwoExchange;
    kind.matching = true;
  }
  return kind;
}

DecompositionIndex decompose(const CayleyGraph& g) {
  DecompositionIndex index;
  index.parts.resize(g.n());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    index.parts[g.label(v).last() - 1].push_back(v);
  }
  return index;
}

std::uint64_t external_edge_count(const CayleyGraph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("external_edge_count needs i != j");
  if (i < 1 || j < 1 || i > g.n() || j > g.n()) {
    throw std::invalid_argument("symbol out of range");
  }
  std::uint64_t count = 0;
  for (auto [u, v] : g.graph().edges()) {
    const int a = g.label(u).last();
    const int b = g.label(v).last();
    if ((a == i && b == j) || (a == j && b == i)) ++count;
  }
  return count;
}

ParitySplit parity_split(const CayleyGraph& g) {
  if (g.family() != Family::SplitStar) {
    throw std::invalid_argument("parity_split applies to split-stars only");
  }
  ParitySplit split;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Permutation& p = g.label(v);
    if (parity(p) == Parity::Even) {
      split.even.push_back(v);
      const Vertex w = g.id_of(apply(p, GeneratorOp::exchange()));
      if (g.graph().adjacent(v, w)) split.matching.emplace_back(v, w);
    } else {
      split.odd.push_back(v);
    }
  }
  return split;
}

VertexList out_neighbors(const CayleyGraph& g, Vertex v) {
  VertexList out;
  const int last = g.label(v).last();
  for (Vertex w : g.graph().neighbors(v)) {
    if (g.label(w).last() != last) out.push_back(w);
  }
  return out;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace kappalab
