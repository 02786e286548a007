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

#ifndef KAPPALAB_CAYLEY_HPP_
#define KAPPALAB_CAYLEY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kappalab/graph.hpp"
#include "kappalab/permutation.hpp"

namespace kappalab {

// AlternatingGroup: even permutations, generators g_i^+ and g_i^- (3 <= i <= n).
// SplitStar: all permutations, the same rotations plus the exchange g_12.
enum class Family { AlternatingGroup, SplitStar };

std::string_view family_name(Family family);  // "ag" or "s2"
Family parse_family(std::string_view name);

inline constexpr int kMaxAlternatingN = 8;
inline constexpr int kMaxSplitStarN = 7;

// A built member of one of the two families. Vertex ids are dense ranks: the
// even rank for AlternatingGroup and the lexicographic rank for SplitStar, so
// the identity permutation is always vertex 0.
class CayleyGraph {
 public:
  CayleyGraph(Family family, int n, Graph graph, std::vector<Permutation> labels);

  Family family() const { return family_; }
  int n() const { return n_; }
  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  const Permutation& label(Vertex v) const { return labels_.at(v); }
  // Throws std::invalid_argument when p is not a vertex of this graph.
  Vertex id_of(const Permutation& p) const;
  Vertex id_of(std::string_view text) const { return id_of(Permutation::parse(text)); }
  std::vector<std::string> labels_of(std::span<const Vertex> vertices) const;

  // Same labelling over a different adjacency; used for mutation fixtures.
  CayleyGraph with_graph(Graph graph) const;

 private:
  Family family_;
  int n_;
  Graph graph_;
  std::vector<Permutation> labels_;
};

// The generator set of the family at size n (rotations first, then exchange).
std::vector<GeneratorOp> generators(Family family, int n);

// Throws std::invalid_argument outside 3 <= n <= kMaxAlternatingN.
CayleyGraph build_ag(int n);
// Throws std::invalid_argument outside 3 <= n <= kMaxSplitStarN.
CayleyGraph build_splitstar(int n);
CayleyGraph build(Family family, int n);

enum class Locality { Internal, External };
enum class EdgeGenerator { ThreeRotation, TwoExchange };

struct EdgeKind {
  Locality locality = Locality::Internal;
  EdgeGenerator generator = EdgeGenerator::ThreeRotation;
  bool matching = false;

  friend bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

// Throws std::invalid_argument when (u, v) is not an edge.
EdgeKind classify_edge(const CayleyGraph& g, Vertex u, Vertex v);

// Vertices grouped by their last symbol.
struct DecompositionIndex {
  std::vector<VertexList> parts;  // parts[i - 1] holds the vertices ending in i

  const VertexList& part(int symbol) const { return parts.at(symbol - 1); }
};

DecompositionIndex decompose(const CayleyGraph& g);

// Edges with one endpoint ending in symbol i and the other ending in j.
std::uint64_t external_edge_count(const CayleyGraph& g, int i, int j);

struct ParitySplit {
  VertexList even;
  VertexList odd;
  std::vector<Edge> matching;  // (even endpoint, odd endpoint), sorted
};

// Throws std::invalid_argument for the AlternatingGroup family.
ParitySplit parity_split(const CayleyGraph& g);

// Neighbors of v whose last symbol differs from v's.
VertexList out_neighbors(const CayleyGraph& g, Vertex v);

// "p edge V E" followed by "e u v" lines, 1-based, edges sorted with u < v.
std::string to_dimacs(const Graph& g);

}  // namespace kappalab

#endif  // KAPPALAB_CAYLEY_HPP_
