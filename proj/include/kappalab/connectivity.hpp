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

#ifndef KAPPALAB_CONNECTIVITY_HPP_
#define KAPPALAB_CONNECTIVITY_HPP_

#include <array>
#include <climits>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappalab/cayley.hpp"
#include "kappalab/graph.hpp"

namespace kappalab {

// A set of deleted vertices.
class FaultSet {
 public:
  FaultSet() = default;
  // Sorts and deduplicates; throws std::invalid_argument for ids >= vertex_count.
  FaultSet(std::size_t vertex_count, std::vector<Vertex> members);

  static FaultSet from_labels(const CayleyGraph& g, std::span<const std::string> labels);

  const VertexList& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  friend bool operator==(const FaultSet&, const FaultSet&) = default;
  friend auto operator<=>(const FaultSet&, const FaultSet&) = default;

 private:
  VertexList members_;
};

// The fault set restricted to each last-symbol part.
struct PartSplit {
  std::vector<VertexList> per_part;  // per_part[i - 1] = F_i
  std::vector<int> disconnected;     // symbols i with G_i - F_i disconnected
  std::vector<int> connected;        // the remaining symbols

  int fault_count(int symbol) const { return static_cast<int>(per_part.at(symbol - 1).size()); }
};

PartSplit split_by_part(const CayleyGraph& g, const FaultSet& fault);

enum class ShapeKind { Singleton, Edge, TwoPath, ThreeCycle, FourCycle, Other };

struct Shape {
  ShapeKind kind = ShapeKind::Other;
  int size = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string_view shape_name(ShapeKind kind);
Shape shape_of(const Graph& g, std::span<const Vertex> component);

struct ComponentReport {
  VertexList fault;
  // Sorted by size descending, then by smallest vertex id.
  std::vector<VertexList> components;
  std::vector<Shape> shapes;

  int count() const { return static_cast<int>(components.size()); }
};

ComponentReport components(const Graph& g, const FaultSet& fault);

// N(S): vertices outside S with a neighbor in S.
VertexList neighborhood(const Graph& g, std::span<const Vertex> set);
// Throws std::invalid_argument when u == v.
VertexList common_neighbors(const Graph& g, Vertex u, Vertex v);
bool is_independent(const Graph& g, std::span<const Vertex> set);

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

// Maximum number of internally disjoint s-t paths for nonadjacent s != t,
// stopping early once `cap` paths are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap = INT_MAX);

// Exact vertex connectivity. Complete graphs give |V| - 1, disconnected
// graphs give 0.
int vertex_connectivity(const Graph& g);

// Counts components of G - F with a reusable per-thread scratch state. Graphs
// up to 128 vertices use word-parallel BFS on adjacency bitmasks.
class ComponentCounter {
 public:
  explicit ComponentCounter(const Graph& g);

  // Stops as soon as `stop_at` components have been found.
  int count(std::span<const Vertex> fault, int stop_at = INT_MAX);

 private:
  using Row = std::array<std::uint64_t, 2>;

  const Graph* graph_;
  int words_;
  std::vector<Row> rows_;
  Row full_{};
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

}  // namespace kappalab

#endif  // KAPPALAB_CONNECTIVITY_HPP_
