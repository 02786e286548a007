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

#ifndef KAPPALAB_GRAPH_HPP_
#define KAPPALAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kappalab {

using Vertex = std::uint32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in compressed sparse row form. Neighbor
// lists are sorted by id, so every traversal order is deterministic.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges are merged; loops and out-of-range endpoints throw
  // std::invalid_argument.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int min_degree() const;
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph without_edge(Vertex u, Vertex v) const;
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Builds a sorted VertexList from arbitrary ids.
VertexList make_vertex_list(std::vector<Vertex> ids);

}  // namespace kappalab

#endif  // KAPPALAB_GRAPH_HPP_
