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

#include "kappalab/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace kappalab {

FaultSet::FaultSet(std::size_t vertex_count, std::vector<Vertex> members)
    : members_(make_vertex_list(std::move(members))) {
  if (!members_.empty() && members_.back() >= vertex_count) {
    throw std::invalid_argument("fault vertex out of range");
  }
}

FaultSet FaultSet::from_labels(const CayleyGraph& g, std::span<const std::string> labels) {
  std::vector<Vertex> ids;
  ids.reserve(labels.size());
  for (const auto& text : labels) ids.push_back(g.id_of(text));
  return FaultSet(g.vertex_count(), std::move(ids));
}

bool FaultSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

PartSplit split_by_part(const CayleyGraph& g, const FaultSet& fault) {
  PartSplit split;
  split.per_part.resize(g.n());
  for (Vertex v : fault.members()) split.per_part[g.label(v).last() - 1].push_back(v);

  const auto index = decompose(g);
  std::vector<char> deleted(g.vertex_count(), 0);
  for (Vertex v : fault.members()) deleted[v] = 1;
  for (int symbol = 1; symbol <= g.n(); ++symbol) {
    const VertexList& part = index.part(symbol);
    std::vector<char> in_part(g.vertex_count(), 0);
    for (Vertex v : part) in_part[v] = 1;
    // Count components of the part minus its faults.
    std::vector<char> seen(g.vertex_count(), 0);
    int comps = 0;
    for (Vertex root : part) {
      if (deleted[root] || seen[root]) continue;
      ++comps;
      std::vector<Vertex> stack{root};
      seen[root] = 1;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.graph().neighbors(u)) {
          if (in_part[w] && !deleted[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    (comps > 1 ? split.disconnected : split.connected).push_back(symbol);
  }
  return split;
}

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Singleton: return "singleton";
    case ShapeKind::Edge: return "edge";
    case ShapeKind::TwoPath: return "2-path";
    case ShapeKind::ThreeCycle: return "3-cycle";
    case ShapeKind::FourCycle: return "4-cycle";
    case ShapeKind::Other: return "other";
  }
  return "other";
}

Shape shape_of(const Graph& g, std::span<const Vertex> component) {
  const int size = static_cast<int>(component.size());
  Shape shape{ShapeKind::Other, size};
  if (size > 4) return shape;
  int edges = 0;
  bool all_degree_two = true;
  for (Vertex u : component) {
    int d = 0;
    for (Vertex v : component) {
      if (u != v && g.adjacent(u, v)) ++d;
    }
    edges += d;
    all_degree_two = all_degree_two && d == 2;
  }
  edges /= 2;
  if (size == 1) {
    shape.kind = ShapeKind::Singleton;
  } else if (size == 2 && edges == 1) {
    shape.kind = ShapeKind::Edge;
  } else if (size == 3 && edges == 2) {
    shape.kind = ShapeKind::TwoPath;
  } else if (size == 3 && edges == 3) {
    shape.kind = ShapeKind::ThreeCycle;
  } else if (size == 4 && edges == 4 && all_degree_two) {
    shape.kind = ShapeKind::FourCycle;
  }
  return shape;
}

ComponentReport components(const Graph& g, const FaultSet& fault) {
  const std::size_t n = g.vertex_count();
  ComponentReport report;
  report.fault = fault.members();
  std::vector<char> blocked(n, 0);
  for (Vertex v : fault.members()) blocked[v] = 1;
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (blocked[root]) continue;
    queue.assign(1, root);
    blocked[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!blocked[w]) {
          blocked[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    report.components.push_back(queue);
  }
  // Roots are visited in increasing id, so a stable sort by size keeps the
  // smallest-id tie-break.
  std::stable_sort(report.components.begin(), report.components.end(),
                   [](const VertexList& a, const VertexList& b) { return a.size() > b.size(); });
  report.shapes.reserve(report.components.size());
  for (const auto& c : report.components) report.shapes.push_back(shape_of(g, c));
  return report;
}

VertexList neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (Vertex v : set) in_set[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_set[w]) out.push_back(w);
    }
  }
  return make_vertex_list(std::move(out));
}

VertexList common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_neighbors needs u != v");
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// Unit-capacity network with every vertex v split into in(v) = 2v and
// out(v) = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, Vertex s, Vertex t) : head_(2 * g.vertex_count(), -1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const int cap = (v == s || v == t) ? 2 * static_cast<int>(g.vertex_count()) : 1;
      add_arc(2 * v, 2 * v + 1, cap);
      for (Vertex w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w, 1);
    }
  }

  // One BFS augmentation from `source` to `sink`; false when none exists.
  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source;) {
      const int a = via[v];
      --arcs_[a].cap;
      ++arcs_[a ^ 1].cap;
      v = arcs_[a ^ 1].to;
    }
    return true;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (s == t || g.adjacent(s, t)) {
    throw std::invalid_argument("local_connectivity needs distinct nonadjacent vertices");
  }
  SplitNetwork net(g, s, t);
  int flow = 0;
  while (flow < cap && net.augment(2 * static_cast<int>(s) + 1, 2 * static_cast<int>(t))) {
    ++flow;
  }
  return flow;
}

int vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  // Pick a minimum-degree vertex v. A minimum cut either avoids v, separating
  // v from some non-neighbor, or contains v and then separates two
  // nonadjacent neighbors of v.
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  if (static_cast<std::size_t>(g.degree(v)) == n - 1) return static_cast<int>(n) - 1;
  int best = g.degree(v);
  for (Vertex u = 0; u < n && best > 0; ++u) {
    if (u == v || g.adjacent(u, v)) continue;
    best = std::min(best, local_connectivity(g, v, u, best));
  }
  const auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < nbrs.size() && best > 0; ++j) {
      if (g.adjacent(nbrs[i], nbrs[j])) continue;
      best = std::min(best, local_connectivity(g, nbrs[i], nbrs[j], best));
    }
  }
  return best;
}

namespace {

template <int W>
using Mask = std::array<std::uint64_t, W>;

template <int W>
bool any(const Mask<W>& m) {
  for (int w = 0; w < W; ++w) {
    if (m[w]) return true;
  }
  return false;
}

template <int W, class Rows>
int count_masked(const Rows& rows, Mask<W> alive, int stop_at) {
  int comps = 0;
  while (any<W>(alive)) {
    Mask<W> frontier{};
    for (int w = 0; w < W; ++w) {
      if (alive[w]) {
        frontier[w] = alive[w] & (~alive[w] + 1);
        break;
      }
    }
    for (int w = 0; w < W; ++w) alive[w] &= ~frontier[w];
    while (any<W>(frontier)) {
      Mask<W> next{};
      for (int w = 0; w < W; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          const auto& row = rows[64 * w + b];
          for (int x = 0; x < W; ++x) next[x] |= row[x];
        }
      }
      for (int w = 0; w < W; ++w) {
        next[w] &= alive[w];
        alive[w] &= ~next[w];
      }
      frontier = next;
    }
    if (++comps >= stop_at) return comps;
  }
  return comps;
}

}  // namespace

ComponentCounter::ComponentCounter(const Graph& g) : graph_(&g) {
  const std::size_t n = g.vertex_count();
  words_ = n <= 64 ? 1 : n <= 128 ? 2 : 0;
  if (words_ > 0) {
    rows_.assign(n, Row{});
    full_ = Row{};
    for (std::size_t v = 0; v < n; ++v) full_[v / 64] |= std::uint64_t{1} << (v % 64);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) rows_[v][w / 64] |= std::uint64_t{1} << (w % 64);
    }
  } else {
    stamp_.assign(n, 0);
    queue_.reserve(n);
  }
}

int ComponentCounter::count(std::span<const Vertex> fault, int stop_at) {
  const std::size_t n = graph_->vertex_count();
  if (words_ > 0) {
    Row alive = full_;
    for (Vertex v : fault) alive[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    if (words_ == 1) {
      struct OneWord {
        const std::vector<Row>& rows;
        Mask<1> operator[](std::size_t v) const { return {rows[v][0]}; }
      };
      return count_masked<1>(OneWord{rows_}, Mask<1>{alive[0]}, stop_at);
    }
    return count_masked<2>(rows_, alive, stop_at);
  }

  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (Vertex v : fault) stamp_[v] = epoch_;
  int comps = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (stamp_[root] == epoch_) continue;
    stamp_[root] = epoch_;
    queue_.assign(1, root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (Vertex w : graph_->neighbors(queue_[head])) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          queue_.push_back(w);
        }
      }
    }
    if (++comps >= stop_at) return comps;
  }
  return comps;
}

}  // namespace kappalab
