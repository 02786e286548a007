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

#ifndef KAPPALAB_TESTS_ORACLE_HPP_
#define KAPPALAB_TESTS_ORACLE_HPP_

// Slow reference implementations written straight from the definitions. They
// share no code with the library: permutations are plain vectors, graphs are
// adjacency matrices and every search is a full enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

// Every permutation of 1..n in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Parity from the cycle count: n minus cycles is the transposition count.
inline bool is_even(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j] - 1) seen[j] = 1;
  }
  return (n - cycles) % 2 == 0;
}

inline std::string text(const Perm& p) {
  std::string s;
  for (int x : p) s += static_cast<char>('0' + x);
  return s;
}

// Position swaps, 1-based.
inline Perm swap_pos(Perm p, int i, int j) {
  std::swap(p[i - 1], p[j - 1]);
  return p;
}
inline Perm rot_plus(const Perm& p, int i) { return swap_pos(swap_pos(p, 2, i), 1, 2); }
inline Perm rot_minus(const Perm& p, int i) { return swap_pos(swap_pos(p, 1, i), 1, 2); }

struct Matrix {
  int size = 0;
  std::vector<std::vector<char>> adj;
  std::vector<Perm> labels;  // empty for plain fixtures

  explicit Matrix(int n = 0) : size(n), adj(n, std::vector<char>(n, 0)) {}
  void connect(int u, int v) {
    adj[u][v] = 1;
    adj[v][u] = 1;
  }
  int edge_count() const {
    int e = 0;
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v) e += adj[u][v];
    return e;
  }
};

// The alternating group graph (split = false) or the split-star (split =
// true), with vertices in lexicographic order of their labels.
inline Matrix cayley(int n, bool split) {
  std::vector<Perm> verts;
  for (auto& p : all_perms(n)) {
    if (split || is_even(p)) verts.push_back(p);
  }
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
  Matrix m(static_cast<int>(verts.size()));
  m.labels = verts;
  for (int u = 0; u < m.size; ++u) {
    for (int i = 3; i <= n; ++i) {
      m.connect(u, index.at(rot_plus(verts[u], i)));
      m.connect(u, index.at(rot_minus(verts[u], i)));
    }
    if (split) m.connect(u, index.at(swap_pos(verts[u], 1, 2)));
  }
  return m;
}

// Components of G minus the vertices flagged in `removed`, by recursive-free
// depth-first search.
inline int components(const Matrix& g, const std::vector<char>& removed) {
  std::vector<char> seen(g.size, 0);
  int count = 0;
  for (int s = 0; s < g.size; ++s) {
    if (removed[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.size; ++w) {
        if (g.adj[u][w] && !removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// Minimum |F| over all subsets leaving >= ell components or < ell vertices.
inline int kappa_ell(const Matrix& g, int ell) {
  int best = g.size;
  const std::uint32_t limit = 1u << g.size;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int k = __builtin_popcount(mask);
    if (k >= best) continue;
    std::vector<char> removed(g.size, 0);
    for (int v = 0; v < g.size; ++v) removed[v] = (mask >> v) & 1;
    if (g.size - k < ell || components(g, removed) >= ell) best = k;
  }
  return best;
}

inline std::vector<int> neighborhood(const Matrix& g, const std::vector<int>& set) {
  std::vector<char> in(g.size, 0);
  for (int v : set) in[v] = 1;
  std::vector<int> out;
  for (int w = 0; w < g.size; ++w) {
    if (in[w]) continue;
    for (int v : set) {
      if (g.adj[v][w]) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

// Erdos-Renyi fixture on `size` vertices.
inline Matrix random_graph(std::mt19937_64& rng, int size, double p) {
  Matrix m(size);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < size; ++u)
    for (int v = u + 1; v < size; ++v)
      if (coin(rng)) m.connect(u, v);
  return m;
}

}  // namespace oracle

#endif  // KAPPALAB_TESTS_ORACLE_HPP_
