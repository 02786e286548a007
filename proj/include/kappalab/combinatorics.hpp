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

#ifndef KAPPALAB_COMBINATORICS_HPP_
#define KAPPALAB_COMBINATORICS_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "kappalab/graph.hpp"

namespace kappalab {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Saturating a + b.
inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// The k-subset of {0..n-1} with the given rank in lexicographic order.
std::vector<Vertex> unrank_combination(std::uint64_t rank, int n, int k);

// Advances `c` (sorted k-subset of {0..n-1}) to its lexicographic successor.
// Returns false when `c` was the last subset.
inline bool next_combination(std::span<Vertex> c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == static_cast<Vertex>(n - k + i)) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Calls fn(subset) for the k-subsets of {0..n-1} whose lexicographic ranks
// lie in [begin, end). fn returns true to stop. Returns the rank at which the
// visit stopped, or `end` when every subset was visited.
template <class Fn>
std::uint64_t visit_combinations(int n, int k, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return end;
  std::vector<Vertex> c = unrank_combination(begin, n, k);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (fn(std::span<const Vertex>(c))) return r;
    if (!next_combination(c, n)) return end;
  }
  return end;
}

// A uniformly random k-subset of {0..n-1} from a Fisher-Yates prefix over
// `scratch` (which must hold a permutation of 0..n-1; it is left shuffled).
// The result is sorted.
VertexList random_subset(std::mt19937_64& rng, std::vector<Vertex>& scratch, int k);

// Deterministic generator for sampling block `block` under `seed`.
std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block);

}  // namespace kappalab

#endif  // KAPPALAB_COMBINATORICS_HPP_
