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

#include "kappalab/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappalab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Vertex> unrank_combination(std::uint64_t rank, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("bad combination size");
  if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
  std::vector<Vertex> c;
  c.reserve(k);
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    // Skip first elements whose blocks lie entirely before `rank`.
    while (true) {
      const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    c.push_back(static_cast<Vertex>(next));
    ++next;
  }
  return c;
}

VertexList random_subset(std::mt19937_64& rng, std::vector<Vertex>& scratch, int k) {
  const int n = static_cast<int>(scratch.size());
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(scratch[i], scratch[pick(rng)]);
  }
  VertexList out(scratch.begin(), scratch.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace kappalab
