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

#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kappalab/combinatorics.hpp"
#include "kappalab/permutation.hpp"
#include "oracle.hpp"

using namespace kappalab;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Permutation from_oracle(const oracle::Perm& p) { return Permutation(p); }

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(P("13425").to_string() == "13425");
  CHECK(P("13425").size() == 5);
  CHECK(P("13425").at(2) == 3);
  CHECK(P("13425").last() == 5);
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").at(1) == 10);
  CHECK(Permutation::identity(4) == P("1234"));
  CHECK_THROWS_AS(P("1224"), std::invalid_argument);
  CHECK_THROWS_AS(P("12"), std::invalid_argument);
  CHECK_THROWS_AS(P("12a4"), std::invalid_argument);
  CHECK_THROWS_AS(P("1235"), std::invalid_argument);
}

TEST_CASE("parity") {
  CHECK(parity(P("1234")) == Parity::Even);
  CHECK(parity(P("13425")) == Parity::Even);
  CHECK(parity(P("2134")) == Parity::Odd);
  CHECK(inversion_count(P("4321")) == 6);
  // Against the cycle-count oracle on all of S_6.
  for (const auto& p : oracle::all_perms(6)) {
    CHECK((parity(from_oracle(p)) == Parity::Even) == oracle::is_even(p));
  }
}

TEST_CASE("generator actions") {
  CHECK(apply(P("13425"), GeneratorOp::rot_plus(4)) == P("21435"));
  CHECK(apply(P("13425"), GeneratorOp::rot_minus(4)) == P("32415"));
  CHECK(apply(P("13425"), GeneratorOp::exchange()) == P("31425"));
  CHECK(apply(P("13425"), GeneratorOp::swap(1, 5)) == P("53421"));
  CHECK_THROWS_AS(apply(P("1234"), GeneratorOp::rot_plus(5)), std::out_of_range);

  for (const auto& o : oracle::all_perms(5)) {
    const auto p = from_oracle(o);
    for (int i = 3; i <= 5; ++i) {
      const auto plus = apply(p, GeneratorOp::rot_plus(i));
      CHECK(plus == from_oracle(oracle::rot_plus(o, i)));
      CHECK(apply(plus, GeneratorOp::rot_minus(i)) == p);
      CHECK(apply(apply(p, GeneratorOp::rot_minus(i)), GeneratorOp::rot_plus(i)) == p);
      // A 3-rotation keeps parity.
      CHECK(parity(plus) == parity(p));
    }
    CHECK(parity(apply(p, GeneratorOp::exchange())) != parity(p));
  }
}

TEST_CASE("lexicographic rank") {
  CHECK(unrank(0, 4) == P("1234"));
  CHECK(unrank(23, 4) == P("4321"));
  CHECK(factorial(8) == 40320);
  const auto perms = oracle::all_perms(5);
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    CHECK(unrank(k, 5) == from_oracle(perms[k]));
    CHECK(rank(unrank(k, 5)) == k);
  }
  CHECK_THROWS(unrank(120, 5));
  // Round trips at the largest size in use, on a random sample.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(8) - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto k = pick(rng);
    CHECK(rank(unrank(k, 8)) == k);
  }
}

TEST_CASE("even rank") {
  CHECK(even_rank(P("1234")) == 0);
  std::set<Permutation> seen;
  for (std::uint64_t k = 0; k < 12; ++k) {
    const auto p = even_unrank(k, 4);
    CHECK(parity(p) == Parity::Even);
    CHECK(even_rank(p) == k);
    seen.insert(p);
  }
  CHECK(seen.size() == 12);
  CHECK_THROWS(even_rank(P("2134")));
  CHECK_THROWS(even_unrank(12, 4));

  // Order preserving: the even permutations of S_6 in lexicographic order.
  std::uint64_t k = 0;
  for (const auto& o : oracle::all_perms(6)) {
    if (!oracle::is_even(o)) continue;
    CHECK(even_unrank(k, 6) == from_oracle(o));
    ++k;
  }
  CHECK(k == 360);
}

TEST_CASE("combinations") {
  CHECK(binomial(12, 4) == 495);
  CHECK(binomial(60, 6) == 50063860);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(1000, 500) == kSaturated);
  CHECK(saturating_add(kSaturated, 1) == kSaturated);

  std::vector<Vertex> c{0, 1, 2};
  std::uint64_t r = 0;
  do {
    CHECK(unrank_combination(r, 7, 3) == c);
    ++r;
  } while (next_combination(c, 7));
  CHECK(r == binomial(7, 3));

  std::uint64_t visited = 0;
  const auto stop = visit_combinations(7, 3, 5, 20, [&](std::span<const Vertex>) {
    return ++visited == 4;
  });
  CHECK(stop == 8);

  std::vector<Vertex> scratch(10);
  std::iota(scratch.begin(), scratch.end(), 0u);
  auto rng = block_rng(3, 0);
  const auto s = random_subset(rng, scratch, 4);
  CHECK(s.size() == 4);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  // Same seed and block, same stream.
  CHECK(block_rng(3, 9)() == block_rng(3, 9)());
  CHECK(block_rng(3, 9)() != block_rng(3, 10)());
}
