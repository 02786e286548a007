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

#ifndef KAPPALAB_PERMUTATION_HPP_
#define KAPPALAB_PERMUTATION_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace kappalab {

inline constexpr int kMinSymbols = 3;
inline constexpr int kMaxSymbols = 12;

enum class Parity { Even, Odd };

// A permutation p = p_1 p_2 ... p_n of the symbols 1..n. Symbols are stored
// 1-based; positions in the public API are 1-based as well.
class Permutation {
 public:
  // Throws std::invalid_argument unless `symbols` is a bijection on 1..n with
  // kMinSymbols <= n <= kMaxSymbols.
  explicit Permutation(std::span<const int> symbols);

  static Permutation identity(int n);
  // Accepts "13425" (n <= 9) or "10,2,3,..." (comma separated, any n).
  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  // Symbol at 1-based position.
  int at(int position) const { return symbols_[position - 1]; }
  int last() const { return symbols_[n_ - 1]; }

  // Swaps the symbols at 1-based positions i and j.
  Permutation swapped(int i, int j) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxSymbols> symbols_{};
};

// Inversions are position pairs i > j with p_i < p_j.
int inversion_count(const Permutation& p);
Parity parity(const Permutation& p);

// Generators acting on positions. Swap(i, j) is g_ij; RotPlus(i) applies
// g_2i then g_12 and RotMinus(i) applies g_1i then g_12; Exchange is g_12.
struct GeneratorOp {
  enum class Kind { Exchange, RotPlus, RotMinus, Swap };

  Kind kind = Kind::Exchange;
  int i = 0;
  int j = 0;

  static GeneratorOp exchange() { return {Kind::Exchange, 1, 2}; }
  static GeneratorOp rot_plus(int i) { return {Kind::RotPlus, i, 0}; }
  static GeneratorOp rot_minus(int i) { return {Kind::RotMinus, i, 0}; }
  static GeneratorOp swap(int i, int j) { return {Kind::Swap, i, j}; }

  friend bool operator==(const GeneratorOp&, const GeneratorOp&) = default;
};

// Throws std::out_of_range when the op indexes a position beyond p.size().
Permutation apply(const Permutation& p, const GeneratorOp& op);

std::uint64_t factorial(int n);

// Lexicographic (Lehmer code) rank in [0, n!).
std::uint64_t rank(const Permutation& p);
Permutation unrank(std::uint64_t k, int n);

// Dense rank of an even permutation in [0, n!/2), order preserving. Lex ranks
// 2m and 2m+1 differ by swapping the last two symbols, so exactly one of them
// is even and even_rank(p) = rank(p) / 2.
std::uint64_t even_rank(const Permutation& p);
Permutation even_unrank(std::uint64_t k, int n);

}  // namespace kappalab

#endif  // KAPPALAB_PERMUTATION_HPP_
