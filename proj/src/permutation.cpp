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

#include "kappalab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kappalab {

namespace {

void check_size(int n) {
  if (n < kMinSymbols || n > kMaxSymbols) {
    throw std::invalid_argument("permutation size must be in [3, 12], got " +
                                std::to_string(n));
  }
}

void check_rotation(int i, int n) {
  if (i < 3 || i > n) {
    throw std::out_of_range("rotation index " + std::to_string(i) +
                            " outside 3.." + std::to_string(n));
  }
}

void check_position(int position, int n) {
  if (position < 1 || position > n) {
    throw std::out_of_range("position " + std::to_string(position) +
                            " outside 1.." + std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> symbols) {
  const int n = static_cast<int>(symbols.size());
  check_size(n);
  unsigned seen = 0;
  for (int k = 0; k < n; ++k) {
    const int s = symbols[k];
    if (s < 1 || s > n || (seen >> s & 1u)) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen |= 1u << s;
    symbols_[k] = static_cast<std::uint8_t>(s);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) p.symbols_[k] = static_cast<std::uint8_t>(k + 1);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> symbols;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text");
      symbols.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      int value = 0;
      const auto* first = text.data() + start;
      const auto* last = text.data() + end;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("bad permutation text");
      }
      symbols.push_back(value);
      start = end + 1;
    }
  }
  return Permutation(symbols);
}

Permutation Permutation::swapped(int i, int j) const {
  check_position(i, n_);
  check_position(j, n_);
  Permutation q = *this;
  std::swap(q.symbols_[i - 1], q.symbols_[j - 1]);
  return q;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int k = 0; k < n_; ++k) {
    if (n_ >= 10 && k > 0) out.push_back(',');
    out += std::to_string(symbols_[k]);
  }
  return out;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (p.at(i) < p.at(j)) ++count;
    }
  }
  return count;
}

Parity parity(const Permutation& p) {
  return inversion_count(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation apply(const Permutation& p, const GeneratorOp& op) {
  const int n = p.size();
  switch (op.kind) {
    case GeneratorOp::Kind::Exchange:
      return p.swapped(1, 2);
    case GeneratorOp::Kind::RotPlus:
      check_rotation(op.i, n);
      return p.swapped(2, op.i).swapped(1, 2);
    case GeneratorOp::Kind::RotMinus:
      check_rotation(op.i, n);
      return p.swapped(1, op.i).swapped(1, 2);
    case GeneratorOp::Kind::Swap:
      return p.swapped(op.i, op.j);
  }
  throw std::logic_error("unknown generator kind");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  unsigned used = 0;
  for (int pos = 1; pos <= n; ++pos) {
    const int s = p.at(pos);
    // Lehmer digit: unused symbols smaller than s.
    int digit = 0;
    for (int t = 1; t < s; ++t) {
      if (!(used >> t & 1u)) ++digit;
    }
    used |= 1u << s;
    r = r * static_cast<std::uint64_t>(n - pos + 1) + static_cast<std::uint64_t>(digit);
  }
  return r;
}

Permutation unrank(std::uint64_t k, int n) {
  check_size(n);
  if (k >= factorial(n)) throw std::out_of_range("rank out of range");
  std::array<int, kMaxSymbols> digits{};
  for (int pos = n; pos >= 1; --pos) {
    const auto base = static_cast<std::uint64_t>(n - pos + 1);
    digits[pos - 1] = static_cast<int>(k % base);
    k /= base;
  }
  std::vector<int> pool(n);
  for (int s = 0; s < n; ++s) pool[s] = s + 1;
  std::vector<int> symbols;
  symbols.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    symbols.push_back(pool[digits[pos]]);
    pool.erase(pool.begin() + digits[pos]);
  }
  return Permutation(symbols);
}

std::uint64_t even_rank(const Permutation& p) {
  if (parity(p) != Parity::Even) {
    throw std::invalid_argument("even_rank of odd permutation " + p.to_string());
  }
  return rank(p) / 2;
}

Permutation even_unrank(std::uint64_t k, int n) {
  check_size(n);
  if (k >= factorial(n) / 2) throw std::out_of_range("even rank out of range");
  Permutation p = unrank(2 * k, n);
  if (parity(p) == Parity::Even) return p;
  return unrank(2 * k + 1, n);
}

}  // namespace kappalab
