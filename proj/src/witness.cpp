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

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "kappalab/kappa.hpp"
#include "kappalab/parallel.hpp"

namespace kappalab {

VertexList family_union(const WitnessFamily& family) {
  std::vector<Vertex> all;
  for (const auto& part : family.parts) all.insert(all.end(), part.begin(), part.end());
  return make_vertex_list(std::move(all));
}

bool is_valid_family(const Graph& g, const WitnessFamily& family) {
  std::size_t total = 0;
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t p = 0; p < family.parts.size(); ++p) {
    const auto& part = family.parts[p];
    if (part.empty()) return false;
    for (Vertex v : part) {
      if (v >= g.vertex_count() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(p);
    }
    total += part.size();
  }
  for (std::size_t p = 0; p < family.parts.size(); ++p) {
    const auto& part = family.parts[p];
    // Connected, and every edge leaving the part avoids the other parts.
    std::vector<Vertex> stack{part.front()};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[part.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (owner[w] >= 0 && owner[w] != static_cast<int>(p)) return false;
        if (owner[w] == static_cast<int>(p) && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != part.size()) return false;
  }
  const auto cut = neighborhood(g, family_union(family));
  return total + cut.size() < g.vertex_count();
}

std::vector<VertexList> connected_sets(const Graph& g, int max_size) {
  std::set<VertexList> all;
  std::set<VertexList> level;
  for (Vertex v = 0; v < g.vertex_count(); ++v) level.insert({v});
  for (int size = 1; size <= max_size && !level.empty(); ++size) {
    all.insert(level.begin(), level.end());
    if (size == max_size) break;
    // Grow by a neighbor larger than the minimum so each set keeps its
    // minimum as the canonical root.
    std::set<VertexList> next;
    for (const auto& set : level) {
      for (Vertex u : set) {
        for (Vertex w : g.neighbors(u)) {
          if (w <= set.front() || std::binary_search(set.begin(), set.end(), w)) continue;
          VertexList grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return {all.begin(), all.end()};
}

namespace {

struct Candidate {
  std::size_t cut_size = 0;
  VertexList cut;
  std::vector<std::size_t> parts;  // indices into the candidate part list

  bool better_than(const Candidate& other) const {
    if (parts.empty()) return false;
    if (other.parts.empty()) return true;
    if (cut_size != other.cut_size) return cut_size < other.cut_size;
    return cut < other.cut;
  }
};

struct Part {
  VertexList members;
  VertexList closed;  // members plus their neighbors
};

// Depth-first extension of one task prefix with private cover counts.
class FamilySearch {
 public:
  FamilySearch(const Graph& g, const std::vector<Part>& parts, int want,
               std::atomic<std::uint64_t>& explored, std::uint64_t budget)
      : g_(g), parts_(parts), want_(want), explored_(explored), budget_(budget),
        cover_(g.vertex_count(), 0) {}

  bool aborted() const { return aborted_; }
  std::uint64_t local_explored() const { return local_explored_; }
  const Candidate& best() const { return best_; }

  void run(const std::vector<std::size_t>& prefix) {
    for (std::size_t p : prefix) {
      if (!fits(p)) return;
      push(p);
    }
    extend(prefix.back() + 1);
  }

 private:
  bool fits(std::size_t p) const {
    for (Vertex v : parts_[p].members) {
      if (cover_[v] != 0) return false;
    }
    return true;
  }

  void push(std::size_t p) {
    chosen_.push_back(p);
    union_size_ += parts_[p].members.size();
    for (Vertex v : parts_[p].closed) {
      if (cover_[v]++ == 0) ++covered_;
    }
  }

  void pop() {
    const std::size_t p = chosen_.back();
    chosen_.pop_back();
    union_size_ -= parts_[p].members.size();
    for (Vertex v : parts_[p].closed) {
      if (--cover_[v] == 0) --covered_;
    }
  }

  std::size_t cut_size() const { return covered_ - union_size_; }

  void evaluate() {
    ++local_explored_;
    if ((local_explored_ & 0x3ff) == 0) {
      if (explored_.fetch_add(0x400) + 0x400 > budget_) aborted_ = true;
    }
    if (covered_ >= g_.vertex_count()) return;  // nothing left outside the cut
    const std::size_t size = cut_size();
    if (!best_.parts.empty() && size > best_.cut_size) return;
    Candidate c;
    c.cut_size = size;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (cover_[v] != 0) c.cut.push_back(v);
    }
    std::vector<Vertex> members;
    for (std::size_t p : chosen_) {
      members.insert(members.end(), parts_[p].members.begin(), parts_[p].members.end());
    }
    std::sort(members.begin(), members.end());
    VertexList cut;
    std::set_difference(c.cut.begin(), c.cut.end(), members.begin(), members.end(),
                        std::back_inserter(cut));
    c.cut = std::move(cut);
    c.parts = chosen_;
    if (c.better_than(best_)) best_ = std::move(c);
  }

  void extend(std::size_t from) {
    if (aborted_) return;
    if (static_cast<int>(chosen_.size()) == want_) {
      evaluate();
      return;
    }
    // The cut only grows as parts are added.
    if (!best_.parts.empty() && cut_size() > best_.cut_size) return;
    for (std::size_t p = from; p < parts_.size() && !aborted_; ++p) {
      if (!fits(p)) continue;
      push(p);
      extend(p + 1);
      pop();
    }
  }

  const Graph& g_;
  const std::vector<Part>& parts_;
  int want_;
  std::atomic<std::uint64_t>& explored_;
  std::uint64_t budget_;
  std::vector<int> cover_;
  std::size_t covered_ = 0;
  std::size_t union_size_ = 0;
  std::vector<std::size_t> chosen_;
  Candidate best_;
  std::uint64_t local_explored_ = 0;
  bool aborted_ = false;
};

}  // namespace

KappaResult kappa_ell_witness_search(const Graph& g, int ell, const WitnessOptions& options) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  if (options.max_part_size < 1) throw std::invalid_argument("max part size must be positive");

  KappaResult result;
  result.ell = ell;
  result.tier = Tier::WitnessUpperBound;
  result.budget = options.budget;
  result.k_max = static_cast<int>(g.vertex_count());

  const auto sets = connected_sets(g, options.max_part_size);
  std::vector<Part> parts;
  parts.reserve(sets.size());
  for (const auto& members : sets) {
    auto closed = neighborhood(g, members);
    closed.insert(closed.end(), members.begin(), members.end());
    parts.push_back({members, make_vertex_list(std::move(closed))});
  }

  // The pinned part leads the prefix; the remaining parts follow in
  // increasing index order. Unpinned families are increasing index tuples.
  const int want = ell - 1;
  std::vector<std::vector<std::size_t>> tasks;
  std::vector<std::size_t> firsts;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!options.pin_vertex_zero || parts[p].members.front() == 0) firsts.push_back(p);
  }
  for (std::size_t first : firsts) {
    if (want == 1) {
      tasks.push_back({first});
      continue;
    }
    for (std::size_t second = options.pin_vertex_zero ? 0 : first + 1; second < parts.size();
         ++second) {
      if (second == first) continue;
      if (options.pin_vertex_zero && parts[second].members.front() == 0) continue;
      tasks.push_back({first, second});
    }
  }

  std::atomic<std::uint64_t> explored{0};
  std::vector<Candidate> best(tasks.size());
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::atomic<bool> aborted{false};
  parallel_chunks(options.jobs, tasks.size(), [&](std::size_t t, int) {
    if (aborted.load()) return;
    FamilySearch search(g, parts, want, explored, options.budget);
    search.run(tasks[t]);
    if (search.aborted()) aborted = true;
    best[t] = search.best();
    counts[t] = search.local_explored();
  });

  if (aborted.load()) {
    result.status = SearchStatus::Inconclusive;
    result.explored = explored.load();
    return result;
  }
  for (std::uint64_t c : counts) result.explored += c;
  Candidate winner;
  for (auto& c : best) {
    if (c.better_than(winner)) winner = std::move(c);
  }
  if (winner.parts.empty()) {
    result.status = SearchStatus::NoCutWithinLimit;
    result.settled_below = result.k_max + 1;
    return result;
  }
  result.status = SearchStatus::Found;
  result.value = static_cast<int>(winner.cut_size);
  WitnessFamily family;
  for (std::size_t p : winner.parts) family.parts.push_back(parts[p].members);
  std::sort(family.parts.begin(), family.parts.end());
  const FaultSet fault(g.vertex_count(), winner.cut);
  result.witness = CutWitness{fault, components(g, fault)};
  result.family = std::move(family);
  return result;
}

}  // namespace kappalab
