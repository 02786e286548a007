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

#include "kappalab/lemmas.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "kappalab/combinatorics.hpp"
#include "kappalab/parallel.hpp"

namespace kappalab {

std::string_view mode_name(ModeKind kind) {
  switch (kind) {
    case ModeKind::Exhaustive: return "exhaustive";
    case ModeKind::Sampled: return "sampled";
    case ModeKind::Targeted: return "targeted";
    case ModeKind::Skipped: return "skipped";
  }
  return "skipped";
}

std::string VerificationReport::verdict() const {
  if (mode.kind == ModeKind::Skipped) return "skipped";
  if (violation_count > 0) return "violated";
  return mode.kind == ModeKind::Exhaustive ? "consistent" : "consistent (sampled)";
}

std::int64_t VerificationReport::stat(std::string_view key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) return v;
  }
  return 0;
}

namespace {

constexpr std::uint64_t kChunk = 1 << 15;
constexpr std::uint64_t kBlock = 1 << 12;

// Per-chunk tallies; merged in chunk order so the result does not depend on
// the worker count.
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t exception_count = 0;
  std::vector<Finding> violations;
  std::vector<Finding> exceptions;
  std::vector<std::int64_t> counters;

  void violate(Finding f) {
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(std::move(f));
  }
  void except(Finding f) {
    ++exception_count;
    if (exceptions.size() < kMaxListed) exceptions.push_back(std::move(f));
  }
  void bump(std::size_t slot, std::int64_t by = 1) {
    if (counters.size() <= slot) counters.resize(slot + 1, 0);
    counters[slot] += by;
  }
};

void sort_and_cap(std::vector<Finding>& list) {
  std::sort(list.begin(), list.end());
  if (list.size() > kMaxListed) list.resize(kMaxListed);
}

Tally merge(std::vector<Tally>& parts) {
  Tally all;
  for (auto& t : parts) {
    all.instances += t.instances;
    all.violation_count += t.violation_count;
    all.exception_count += t.exception_count;
    all.violations.insert(all.violations.end(), t.violations.begin(), t.violations.end());
    all.exceptions.insert(all.exceptions.end(), t.exceptions.begin(), t.exceptions.end());
    for (std::size_t i = 0; i < t.counters.size(); ++i) all.bump(i, t.counters[i]);
  }
  sort_and_cap(all.violations);
  sort_and_cap(all.exceptions);
  return all;
}

void absorb(VerificationReport& report, Tally&& tally) {
  report.instances_checked += tally.instances;
  report.violation_count += tally.violation_count;
  report.violations.insert(report.violations.end(), tally.violations.begin(),
                           tally.violations.end());
  report.exceptions.insert(report.exceptions.end(), tally.exceptions.begin(),
                           tally.exceptions.end());
  sort_and_cap(report.violations);
  sort_and_cap(report.exceptions);
}

VerificationReport start_report(const CayleyGraph& g, std::string lemma_id,
                                VerificationMode mode) {
  VerificationReport report;
  report.lemma_id = std::move(lemma_id);
  report.family = g.family();
  report.n = g.n();
  report.mode = std::move(mode);
  return report;
}

std::vector<std::string> labels(const CayleyGraph& g, std::span<const Vertex> vs) {
  return g.labels_of(vs);
}

std::vector<std::string> labels(const CayleyGraph& g, std::initializer_list<Vertex> vs) {
  const std::vector<Vertex> list(vs);
  return g.labels_of(list);
}

Vertex apply_id(const CayleyGraph& g, Vertex v, const GeneratorOp& op) {
  return g.id_of(apply(g.label(v), op));
}

std::string describe(const ComponentReport& report) {
  std::string out = std::to_string(report.count()) + " components:";
  for (std::size_t i = 0; i < report.shapes.size(); ++i) {
    out += i == 0 ? " " : ", ";
    const auto& s = report.shapes[i];
    out += shape_name(s.kind);
    if (s.kind == ShapeKind::Other) out += "(" + std::to_string(s.size) + ")";
  }
  return out;
}

// Marks and counts the union of neighborhoods with a reusable stamp array.
class NeighborUnion {
 public:
  explicit NeighborUnion(const Graph& g) : g_(g), stamp_(g.vertex_count(), 0) {}

  std::size_t size_of(std::span<const Vertex> set) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (Vertex v : set) stamp_[v] = epoch_;
    std::size_t count = 0;
    for (Vertex v : set) {
      for (Vertex w : g_.neighbors(v)) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          ++count;
        }
      }
    }
    return count;
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

std::size_t common_count(const Graph& g, Vertex u, Vertex v) {
  std::size_t count = 0;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

void basic_alternating(const CayleyGraph& g, VerificationReport& report) {
  const Graph& graph = g.graph();
  const int n = g.n();
  Tally t;
  const auto expected = static_cast<std::uint64_t>(factorial(n - 2));
  std::int64_t part_pairs = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ++part_pairs;
      const auto count = external_edge_count(g, i, j);
      if (count != expected) {
        t.violate({"external edges per part pair",
                   {std::to_string(i), std::to_string(j)},
                   std::to_string(count) + " edges, expected " + std::to_string(expected)});
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto out = out_neighbors(g, v);
    if (out.size() != 2 || g.label(out[0]).last() == g.label(out[1]).last()) {
      t.violate({"out-neighbors in different parts", labels(g, {v}),
                 std::to_string(out.size()) + " out-neighbors"});
    }
  }
  std::int64_t pairs = 0;
  std::vector<std::uint32_t> shared(g.vertex_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::fill(shared.begin(), shared.end(), 0);
    for (Vertex w : graph.neighbors(u)) {
      for (Vertex x : graph.neighbors(w)) ++shared[x];
    }
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      ++pairs;
      if (shared[v] > 2 && !graph.adjacent(u, v)) {
        t.violate({"nonadjacent pairs share at most 2 neighbors", labels(g, {u, v}),
                   std::to_string(shared[v]) + " common neighbors"});
      }
    }
  }
  t.instances = part_pairs + g.vertex_count() + pairs;
  report.stats = {{"part_pairs", part_pairs},
                  {"vertices", static_cast<std::int64_t>(g.vertex_count())},
                  {"vertex_pairs", pairs}};
  absorb(report, std::move(t));
}

void basic_splitstar(const CayleyGraph& g, VerificationReport& report) {
  const Graph& graph = g.graph();
  const int n = g.n();
  Tally t;
  const int degree = 2 * n - 3;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (graph.degree(v) != degree) {
      t.violate({"regular of degree 2n-3", labels(g, {v}),
                 "degree " + std::to_string(graph.degree(v))});
    }
  }
  const int kappa = vertex_connectivity(graph);
  if (kappa != degree) {
    t.violate({"connectivity 2n-3", {}, "connectivity " + std::to_string(kappa)});
  }
  const auto expected = 2 * static_cast<std::uint64_t>(factorial(n - 2));
  std::int64_t part_pairs = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ++part_pairs;
      const auto count = external_edge_count(g, i, j);
      if (count != expected) {
        t.violate({"external edges per part pair",
                   {std::to_string(i), std::to_string(j)},
                   std::to_string(count) + " edges, expected " + std::to_string(expected)});
      }
    }
  }
  const auto parts = decompose(g);
  std::vector<int> seen_in_part(g.vertex_count(), 0);
  for (int symbol = 1; symbol <= n; ++symbol) {
    for (Vertex v : parts.part(symbol)) {
      const auto out = out_neighbors(g, v);
      if (out.size() != 2 || g.label(out[0]).last() == g.label(out[1]).last() ||
          !graph.adjacent(out[0], out[1])) {
        t.violate({"out-neighbors in different parts and adjacent", labels(g, {v}),
                   std::to_string(out.size()) + " out-neighbors"});
      }
      for (Vertex w : out) {
        if (seen_in_part[w] == symbol) {
          t.violate({"distinct out-neighbors within a part", labels(g, {v, w}),
                     "out-neighbor shared"});
        }
        seen_in_part[w] = symbol;
      }
    }
  }
  std::int64_t pairs = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto dist = distances_from(graph, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      ++pairs;
      const int d = dist[v];
      const std::size_t cap = d == 1 ? 1 : d == 2 ? 2 : 0;
      const std::size_t c = common_count(graph, u, v);
      if (c > cap) {
        t.violate({"common neighbors by distance", labels(g, {u, v}),
                   std::to_string(c) + " common neighbors at distance " + std::to_string(d)});
      }
    }
  }
  t.instances = g.vertex_count() + part_pairs + pairs;
  report.stats = {{"connectivity", kappa},
                  {"part_pairs", part_pairs},
                  {"vertices", static_cast<std::int64_t>(g.vertex_count())},
                  {"vertex_pairs", pairs}};
  absorb(report, std::move(t));
}

}  // namespace

VerificationReport verify_basic(const CayleyGraph& g) {
  auto report = start_report(g, "basic", VerificationMode::exhaustive());
  if (g.n() < 4) {
    report.mode = VerificationMode::skipped("the properties are stated for n >= 4");
    return report;
  }
  if (g.family() == Family::AlternatingGroup) {
    basic_alternating(g, report);
  } else {
    basic_splitstar(g, report);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<int> neighbor_bound(Family family, int size, int n) {
  if (family == Family::AlternatingGroup) {
    if (size == 3) return 6 * n - 16;
    if (size == 4) return 8 * n - 24;
    return std::nullopt;
  }
  if (size == 2) return 4 * n - 8;
  if (size == 3) return 6 * n - 14;
  if (size == 4) return 8 * n - 20;
  return std::nullopt;
}

struct BoundTally {
  Tally tally;
  int min = INT_MAX;
  VertexList argmin;

  void offer(int value, std::span<const Vertex> set) {
    VertexList s(set.begin(), set.end());
    if (value < min || (value == min && s < argmin)) {
      min = value;
      argmin = std::move(s);
    }
  }
};

bool independent_with(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

}  // namespace

VerificationReport verify_neighbor_bounds(const CayleyGraph& g, int set_size,
                                          const VerificationMode& mode, int jobs) {
  const auto bound = neighbor_bound(g.family(), set_size, g.n());
  if (!bound) throw std::invalid_argument("unsupported set size for this family");
  auto report = start_report(
      g, g.family() == Family::AlternatingGroup ? "neighbor-bounds" : "s2-neighbor-bounds", mode);
  report.stats = {{"set_size", set_size}, {"bound", *bound}};
  if (g.n() < 4) {
    report.mode = VerificationMode::skipped("the bound is stated for n >= 4");
    return report;
  }
  if (mode.kind == ModeKind::Skipped) return report;
  if (mode.kind == ModeKind::Targeted) {
    throw std::invalid_argument("neighbor bounds support exhaustive or sampled mode");
  }
  report.notes.push_back(
      "every set contains vertex 0 (the identity); both families are vertex-transitive");

  const Graph& graph = g.graph();
  std::vector<Vertex> candidates;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (!graph.adjacent(0, v)) candidates.push_back(v);
  }
  const int m = static_cast<int>(candidates.size());
  const int rest = set_size - 1;

  const std::uint64_t total =
      mode.kind == ModeKind::Exhaustive ? binomial(m, rest) : mode.trials;
  const std::uint64_t step = mode.kind == ModeKind::Exhaustive ? kChunk : kBlock;
  const std::size_t chunks = (total + step - 1) / step;
  std::vector<BoundTally> per(chunks);
  parallel_chunks(jobs, chunks, [&](std::size_t chunk, int) {
    auto& out = per[chunk];
    NeighborUnion nu(graph);
    std::vector<Vertex> set(set_size);
    set[0] = 0;
    auto check = [&](std::span<const Vertex> others) {
      for (int i = 0; i < rest; ++i) set[i + 1] = others[i];
      if (!independent_with(graph, set)) {
        out.tally.bump(0);
        return;
      }
      ++out.tally.instances;
      const VertexList sorted = make_vertex_list(set);
      const int value = static_cast<int>(nu.size_of(sorted));
      out.offer(value, sorted);
      if (value < *bound) {
        out.tally.violate({"|N(S)| >= bound", labels(g, sorted),
                           "|N(S)| = " + std::to_string(value)});
      }
    };
    const std::uint64_t begin = chunk * step;
    const std::uint64_t end = std::min(total, begin + step);
    if (mode.kind == ModeKind::Exhaustive) {
      std::vector<Vertex> picked(rest);
      visit_combinations(m, rest, begin, end, [&](std::span<const Vertex> idx) {
        for (int i = 0; i < rest; ++i) picked[i] = candidates[idx[i]];
        check(picked);
        return false;
      });
    } else {
      auto rng = block_rng(mode.seed, chunk);
      std::vector<Vertex> scratch = candidates;
      for (std::uint64_t trial = begin; trial < end; ++trial) check(random_subset(rng, scratch, rest));
    }
  });

  std::vector<Tally> tallies;
  int min = INT_MAX;
  VertexList argmin;
  for (auto& p : per) {
    if (p.min < min || (p.min == min && p.argmin < argmin)) {
      min = p.min;
      argmin = p.argmin;
    }
    tallies.push_back(std::move(p.tally));
  }
  auto all = merge(tallies);
  const std::int64_t dependent = all.counters.empty() ? 0 : all.counters[0];
  report.stats.emplace_back("independent_sets", static_cast<std::int64_t>(all.instances));
  report.stats.emplace_back("dependent_draws", dependent);
  if (min != INT_MAX) {
    report.min_attained = min;
    std::string text = "minimum attained by";
    for (const auto& label : labels(g, argmin)) text += " " + label;
    report.notes.push_back(text);
  }
  absorb(report, std::move(all));
  return report;
}

// ---------------------------------------------------------------------------

VerificationReport verify_claims(const CayleyGraph& g) {
  auto report = start_report(g, "claims", VerificationMode::exhaustive());
  if (g.family() != Family::AlternatingGroup) {
    throw std::invalid_argument("the claims concern the alternating group graph");
  }
  if (g.n() < 4) {
    report.mode = VerificationMode::skipped("the claims are stated for n >= 4");
    return report;
  }
  const Graph& graph = g.graph();
  const int n = g.n();
  const Vertex e = 0;
  Tally t;
  auto plus = [&](Vertex v, int i) { return apply_id(g, v, GeneratorOp::rot_plus(i)); };
  auto minus = [&](Vertex v, int i) { return apply_id(g, v, GeneratorOp::rot_minus(i)); };

  std::vector<Vertex> np, nm, npp, npm, nmp, nmm;
  for (int i = 3; i <= n; ++i) {
    np.push_back(plus(e, i));
    nm.push_back(minus(e, i));
    for (int j = 3; j <= n; ++j) {
      if (i == j) continue;
      npp.push_back(plus(plus(e, i), j));
      npm.push_back(minus(plus(e, i), j));
      nmp.push_back(plus(minus(e, i), j));
      nmm.push_back(minus(minus(e, i), j));
      // (e g_i+) g_j+ = (e g_j-) g_i-
      if (npp.back() != minus(minus(e, j), i)) {
        t.violate({"(e gi+)gj+ = (e gj-)gi-", labels(g, {npp.back()}),
                   "i=" + std::to_string(i) + " j=" + std::to_string(j)});
      }
    }
  }
  std::vector<Vertex> ne_all = np;
  ne_all.insert(ne_all.end(), nm.begin(), nm.end());
  const auto ne = make_vertex_list(ne_all);
  const auto ne_graph = make_vertex_list({graph.neighbors(e).begin(), graph.neighbors(e).end()});
  if (ne != ne_graph) {
    t.violate({"N(e) = N+ u N-", labels(g, {e}), "neighborhood differs"});
  }
  const auto spp = make_vertex_list(npp);
  const auto smm = make_vertex_list(nmm);
  const auto spm = make_vertex_list(npm);
  const auto smp = make_vertex_list(nmp);
  if (spp != smm) t.violate({"N++ = N--", {}, "sets differ"});

  auto in_ne = [&](Vertex v) { return std::binary_search(ne.begin(), ne.end(), v); };
  auto common_with_e = [&](Vertex x) {
    std::size_t c = 0;
    for (Vertex w : graph.neighbors(x)) c += in_ne(w) ? 1 : 0;
    return c;
  };

  std::int64_t pairs = 0;
  for (Vertex x : spp) {
    ++pairs;
    if (common_with_e(x) != 2) {
      t.violate({"|N(e) n N(x)| = 2 on N++", labels(g, {x}),
                 std::to_string(common_with_e(x)) + " common neighbors"});
    }
  }
  for (const auto* set : {&spm, &smp}) {
    for (Vertex x : *set) {
      ++pairs;
      if (common_with_e(x) != 1) {
        t.violate({"|N(e) n N(x)| = 1 on N+- u N-+", labels(g, {x}),
                   std::to_string(common_with_e(x)) + " common neighbors"});
      }
    }
  }
  // Claim on N++: at most one common neighbor, and it lies in N(e).
  for (std::size_t a = 0; a < spp.size(); ++a) {
    for (std::size_t b = a + 1; b < spp.size(); ++b) {
      ++pairs;
      const auto common = common_neighbors(graph, spp[a], spp[b]);
      if (common.size() > 1 || (common.size() == 1 && !in_ne(common[0]))) {
        t.violate({"N++ pairs share at most one neighbor, inside N(e)",
                   labels(g, {spp[a], spp[b]}),
                   std::to_string(common.size()) + " common neighbors"});
      }
    }
  }
  // Claim on N+- and on N-+: at most one common neighbor.
  for (const auto* set : {&spm, &smp}) {
    for (std::size_t a = 0; a < set->size(); ++a) {
      for (std::size_t b = a + 1; b < set->size(); ++b) {
        ++pairs;
        const auto c = common_count(graph, (*set)[a], (*set)[b]);
        if (c > 1) {
          t.violate({"N+- (or N-+) pairs share at most one neighbor",
                     labels(g, {(*set)[a], (*set)[b]}), std::to_string(c) + " common neighbors"});
        }
      }
    }
  }
  // Claim across: x in N+- u N-+, y in N++ adjacent or at most one common.
  for (const auto* set : {&spm, &smp}) {
    for (Vertex x : *set) {
      for (Vertex y : spp) {
        if (x == y) continue;
        ++pairs;
        const auto c = common_count(graph, x, y);
        if (!graph.adjacent(x, y) && c > 1) {
          t.violate({"N+- u N-+ against N++: adjacent or at most one common neighbor",
                     labels(g, {x, y}), std::to_string(c) + " common neighbors"});
        }
      }
    }
  }
  if (!is_independent(graph, spm)) t.violate({"N+- independent", {}, "edge inside N+-"});
  if (!is_independent(graph, smp)) t.violate({"N-+ independent", {}, "edge inside N-+"});
  auto adjacent_count = [&](Vertex x, const VertexList& other) {
    int c = 0;
    for (Vertex y : other) c += graph.adjacent(x, y) ? 1 : 0;
    return c;
  };
  for (Vertex x : spm) {
    if (adjacent_count(x, smp) > 1) {
      t.violate({"each vertex of N+- has at most one neighbor in N-+", labels(g, {x}),
                 std::to_string(adjacent_count(x, smp)) + " neighbors"});
    }
  }
  for (Vertex x : smp) {
    if (adjacent_count(x, spm) > 1) {
      t.violate({"each vertex of N-+ has at most one neighbor in N+-", labels(g, {x}),
                 std::to_string(adjacent_count(x, spm)) + " neighbors"});
    }
  }

  std::int64_t examples = 0;
  if (n == 5) {
    // `exact`: the listed vertices are the whole intersection; otherwise
    // they must be among the common neighbors.
    struct Example {
      const char* x;
      const char* y;
      std::vector<const char*> common;
      bool exact;
    };
    const std::vector<Example> list = {
        {"43215", "53241", {"31245"}, true},          {"43215", "45312", {"24315"}, false},
        {"43215", "54321", {}, true},                 {"14235", "15243", {"31245"}, false},
        {"14235", "13425", {"21435"}, false},         {"14235", "15324", {}, true},
        {"14235", "53241", {"31245"}, false},         {"14235", "32415", {"21435", "43215"}, true},
    };
    for (const auto& ex : list) {
      ++examples;
      const Vertex x = g.id_of(ex.x);
      const Vertex y = g.id_of(ex.y);
      std::vector<Vertex> want;
      for (const char* c : ex.common) want.push_back(g.id_of(c));
      const auto listed = make_vertex_list(want);
      const auto common = common_neighbors(graph, x, y);
      const bool ok = ex.exact ? common == listed
                               : std::includes(common.begin(), common.end(), listed.begin(),
                                               listed.end());
      if (!ok) t.violate({"worked example", labels(g, {x, y}), "common neighbors differ"});
    }
  }
  t.instances = pairs + examples;
  report.stats = {{"N+", static_cast<std::int64_t>(np.size())},
                  {"N-", static_cast<std::int64_t>(nm.size())},
                  {"N++", static_cast<std::int64_t>(spp.size())},
                  {"N+-", static_cast<std::int64_t>(spm.size())},
                  {"N-+", static_cast<std::int64_t>(smp.size())},
                  {"examples", examples}};
  absorb(report, std::move(t));
  return report;
}

// ---------------------------------------------------------------------------

VerificationReport verify_remark_constructions(const CayleyGraph& g) {
  auto report = start_report(g, "remark", VerificationMode::exhaustive());
  if (g.family() != Family::AlternatingGroup) {
    throw std::invalid_argument("the constructions concern the alternating group graph");
  }
  if (g.n() < 4) {
    report.mode = VerificationMode::skipped("the constructions need n >= 4");
    return report;
  }
  const Graph& graph = g.graph();
  const int n = g.n();
  Tally t;
  auto plus = [&](Vertex v, int i) { return apply_id(g, v, GeneratorOp::rot_plus(i)); };
  auto minus = [&](Vertex v, int i) { return apply_id(g, v, GeneratorOp::rot_minus(i)); };
  int min3 = INT_MAX, max3 = INT_MIN, min4 = INT_MAX, max4 = INT_MIN;
  std::int64_t pairs = 0;
  for (int i = 3; i <= n; ++i) {
    for (int j = 3; j <= n; ++j) {
      if (i == j) continue;
      ++pairs;
      const Vertex e = 0;
      const Vertex a = plus(plus(e, i), j);
      const Vertex b = plus(plus(e, j), i);
      const Vertex c = plus(minus(plus(e, j), i), j);
      const std::vector<Vertex> s3_list{e, a, b};
      const std::vector<Vertex> s4_list{e, a, b, c};
      const VertexList s3 = make_vertex_list(s3_list);
      const VertexList s4 = make_vertex_list(s4_list);
      const std::string tag = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      for (const auto* s : {&s3, &s4}) {
        const std::size_t expected_size = s == &s3 ? 3 : 4;
        const int want = expected_size == 3 ? 6 * n - 16 : 8 * n - 24;
        if (s->size() != expected_size || !is_independent(graph, *s)) {
          t.violate({"independent set", labels(g, *s), tag});
          continue;
        }
        const int value = static_cast<int>(neighborhood(graph, *s).size());
        if (s == &s3) {
          min3 = std::min(min3, value);
          max3 = std::max(max3, value);
        } else {
          min4 = std::min(min4, value);
          max4 = std::max(max4, value);
        }
        if (value != want) {
          t.violate({"|N(S)| equals the bound", labels(g, *s),
                     tag + " |N(S)| = " + std::to_string(value)});
        }
      }
      if (n == 4 && i == 3 && j == 4) {
        const std::vector<std::string> want3{"1234", "3412", "4321"};
        const std::vector<std::string> want4{"1234", "2143", "3412", "4321"};
        if (labels(g, s3) != want3 || labels(g, s4) != want4) {
          t.violate({"worked example", labels(g, s4), "sets differ"});
        }
      }
    }
  }
  t.instances = static_cast<std::uint64_t>(pairs) * 2;
  report.stats = {{"pairs", pairs}};
  if (min3 != INT_MAX) {
    report.stats.insert(report.stats.end(), {{"min_size3", min3},
                                             {"max_size3", max3},
                                             {"min_size4", min4},
                                             {"max_size4", max4}});
    report.min_attained = std::min(min3, min4);
  }
  absorb(report, std::move(t));
  return report;
}

// ---------------------------------------------------------------------------

const std::vector<CutRule>& cut_rules() {
  static const std::vector<CutRule> rules = {
      {"ag-4n-11", Family::AlternatingGroup, 4, 4, 11},
      {"ag-6n-20", Family::AlternatingGroup, 5, 6, 20},
      {"ag-6n-19", Family::AlternatingGroup, 5, 6, 19},
      {"ag-8n-29", Family::AlternatingGroup, 5, 8, 29},
      {"s2-4n-8", Family::SplitStar, 4, 4, 8},
      {"s2-6n-17", Family::SplitStar, 5, 6, 17},
      {"s2-8n-25", Family::SplitStar, 5, 8, 25},
  };
  return rules;
}

const CutRule& find_cut_rule(std::string_view id) {
  for (const auto& rule : cut_rules()) {
    if (rule.id == id) return rule;
  }
  throw std::invalid_argument("unknown cut rule: " + std::string(id));
}

std::vector<AllowedOutcome> allowed_outcomes(const CutRule& rule, int n) {
  using K = ShapeKind;
  const std::string two = "two components, the smaller ";
  std::vector<AllowedOutcome> out;
  auto small = [&](std::string clause, std::vector<K> shapes) {
    out.push_back({two + clause, 2, std::move(shapes)});
  };
  if (rule.id == "ag-4n-11") {
    small("a singleton", {K::Singleton});
    out.push_back({two + "an edge with F = N(edge)", 2, {K::Edge}, false, 4 * n - 11, false,
                   OutcomeCheck::CutIsEdgeNeighborhood});
    if (n == 4) {
      out.push_back({"two 4-cycles", 2, {K::FourCycle, K::FourCycle}, true, 4, true});
      out.push_back({"a 4-cycle and a 2-path", 2, {K::TwoPath, K::FourCycle}, true, 5, true});
    }
  } else if (rule.id == "ag-6n-20" || rule.id == "ag-6n-19" || rule.id == "s2-6n-17") {
    small("a singleton", {K::Singleton});
    small("an edge", {K::Edge});
    if (rule.id != "ag-6n-20") small("a 2-path", {K::TwoPath});
    out.push_back({"three components, two singletons", 3, {K::Singleton, K::Singleton}});
  } else if (rule.id == "ag-8n-29" || rule.id == "s2-8n-25") {
    small("a singleton", {K::Singleton});
    small("an edge", {K::Edge});
    small("a 2-path", {K::TwoPath});
    small("a 3-cycle", {K::ThreeCycle});
    out.push_back({"three components, two singletons", 3, {K::Singleton, K::Singleton}});
    out.push_back({"three components, a singleton and an edge", 3, {K::Singleton, K::Edge}});
    out.push_back(
        {"four components, three singletons", 4, {K::Singleton, K::Singleton, K::Singleton}});
  } else if (rule.id == "s2-4n-8") {
    small("a singleton", {K::Singleton});
    out.push_back({two + "an edge", 2, {K::Edge}, false, -1, false, OutcomeCheck::SplitStarEdge});
    out.push_back({"three components, two singletons with F = N(u) u N(v)", 3,
                   {K::Singleton, K::Singleton}, false, 4 * n - 8, false,
                   OutcomeCheck::SplitStarSingletonPair});
  } else {
    throw std::invalid_argument("unknown cut rule: " + rule.id);
  }
  return out;
}

namespace {

bool passes_check(const CayleyGraph& g, const AllowedOutcome& outcome,
                  const ComponentReport& report) {
  const Graph& graph = g.graph();
  const int n = g.n();
  const auto& f = report.fault;
  switch (outcome.check) {
    case OutcomeCheck::None: return true;
    case OutcomeCheck::CutIsEdgeNeighborhood: {
      const auto& edge = report.components.back();
      return neighborhood(graph, edge) == f;
    }
    case OutcomeCheck::SplitStarEdge: {
      const auto& edge = report.components.back();
      const auto around = neighborhood(graph, edge);
      if (classify_edge(g, edge[0], edge[1]).generator == EdgeGenerator::TwoExchange) {
        return around == f && static_cast<int>(f.size()) == 4 * n - 8;
      }
      return common_count(graph, edge[0], edge[1]) == 1 && f.size() <= around.size() + 1;
    }
    case OutcomeCheck::SplitStarSingletonPair: {
      const auto& comps = report.components;
      const Vertex u = comps[comps.size() - 1][0];
      const Vertex v = comps[comps.size() - 2][0];
      const std::vector<Vertex> pair{u, v};
      return neighborhood(graph, make_vertex_list(pair)) == f &&
             common_count(graph, u, v) == 2;
    }
  }
  return false;
}

}  // namespace

std::optional<AllowedOutcome> match_outcome(const CayleyGraph& g, const CutRule& rule,
                                            const ComponentReport& report) {
  for (const auto& outcome : allowed_outcomes(rule, g.n())) {
    if (report.count() != outcome.components) continue;
    if (outcome.cut_size >= 0 && static_cast<int>(report.fault.size()) != outcome.cut_size) {
      continue;
    }
    std::vector<ShapeKind> shapes;
    for (std::size_t i = outcome.whole ? 0 : 1; i < report.shapes.size(); ++i) {
      shapes.push_back(report.shapes[i].kind);
    }
    std::sort(shapes.begin(), shapes.end());
    auto want = outcome.small;
    std::sort(want.begin(), want.end());
    if (shapes != want) continue;
    if (!passes_check(g, outcome, report)) continue;
    return outcome;
  }
  return std::nullopt;
}

namespace {

// Slots in Tally::counters.
enum Counter : std::size_t { kDisconnecting, kRejected };

class CutChecker {
 public:
  CutChecker(const CayleyGraph& g, const CutRule& rule)
      : g_(g), rule_(rule), counter_(g.graph()) {}

  void check(std::span<const Vertex> fault, Tally& t) {
    ++t.instances;
    if (counter_.count(fault, 2) < 2) return;
    t.bump(kDisconnecting);
    const auto report = components(g_.graph(), FaultSet(g_.vertex_count(), {fault.begin(), fault.end()}));
    const auto outcome = match_outcome(g_, rule_, report);
    if (!outcome) {
      t.violate({"no allowed outcome", labels(g_, report.fault), describe(report)});
    } else if (outcome->exceptional) {
      t.except({outcome->clause, labels(g_, report.fault), describe(report)});
    }
  }

 private:
  const CayleyGraph& g_;
  const CutRule& rule_;
  ComponentCounter counter_;
};

// A fault containing N(U) for a random family U of small connected,
// pairwise nonadjacent parts, topped up with random vertices. Returns false
// when N(U) already exceeds the bound.
bool targeted_fault(const Graph& g, int bound, std::mt19937_64& rng, std::vector<int>& cover,
                    std::vector<Vertex>& fault) {
  const auto vcount = static_cast<Vertex>(g.vertex_count());
  std::uniform_int_distribution<Vertex> any(0, vcount - 1);
  std::uniform_int_distribution<int> part_count(1, 3);
  std::uniform_int_distribution<int> part_size(1, 3);
  std::fill(cover.begin(), cover.end(), 0);  // 1: in a part, 2: in the closed neighborhood
  std::vector<Vertex> members;
  const int parts = part_count(rng);
  for (int p = 0; p < parts; ++p) {
    Vertex start = any(rng);
    int tries = 0;
    while (cover[start] != 0 && ++tries < 64) start = any(rng);
    if (cover[start] != 0) break;
    std::vector<Vertex> part{start};
    const int want = part_size(rng);
    while (static_cast<int>(part.size()) < want) {
      std::vector<Vertex> grow;
      for (Vertex v : part) {
        for (Vertex w : g.neighbors(v)) {
          if (cover[w] == 0 && std::find(part.begin(), part.end(), w) == part.end()) {
            grow.push_back(w);
          }
        }
      }
      if (grow.empty()) break;
      std::sort(grow.begin(), grow.end());
      grow.erase(std::unique(grow.begin(), grow.end()), grow.end());
      std::uniform_int_distribution<std::size_t> pick(0, grow.size() - 1);
      part.push_back(grow[pick(rng)]);
    }
    for (Vertex v : part) {
      cover[v] = 1;
      members.push_back(v);
    }
    for (Vertex v : part) {
      for (Vertex w : g.neighbors(v)) {
        if (cover[w] == 0) cover[w] = 2;
      }
    }
  }
  fault.clear();
  for (Vertex v = 0; v < vcount; ++v) {
    if (cover[v] == 2) fault.push_back(v);
  }
  if (static_cast<int>(fault.size()) > bound) return false;
  std::uniform_int_distribution<int> extra_count(0, bound - static_cast<int>(fault.size()));
  int extra = extra_count(rng);
  int guard = 0;
  while (extra > 0 && ++guard < 100000) {
    const Vertex v = any(rng);
    if (cover[v] != 0) continue;
    cover[v] = 2;
    fault.push_back(v);
    --extra;
  }
  std::sort(fault.begin(), fault.end());
  return true;
}

}  // namespace

VerificationReport verify_cut_structure(const CayleyGraph& g, const CutRule& rule,
                                        const VerificationMode& mode,
                                        const CutStructureOptions& options) {
  if (g.family() != rule.family) throw std::invalid_argument("rule is for the other family");
  auto report = start_report(g, "cut-structure/" + rule.id, mode);
  const int bound = options.bound < 0 ? rule.bound(g.n()) : options.bound;
  report.stats = {{"bound", bound}};
  if (g.n() < rule.min_n) {
    report.mode =
        VerificationMode::skipped("the rule is stated for n >= " + std::to_string(rule.min_n));
    return report;
  }
  if (mode.kind == ModeKind::Skipped) return report;
  const int vcount = static_cast<int>(g.vertex_count());
  if (bound < 1 || bound >= vcount) throw std::invalid_argument("bound out of range");

  std::vector<Tally> tallies;
  if (mode.kind == ModeKind::Exhaustive) {
    std::uint64_t total = 0;
    for (int k = 1; k <= bound; ++k) total = saturating_add(total, binomial(vcount, k));
    if (total > options.budget) {
      report.mode = VerificationMode::skipped("exhaustive enumeration of " + std::to_string(total) +
                                              " faults exceeds the budget");
      return report;
    }
    for (int k = 1; k <= bound; ++k) {
      const std::uint64_t count = binomial(vcount, k);
      const std::size_t chunks = (count + kChunk - 1) / kChunk;
      std::vector<Tally> per(chunks);
      std::vector<CutChecker> checkers(resolve_jobs(options.jobs), CutChecker(g, rule));
      parallel_chunks(options.jobs, chunks, [&](std::size_t chunk, int worker) {
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(count, begin + kChunk);
        visit_combinations(vcount, k, begin, end, [&](std::span<const Vertex> f) {
          checkers[worker].check(f, per[chunk]);
          return false;
        });
      });
      auto level = merge(per);
      report.stats.emplace_back("faults_size_" + std::to_string(k),
                                static_cast<std::int64_t>(level.instances));
      report.stats.emplace_back(
          "disconnecting_size_" + std::to_string(k),
          level.counters.empty() ? 0 : level.counters[kDisconnecting]);
      tallies.push_back(std::move(level));
    }
  } else {
    report.notes.push_back(mode.kind == ModeKind::Sampled
                               ? "faults drawn uniformly among subsets of exactly bound vertices"
                               : "faults contain N(U) for random small connected parts U");
    const std::size_t blocks = (mode.trials + kBlock - 1) / kBlock;
    std::vector<Tally> per(blocks);
    std::vector<CutChecker> checkers(resolve_jobs(options.jobs), CutChecker(g, rule));
    parallel_chunks(options.jobs, blocks, [&](std::size_t block, int worker) {
      auto rng = block_rng(mode.seed, block);
      const std::uint64_t begin = block * kBlock;
      const std::uint64_t end = std::min<std::uint64_t>(mode.trials, begin + kBlock);
      std::vector<Vertex> scratch(vcount);
      std::iota(scratch.begin(), scratch.end(), Vertex{0});
      std::vector<int> cover(vcount);
      std::vector<Vertex> fault;
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        if (mode.kind == ModeKind::Sampled) {
          checkers[worker].check(random_subset(rng, scratch, bound), per[block]);
        } else if (targeted_fault(g.graph(), bound, rng, cover, fault)) {
          checkers[worker].check(fault, per[block]);
        } else {
          per[block].bump(kRejected);
        }
      }
    });
    tallies.push_back(merge(per));
  }
  auto all = merge(tallies);
  report.stats.emplace_back("disconnecting",
                            all.counters.size() > kDisconnecting ? all.counters[kDisconnecting] : 0);
  if (mode.kind == ModeKind::Targeted) {
    report.stats.emplace_back("rejected",
                              all.counters.size() > kRejected ? all.counters[kRejected] : 0);
  }
  report.stats.emplace_back("exceptional", static_cast<std::int64_t>(all.exception_count));
  absorb(report, std::move(all));
  return report;
}

}  // namespace kappalab
