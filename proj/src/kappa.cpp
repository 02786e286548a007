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

#include "kappalab/kappa.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "kappalab/combinatorics.hpp"
#include "kappalab/parallel.hpp"

namespace kappalab {

std::string_view tier_name(Tier tier) {
  switch (tier) {
    case Tier::Exhaustive: return "Exhaustive";
    case Tier::WitnessUpperBound: return "WitnessUpperBound";
    case Tier::RuleFewerThanEll: return "RuleFewerThanEll";
  }
  return "Exhaustive";
}

std::string_view status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoCutWithinLimit: return "no_cut_within_kmax";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

constexpr std::uint64_t kChunk = 1 << 15;

std::uint64_t chunk_count(std::uint64_t total) { return (total + kChunk - 1) / kChunk; }

void lower_to(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t current = target.load();
  while (value < current && !target.compare_exchange_weak(current, value)) {
  }
}

// Lexicographic rank of the first k-subset in [0, total) whose deletion leaves
// at least `ell` components; `total` when there is none.
std::uint64_t first_qualifying(const Graph& g, int k, std::uint64_t total, int ell, int jobs) {
  jobs = resolve_jobs(jobs);
  const int n = static_cast<int>(g.vertex_count());
  std::vector<ComponentCounter> counters(jobs, ComponentCounter(g));
  std::atomic<std::uint64_t> best{total};
  parallel_chunks(jobs, chunk_count(total), [&](std::size_t chunk, int worker) {
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    if (begin >= best.load()) return;
    auto& counter = counters[worker];
    bool hit = false;
    std::uint64_t steps = 0;
    const std::uint64_t stop = visit_combinations(n, k, begin, end, [&](std::span<const Vertex> f) {
      if ((++steps & 0xfff) == 0 && best.load() < begin) return true;
      hit = counter.count(f, ell) >= ell;
      return hit;
    });
    if (hit) lower_to(best, stop);
  });
  return best.load();
}

}  // namespace

KappaResult kappa_ell_exhaustive(const Graph& g, int ell, const ExhaustiveOptions& options) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  const int n = static_cast<int>(g.vertex_count());
  KappaResult result;
  result.ell = ell;
  result.tier = Tier::Exhaustive;
  result.budget = options.budget;
  result.k_max = options.k_max < 0 ? n : std::min(options.k_max, n);

  for (int k = 0; k <= result.k_max; ++k) {
    if (n - k < ell) {
      // Any k vertices leave fewer than ell vertices; take the first k ids.
      std::vector<Vertex> ids(k);
      std::iota(ids.begin(), ids.end(), Vertex{0});
      FaultSet fault(g.vertex_count(), std::move(ids));
      result.status = SearchStatus::Found;
      result.tier = Tier::RuleFewerThanEll;
      result.value = k;
      result.settled_below = k;
      result.explored = saturating_add(result.explored, 1);
      result.witness = CutWitness{fault, components(g, fault)};
      return result;
    }
    const std::uint64_t total = binomial(n, k);
    const std::uint64_t remaining = options.budget - std::min(options.budget, result.explored);
    const std::uint64_t scan = std::min(total, remaining);
    const std::uint64_t hit = first_qualifying(g, k, scan, ell, options.jobs);
    if (hit < scan) {
      FaultSet fault(g.vertex_count(), unrank_combination(hit, n, k));
      result.status = SearchStatus::Found;
      result.value = k;
      result.settled_below = k;
      result.explored = saturating_add(result.explored, hit + 1);
      result.witness = CutWitness{fault, components(g, fault)};
      return result;
    }
    result.explored = saturating_add(result.explored, scan);
    if (scan < total) {
      result.status = SearchStatus::Inconclusive;
      result.settled_below = k;
      return result;
    }
  }
  result.status = SearchStatus::NoCutWithinLimit;
  result.settled_below = result.k_max + 1;
  return result;
}

CutVerdict verify_cut(const Graph& g, const FaultSet& fault, int ell) {
  CutVerdict verdict;
  verdict.report = components(g, fault);
  const auto remaining = g.vertex_count() - fault.size();
  verdict.accepted = verdict.report.count() >= ell || remaining < static_cast<std::size_t>(ell);
  return verdict;
}

namespace {

struct ChunkCuts {
  std::uint64_t disconnecting = 0;
  std::uint64_t singleton_cuts = 0;
  std::uint64_t listed_total = 0;
  std::vector<ComponentReport> listed;
};

// Visits every k-subset and hands each one leaving at least two components
// (count capped at stop_at) to `classify`, which records into its chunk slot.
template <class Classify>
std::vector<ChunkCuts> scan_all(const Graph& g, int k, int stop_at, int jobs, std::size_t max_listed,
                                Classify&& classify) {
  jobs = resolve_jobs(jobs);
  const int n = static_cast<int>(g.vertex_count());
  const std::uint64_t total = binomial(n, k);
  std::vector<ComponentCounter> counters(jobs, ComponentCounter(g));
  std::vector<ChunkCuts> per_chunk(chunk_count(total));
  parallel_chunks(jobs, per_chunk.size(), [&](std::size_t chunk, int worker) {
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    auto& counter = counters[worker];
    auto& out = per_chunk[chunk];
    visit_combinations(n, k, begin, end, [&](std::span<const Vertex> f) {
      const int c = counter.count(f, stop_at);
      if (c >= 2) classify(c, f, out, max_listed);
      return false;
    });
  });
  return per_chunk;
}

}  // namespace

HyperScanReport hyper_connectivity_scan(const Graph& g, const ScanOptions& options) {
  HyperScanReport report;
  report.connectivity = vertex_connectivity(g);
  const int n = static_cast<int>(g.vertex_count());
  const std::uint64_t total = binomial(n, report.connectivity);
  if (total > options.budget) return report;

  auto per_chunk = scan_all(
      g, report.connectivity, INT_MAX, options.jobs, options.max_listed,
      [&](int, std::span<const Vertex> f, ChunkCuts& out, std::size_t cap) {
        ++out.disconnecting;
        const FaultSet fault(g.vertex_count(), {f.begin(), f.end()});
        ComponentReport cr = components(g, fault);
        if (cr.count() == 2 && cr.components.back().size() == 1) {
          ++out.singleton_cuts;
          return;
        }
        ++out.listed_total;
        if (out.listed.size() < cap) out.listed.push_back(std::move(cr));
      });
  report.complete = true;
  report.scanned = total;
  for (auto& chunk : per_chunk) {
    report.disconnecting += chunk.disconnecting;
    report.singleton_cuts += chunk.singleton_cuts;
    report.counterexample_count += chunk.listed_total;
    for (auto& cr : chunk.listed) {
      if (report.counterexamples.size() < options.max_listed) {
        report.counterexamples.push_back(std::move(cr));
      }
    }
  }
  report.hyper_connected = report.counterexample_count == 0;
  return report;
}

CutCensus census_cuts(const Graph& g, int size, int min_components, const ScanOptions& options) {
  CutCensus census;
  const int n = static_cast<int>(g.vertex_count());
  const std::uint64_t total = binomial(n, size);
  if (total > options.budget) return census;
  auto per_chunk = scan_all(g, size, min_components, options.jobs, options.max_listed,
                            [&](int c, std::span<const Vertex> f, ChunkCuts& out, std::size_t cap) {
                              if (c < min_components) return;
                              ++out.listed_total;
                              if (out.listed.size() < cap) {
                                out.listed.push_back(components(
                                    g, FaultSet(g.vertex_count(), {f.begin(), f.end()})));
                              }
                            });
  census.complete = true;
  census.scanned = total;
  for (auto& chunk : per_chunk) {
    for (auto& cr : chunk.listed) {
      if (census.cuts.size() < options.max_listed) census.cuts.push_back(std::move(cr));
    }
  }
  return census;
}

std::optional<int> formula_value(Family family, int ell, int n) {
  if (family == Family::AlternatingGroup) {
    if (ell == 3 && n >= 4) return 4 * n - 10;
    if (ell == 4 && n >= 4) return 6 * n - 16;
    if (ell == 5 && n >= 5) return 8 * n - 24;
    return std::nullopt;
  }
  if (n < 4) return std::nullopt;
  if (ell == 3) return 4 * n - 8;
  if (ell == 4) return 6 * n - 14;
  if (ell == 5) return 8 * n - 20;
  return std::nullopt;
}

namespace {

Vertex apply_id(const CayleyGraph& g, Vertex v, const GeneratorOp& op) {
  return g.id_of(apply(g.label(v), op));
}

// Independent sets containing vertex 0 with every member within distance 2 of
// vertex 0, minimizing |N(S)| and then lexicographically on N(S).
VertexList best_local_independent_set(const Graph& g, int size) {
  const auto dist = distances_from(g, 0);
  std::vector<Vertex> ball;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (dist[v] == 2) ball.push_back(v);
  }
  VertexList best_set;
  VertexList best_cut;
  std::vector<Vertex> chosen{0};
  auto consider = [&]() {
    VertexList cut = neighborhood(g, chosen);
    if (best_set.empty() || cut.size() < best_cut.size() ||
        (cut.size() == best_cut.size() && cut < best_cut)) {
      best_cut = std::move(cut);
      best_set = chosen;
    }
  };
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == size) {
      consider();
      return;
    }
    for (std::size_t i = from; i < ball.size(); ++i) {
      const Vertex v = ball[i];
      bool ok = true;
      for (Vertex u : chosen) ok = ok && !g.adjacent(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return make_vertex_list(best_set);
}

}  // namespace

ConstructedCut construct_extremal_cut(const CayleyGraph& g, int ell) {
  const auto formula = formula_value(g.family(), ell, g.n());
  if (!formula) {
    throw std::invalid_argument("no closed form for this family, ell and n");
  }
  const Graph& graph = g.graph();
  std::vector<Vertex> singles;
  if (g.family() == Family::AlternatingGroup) {
    const Vertex e = 0;
    if (ell == 3) {
      // The vertex opposite e on a 4-cycle: nonadjacent with two common neighbors.
      for (Vertex y = 1; y < g.vertex_count(); ++y) {
        if (!graph.adjacent(e, y) && common_neighbors(graph, e, y).size() == 2) {
          singles = {e, y};
          break;
        }
      }
    } else {
      const auto plus3 = GeneratorOp::rot_plus(3);
      const auto plus4 = GeneratorOp::rot_plus(4);
      const Vertex a = apply_id(g, apply_id(g, e, plus3), plus4);
      const Vertex b = apply_id(g, apply_id(g, e, plus4), plus3);
      singles = {e, a, b};
      if (ell == 5) {
        singles.push_back(
            apply_id(g, apply_id(g, apply_id(g, e, plus4), GeneratorOp::rot_minus(3)), plus4));
      }
    }
  } else {
    singles = best_local_independent_set(graph, ell - 1);
  }

  ConstructedCut cut;
  cut.formula = *formula;
  for (Vertex v : make_vertex_list(singles)) cut.family.parts.push_back({v});
  const FaultSet fault(g.vertex_count(), neighborhood(graph, family_union(cut.family)));
  cut.witness = CutWitness{fault, components(graph, fault)};
  return cut;
}

}  // namespace kappalab
