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

#ifndef KAPPALAB_KAPPA_HPP_
#define KAPPALAB_KAPPA_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kappalab/cayley.hpp"
#include "kappalab/connectivity.hpp"
#include "kappalab/graph.hpp"

// l-component connectivity: the fewest vertices whose deletion leaves at least
// l components, or fewer than l vertices.

namespace kappalab {

inline constexpr std::uint64_t kDefaultBudget = 2'000'000'000;

enum class Tier { Exhaustive, WitnessUpperBound, RuleFewerThanEll };
enum class SearchStatus {
  Found,             // value holds the result for the tier
  NoCutWithinLimit,  // no qualifying set of size <= k_max exists
  Inconclusive,      // the budget ran out; sizes below settled_below are excluded
};

std::string_view tier_name(Tier tier);
std::string_view status_name(SearchStatus status);

struct CutWitness {
  FaultSet fault;
  ComponentReport report;
};

// Pairwise disjoint, pairwise nonadjacent connected parts. Deleting the
// neighborhood of their union leaves every part as a union of components.
struct WitnessFamily {
  std::vector<VertexList> parts;
};

VertexList family_union(const WitnessFamily& family);
// Disjointness, connectivity of each part, no edges between parts and a
// nonempty remainder outside the union and its neighborhood.
bool is_valid_family(const Graph& g, const WitnessFamily& family);

struct KappaResult {
  SearchStatus status = SearchStatus::Inconclusive;
  Tier tier = Tier::Exhaustive;
  int ell = 2;
  int value = -1;          // meaningful when status == Found
  int settled_below = 0;   // every size below this was fully excluded
  int k_max = 0;
  std::optional<CutWitness> witness;
  std::optional<WitnessFamily> family;
  // Exhaustive tier: subsets considered in enumeration order up to and
  // including the witness. Witness tier: families evaluated.
  std::uint64_t explored = 0;
  std::uint64_t budget = 0;
};

struct ExhaustiveOptions {
  int k_max = -1;  // -1 means |V|
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
};

// Scans sizes k = 0, 1, ... in increasing order and subsets of each size in
// lexicographic order, so the first hit is a minimum cut and the
// lexicographically smallest one of that size. Throws std::invalid_argument
// for ell < 2.
KappaResult kappa_ell_exhaustive(const Graph& g, int ell, const ExhaustiveOptions& options = {});

struct WitnessOptions {
  int max_part_size = 1;
  // Only families with a part containing vertex 0. Sound for
  // vertex-transitive graphs, which includes both Cayley families.
  bool pin_vertex_zero = true;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
};

// Minimum of |N(union)| over witness families of ell - 1 parts of size at
// most max_part_size; an upper bound on the l-component connectivity. Ties go
// to the lexicographically smallest cut.
KappaResult kappa_ell_witness_search(const Graph& g, int ell, const WitnessOptions& options = {});

// Connected vertex sets of size 1..max_size, each listed once as a sorted
// vertex list, in lexicographic order.
std::vector<VertexList> connected_sets(const Graph& g, int max_size);

// The closed-form value of the l-component connectivity for the family, or
// nullopt outside ell in {3, 4, 5} and the proven range of n.
std::optional<int> formula_value(Family family, int ell, int n);

struct ConstructedCut {
  WitnessFamily family;  // the singleton parts whose neighborhood is the cut
  CutWitness witness;
  int formula = 0;
};

// Builds the extremal cut for (family, ell, n): for the alternating group
// graph the neighborhood of two opposite corners of a 4-cycle (ell = 3), of
// {e, e g_i+ g_j+, e g_j+ g_i+} (ell = 4) and of that set plus
// e g_j+ g_i- g_j+ (ell = 5), with i = 3, j = 4; for the split-star the
// neighborhood of an independent set of ell - 1 vertices within distance 2
// of e that minimizes the neighborhood. Throws std::invalid_argument when
// formula_value is nullopt.
ConstructedCut construct_extremal_cut(const CayleyGraph& g, int ell);

struct CutVerdict {
  bool accepted = false;
  ComponentReport report;  // report.count() is the observed component count
};

CutVerdict verify_cut(const Graph& g, const FaultSet& fault, int ell);

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::size_t max_listed = 1000;  // counterexamples kept in the report
};

struct HyperScanReport {
  int connectivity = 0;
  bool complete = false;  // false when C(|V|, connectivity) exceeds the budget
  std::uint64_t scanned = 0;
  std::uint64_t disconnecting = 0;
  std::uint64_t singleton_cuts = 0;  // two components, the smaller a singleton
  std::uint64_t counterexample_count = 0;
  std::vector<ComponentReport> counterexamples;  // in lexicographic order of F
  bool hyper_connected = false;
};

// Enumerates every vertex set of size vertex_connectivity(g).
HyperScanReport hyper_connectivity_scan(const Graph& g, const ScanOptions& options = {});

struct CutCensus {
  bool complete = false;
  std::uint64_t scanned = 0;
  std::vector<ComponentReport> cuts;  // in lexicographic order of F
};

// All vertex sets of exactly `size` vertices leaving >= min_components components.
CutCensus census_cuts(const Graph& g, int size, int min_components,
                      const ScanOptions& options = {});

}  // namespace kappalab

#endif  // KAPPALAB_KAPPA_HPP_
