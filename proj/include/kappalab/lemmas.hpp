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

#ifndef KAPPALAB_LEMMAS_HPP_
#define KAPPALAB_LEMMAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kappalab/cayley.hpp"
#include "kappalab/connectivity.hpp"
#include "kappalab/kappa.hpp"

// Machine checks of structural properties of the two Cayley families. Every
// verifier takes the graph explicitly so corrupted fixtures can be fed in.

namespace kappalab {

enum class ModeKind { Exhaustive, Sampled, Targeted, Skipped };

std::string_view mode_name(ModeKind kind);

struct VerificationMode {
  ModeKind kind = ModeKind::Exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string reason;  // Skipped only

  static VerificationMode exhaustive() { return {}; }
  static VerificationMode sampled(std::uint64_t trials, std::uint64_t seed) {
    return {ModeKind::Sampled, trials, seed, {}};
  }
  // Faults built around the neighborhood of random small connected sets.
  static VerificationMode targeted(std::uint64_t trials, std::uint64_t seed) {
    return {ModeKind::Targeted, trials, seed, {}};
  }
  static VerificationMode skipped(std::string reason) {
    return {ModeKind::Skipped, 0, 0, std::move(reason)};
  }
};

// A replayable input: the vertex labels of the fault or vertex set, plus a
// short description of what was observed.
struct Finding {
  std::string clause;
  std::vector<std::string> input;
  std::string observed;

  friend bool operator==(const Finding&, const Finding&) = default;
  friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct VerificationReport {
  std::string lemma_id;
  Family family = Family::AlternatingGroup;
  int n = 0;
  VerificationMode mode;
  std::uint64_t instances_checked = 0;
  std::optional<int> min_attained;
  std::vector<std::pair<std::string, std::int64_t>> stats;
  std::uint64_t violation_count = 0;
  std::vector<Finding> violations;  // the first kMaxListed, sorted
  std::vector<Finding> exceptions;  // allowed exceptional outcomes, sorted
  std::vector<std::string> notes;

  bool consistent() const { return violation_count == 0 && mode.kind != ModeKind::Skipped; }
  // "consistent", "consistent (sampled)", "violated" or "skipped".
  std::string verdict() const;
  std::int64_t stat(std::string_view key) const;  // 0 when absent
};

inline constexpr std::size_t kMaxListed = 1000;

// External edge counts between parts, out-neighbor placement and common
// neighbor caps. For the alternating group graph: every part pair has (n-2)!
// external edges, the two out-neighbors of a vertex lie in different parts and
// nonadjacent pairs share at most 2 neighbors. For the split-star: degree and
// connectivity 2n-3, 2(n-2)! external edges per part pair, the two
// out-neighbors lie in different parts and are adjacent, vertices of one part
// have distinct out-neighbors, and common neighbors are capped at 1, 2, 0 for
// distance 1, 2, >= 3.
VerificationReport verify_basic(const CayleyGraph& g);

// Minimum of |N(S)| over independent sets S of `set_size` vertices containing
// vertex 0, against 6n-16 / 8n-24 (alternating group graph, sizes 3 and 4) or
// 4n-8 / 6n-14 / 8n-20 (split-star, sizes 2, 3, 4). Sampled mode draws the
// other members uniformly and discards dependent draws.
VerificationReport verify_neighbor_bounds(const CayleyGraph& g, int set_size,
                                          const VerificationMode& mode, int jobs = 1);

// The second-neighborhood sets around e in the alternating group graph (N+,
// N-, N++, N+-, N-+, N--) and the common-neighbor caps between them.
VerificationReport verify_claims(const CayleyGraph& g);

// The explicit 3- and 4-sets built from e with rotations g_i+, g_j+, g_i- for
// every ordered pair i != j in 3..n: independence and |N(S)| = 6n-16, 8n-24.
VerificationReport verify_remark_constructions(const CayleyGraph& g);

// Extra observable conditions attached to an outcome.
enum class OutcomeCheck {
  None,
  CutIsEdgeNeighborhood,  // F = N({u, v}) for the edge component
  SplitStarEdge,          // 2-exchange: F = N({u,v}), |F| = 4n-8; else one
                          // common neighbor and |F| <= |N({u,v})| + 1
  SplitStarSingletonPair  // F = N(u) u N(v) with exactly 2 common neighbors
};

struct AllowedOutcome {
  std::string clause;
  int components = 2;
  // Shapes of the components other than the largest, smallest first. With
  // `whole`, the shapes of all components.
  std::vector<ShapeKind> small;
  bool whole = false;
  int cut_size = -1;  // required |F|, -1 for any
  bool exceptional = false;
  OutcomeCheck check = OutcomeCheck::None;
};

// A cut-structure statement: a vertex cut of at most slope * n - offset
// vertices leaves one of the allowed outcomes.
struct CutRule {
  std::string id;
  Family family = Family::AlternatingGroup;
  int min_n = 4;
  int slope = 0;
  int offset = 0;

  int bound(int n) const { return slope * n - offset; }
};

const std::vector<CutRule>& cut_rules();
// Throws std::invalid_argument for unknown ids.
const CutRule& find_cut_rule(std::string_view id);
std::vector<AllowedOutcome> allowed_outcomes(const CutRule& rule, int n);

// The clause matched by the cut, or nullopt when none applies.
std::optional<AllowedOutcome> match_outcome(const CayleyGraph& g, const CutRule& rule,
                                            const ComponentReport& report);

struct CutStructureOptions {
  int bound = -1;  // -1 means rule.bound(n)
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
};

// Exhaustive mode checks every fault of size 1..bound; sampled mode draws
// `trials` uniform faults of exactly `bound` vertices; targeted mode draws
// faults containing the neighborhood of random small connected sets. Faults
// that leave G connected are counted but need no outcome.
VerificationReport verify_cut_structure(const CayleyGraph& g, const CutRule& rule,
                                        const VerificationMode& mode,
                                        const CutStructureOptions& options = {});

}  // namespace kappalab

#endif  // KAPPALAB_LEMMAS_HPP_
