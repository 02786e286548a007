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

#ifndef KAPPALAB_JSON_IO_HPP_
#define KAPPALAB_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "kappalab/cayley.hpp"
#include "kappalab/connectivity.hpp"
#include "kappalab/kappa.hpp"
#include "kappalab/lemmas.hpp"

// JSON forms of every result type. Vertices are written as permutation labels
// except where a field says ids. Key order is fixed.

namespace kappalab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {family, n, vertices: [labels by id], edges: [[u, v], ...] (ids, u < v)}
Json graph_json(const CayleyGraph& g);

// {fault: [ids], count, components: [{size, shape, vertices: [labels]}]}
Json components_json(const CayleyGraph& g, const ComponentReport& report);

// {family, n, ell, value, tier, status, settled_below, witness, explored, budget}
Json kappa_json(const CayleyGraph& g, const KappaResult& result);

Json construction_json(const CayleyGraph& g, int ell, const ConstructedCut& cut);
Json cut_verdict_json(const CayleyGraph& g, int ell, const CutVerdict& verdict);
Json hyper_json(const CayleyGraph& g, const HyperScanReport& report);
Json census_json(const CayleyGraph& g, int size, int min_components, const CutCensus& census);

// {lemma_id, family, n, mode, trials, seed, instances_checked, min_attained,
//  verdict, violation_count, violations, exceptions, stats, notes}
Json report_json(const VerificationReport& report);

// Prepends "schema" and "command" to an object.
Json envelope(std::string_view command, const Json& body);

// Two-space indentation and a trailing newline.
std::string to_text(const Json& j);

}  // namespace kappalab

#endif  // KAPPALAB_JSON_IO_HPP_
