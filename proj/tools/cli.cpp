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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "kappalab/combinatorics.hpp"
#include "kappalab/json_io.hpp"
#include "kappalab/parallel.hpp"

namespace kappalab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string family;
  int n = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool graph = true) {
  if (graph) {
    cmd->add_option("--family", c.family, "Graph family: ag or s2")
        ->required()
        ->check(CLI::IsMember({"ag", "s2"}));
    cmd->add_option("--n", c.n, "Number of symbols")->required();
  }
  cmd->add_option("--jobs", c.jobs, "Worker threads; 0 detects the hardware count")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", c.seed, "Seed for sampled modes");
  cmd->add_option("--budget", c.budget, "Search budget in explored subsets or families");
  cmd->add_option("-o,--output", c.output, "Write the result to this file");
}

std::uint64_t resolve_budget(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv("KAPPALAB_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError("KAPPALAB_BUDGET must be a nonnegative integer");
  }
  return kDefaultBudget;
}

CayleyGraph make_graph(const Common& c) {
  const Family family = parse_family(c.family);
  const int cap = family == Family::AlternatingGroup ? kMaxAlternatingN : kMaxSplitStarN;
  if (c.n < kMinSymbols || c.n > cap) {
    throw UsageError("--n must lie in " + std::to_string(kMinSymbols) + ".." +
                     std::to_string(cap) + " for family " + c.family);
  }
  return build(family, c.n);
}

// Adds "jobs" after the envelope when auto-detection was requested, so the
// run can be repeated with the same worker count.
Json finish(std::string_view command, const Json& body, const Common& c) {
  Json j = envelope(command, body);
  if (c.jobs == 0) {
    Json with;
    for (const auto& [k, v] : j.items()) {
      with[k] = v;
      if (k == "command") with["jobs"] = resolve_jobs(0);
    }
    return with;
  }
  return j;
}

int emit(const std::string& text, const Common& c, std::ostream& out, std::ostream& err) {
  if (c.output.empty()) {
    out << text;
    return out ? kOk : kIoError;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) {
    err << "cannot open " << c.output << " for writing\n";
    return kIoError;
  }
  file << text;
  if (!file) {
    err << "write to " << c.output << " failed\n";
    return kIoError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct KappaArgs {
  int ell = 0;
  bool exhaustive = false;
  bool witness = false;
  bool construct = false;
  int part_size = 1;
  int k_max = -1;
};

int cmd_kappa(const Common& c, const KappaArgs& a, std::ostream& out, std::ostream& err) {
  if (a.ell < 2) throw UsageError("--ell must be at least 2");
  if (static_cast<int>(a.exhaustive) + a.witness + a.construct > 1) {
    throw UsageError("choose one of --exhaustive, --witness, --construct");
  }
  const auto g = make_graph(c);
  if (a.construct) {
    if (!formula_value(g.family(), a.ell, g.n())) {
      throw UsageError("no construction for this family, ell and n");
    }
    const auto cut = construct_extremal_cut(g, a.ell);
    return emit(to_text(finish("kappa", construction_json(g, a.ell, cut), c)), c, out, err);
  }
  KappaResult result;
  if (a.witness) {
    if (a.part_size < 1) throw UsageError("--B must be at least 1");
    WitnessOptions options;
    options.max_part_size = a.part_size;
    options.budget = resolve_budget(c);
    options.jobs = c.jobs;
    result = kappa_ell_witness_search(g.graph(), a.ell, options);
  } else {
    ExhaustiveOptions options;
    options.k_max = a.k_max;
    options.budget = resolve_budget(c);
    options.jobs = c.jobs;
    result = kappa_ell_exhaustive(g.graph(), a.ell, options);
  }
  const int code = emit(to_text(finish("kappa", kappa_json(g, result), c)), c, out, err);
  if (code != kOk) return code;
  return result.status == SearchStatus::Inconclusive ? kInconclusive : kOk;
}

struct CutArgs {
  int ell = 0;
  std::vector<std::string> fault;
};

int cmd_cut(const Common& c, const CutArgs& a, std::ostream& out, std::ostream& err) {
  if (a.ell < 2) throw UsageError("--ell must be at least 2");
  const auto g = make_graph(c);
  FaultSet fault;
  try {
    fault = FaultSet::from_labels(g, a.fault);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto verdict = verify_cut(g.graph(), fault, a.ell);
  return emit(to_text(finish("cut", cut_verdict_json(g, a.ell, verdict), c)), c, out, err);
}

struct VerifyArgs {
  std::string lemma;
  int size = 0;
  std::string rule;
  int bound = -1;
  std::string mode;
  std::uint64_t trials = 1'000'000;
};

VerificationMode pick_mode(const std::string& name, bool default_exhaustive, const Common& c,
                           const VerifyArgs& a) {
  const std::string chosen = name.empty() ? (default_exhaustive ? "exhaustive" : "sampled") : name;
  if (chosen == "exhaustive") return VerificationMode::exhaustive();
  if (chosen == "sampled") return VerificationMode::sampled(a.trials, c.seed);
  if (chosen == "targeted") return VerificationMode::targeted(a.trials, c.seed);
  throw UsageError("--mode must be exhaustive, sampled or targeted");
}

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = make_graph(c);
  const bool ag = g.family() == Family::AlternatingGroup;
  auto exhaustive_only = [&]() {
    if (!a.mode.empty() && a.mode != "exhaustive") {
      throw UsageError("lemma " + a.lemma + " only runs exhaustively");
    }
  };
  VerificationReport report;
  if (a.lemma == "basic") {
    exhaustive_only();
    report = verify_basic(g);
  } else if (a.lemma == "claims" || a.lemma == "remark") {
    exhaustive_only();
    if (!ag) throw UsageError("lemma " + a.lemma + " needs --family ag");
    report = a.lemma == "claims" ? verify_claims(g) : verify_remark_constructions(g);
  } else if (a.lemma == "neighbor-bounds" || a.lemma == "s2-neighbor-bounds") {
    if (a.lemma == "s2-neighbor-bounds" && ag) {
      throw UsageError("lemma s2-neighbor-bounds needs --family s2");
    }
    const int size = a.size != 0 ? a.size : (ag ? 3 : 2);
    const bool small = ag ? g.n() <= 5 : g.n() <= 4;
    const auto mode = pick_mode(a.mode, small, c, a);
    if (mode.kind == ModeKind::Targeted) throw UsageError("neighbor bounds have no targeted mode");
    const bool supported = ag ? (size == 3 || size == 4) : (size >= 2 && size <= 4);
    if (!supported) throw UsageError("unsupported --size for this family");
    report = verify_neighbor_bounds(g, size, mode, c.jobs);
  } else if (a.lemma == "cut-structure") {
    const std::string rule_id = a.rule.empty() ? (ag ? "ag-4n-11" : "s2-4n-8") : a.rule;
    const CutRule* rule = nullptr;
    try {
      rule = &find_cut_rule(rule_id);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (rule->family != g.family()) throw UsageError("rule " + rule_id + " is for the other family");
    CutStructureOptions options;
    options.bound = a.bound;
    options.budget = resolve_budget(c);
    options.jobs = c.jobs;
    const int bound = a.bound < 0 ? rule->bound(g.n()) : a.bound;
    if (bound < 1 || bound >= static_cast<int>(g.vertex_count())) {
      throw UsageError("--bound out of range");
    }
    std::uint64_t total = 0;
    for (int k = 1; k <= bound; ++k) {
      total = saturating_add(total, binomial(g.vertex_count(), k));
    }
    const auto mode = pick_mode(a.mode, total <= options.budget, c, a);
    report = verify_cut_structure(g, *rule, mode, options);
  } else {
    throw UsageError("unknown lemma: " + a.lemma);
  }
  const int code = emit(to_text(finish("verify", report_json(report), c)), c, out, err);
  if (code != kOk) return code;
  if (report.violation_count > 0) return kViolation;
  return report.mode.kind == ModeKind::Skipped ? kInconclusive : kOk;
}

struct TableArgs {
  std::vector<std::string> families{"ag", "s2"};
  std::vector<int> ag_n{4, 5, 6, 7, 8};
  std::vector<int> s2_n{4, 5, 6, 7};
};

// Graphs up to this many vertices get the exhaustive tier.
constexpr std::size_t kTableExhaustiveVertices = 24;

int cmd_table(const Common& c, const TableArgs& a, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  if (c.jobs == 0) csv << "# jobs " << resolve_jobs(0) << "\n";
  csv << "family,ell,n,formula,computed,tier,match\n";
  for (const auto& name : a.families) {
    const Family family = parse_family(name);
    const auto& ns = family == Family::AlternatingGroup ? a.ag_n : a.s2_n;
    const int cap = family == Family::AlternatingGroup ? kMaxAlternatingN : kMaxSplitStarN;
    for (int n : ns) {
      if (n < kMinSymbols || n > cap) throw UsageError("table n out of range for " + name);
    }
    for (int ell = 3; ell <= 5; ++ell) {
      for (int n : ns) {
        const auto formula = formula_value(family, ell, n);
        if (!formula) continue;
        const auto g = build(family, n);
        std::optional<int> computed;
        Tier tier = Tier::WitnessUpperBound;
        if (g.vertex_count() <= kTableExhaustiveVertices) {
          ExhaustiveOptions options;
          options.budget = resolve_budget(c);
          options.jobs = c.jobs;
          const auto r = kappa_ell_exhaustive(g.graph(), ell, options);
          if (r.status == SearchStatus::Found) {
            computed = r.value;
            tier = r.tier;
          }
        }
        if (!computed) {
          const auto cut = construct_extremal_cut(g, ell);
          if (verify_cut(g.graph(), cut.witness.fault, ell).accepted) {
            computed = static_cast<int>(cut.witness.fault.size());
          }
        }
        csv << name << ',' << ell << ',' << n << ',' << *formula << ','
            << (computed ? std::to_string(*computed) : "") << ',' << tier_name(tier) << ','
            << (computed == formula ? "yes" : "no") << '\n';
      }
    }
  }
  csv << "# h-extra connectivity, reference values only (not computed):\n"
         "# ag kappa^(1)=4n-11, kappa^(2)=6n-19, kappa^(3)=8n-28 for n>=5\n"
         "# s2 kappa^(1)=4n-9, kappa^(2)=6n-16, kappa^(3)=8n-24 for n>=4\n";
  return emit(csv.str(), c, out, err);
}

int cmd_gen(const Common& c, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto g = make_graph(c);
  if (format == "dimacs") return emit(to_dimacs(g.graph()), c, out, err);
  return emit(to_text(finish("gen", graph_json(g), c)), c, out, err);
}

int cmd_hyper(const Common& c, std::ostream& out, std::ostream& err) {
  const auto g = make_graph(c);
  ScanOptions options;
  options.budget = resolve_budget(c);
  options.jobs = c.jobs;
  const auto report = hyper_connectivity_scan(g.graph(), options);
  const int code = emit(to_text(finish("hyper", hyper_json(g, report), c)), c, out, err);
  if (code != kOk) return code;
  return report.complete ? kOk : kInconclusive;
}

int cmd_census(const Common& c, int size, int min_components, std::ostream& out,
               std::ostream& err) {
  const auto g = make_graph(c);
  if (size < 0 || size > static_cast<int>(g.vertex_count())) throw UsageError("--size out of range");
  if (min_components < 1) throw UsageError("--min-components must be positive");
  ScanOptions options;
  options.budget = resolve_budget(c);
  options.jobs = c.jobs;
  const auto census = census_cuts(g.graph(), size, min_components, options);
  const int code =
      emit(to_text(finish("census", census_json(g, size, min_components, census), c)), c, out, err);
  if (code != kOk) return code;
  return census.complete ? kOk : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Component connectivity of alternating group graphs and split-stars"};
  app.name("kappalab");
  app.require_subcommand(1);

  Common common;

  auto* gen = app.add_subcommand("gen", "Export a graph as DIMACS or JSON");
  add_common(gen, common);
  std::string format = "dimacs";
  gen->add_option("--format", format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));

  auto* kappa = app.add_subcommand("kappa", "Compute or bound the l-component connectivity");
  add_common(kappa, common);
  KappaArgs ka;
  kappa->add_option("--ell", ka.ell, "Number of components")->required();
  kappa->add_flag("--exhaustive", ka.exhaustive, "Exact search over vertex subsets (default)");
  kappa->add_flag("--witness", ka.witness, "Upper bound from witness families");
  kappa->add_flag("--construct", ka.construct, "Explicit extremal cut for the closed form");
  kappa->add_option("--B", ka.part_size, "Largest part in witness families");
  kappa->add_option("--kmax", ka.k_max, "Largest subset size tried by the exhaustive tier");

  auto* cut = app.add_subcommand("cut", "Check whether a vertex set is an l-component cut");
  add_common(cut, common);
  CutArgs ca;
  cut->add_option("--ell", ca.ell, "Number of components")->required();
  cut->add_option("--fault", ca.fault, "Vertex labels of the fault set")->required();

  auto* verify = app.add_subcommand("verify", "Check a structural property");
  add_common(verify, common);
  VerifyArgs va;
  verify
      ->add_option("--lemma", va.lemma,
                   "basic, neighbor-bounds, s2-neighbor-bounds, claims, remark or cut-structure")
      ->required();
  verify->add_option("--size", va.size, "Independent set size for neighbor bounds");
  verify->add_option("--rule", va.rule, "Cut rule id for cut-structure");
  verify->add_option("--bound", va.bound, "Largest fault size for cut-structure");
  verify->add_option("--mode", va.mode, "exhaustive, sampled or targeted");
  verify->add_option("--trials", va.trials, "Draws in sampled and targeted modes");

  auto* table = app.add_subcommand("table", "Closed forms against computed values, as CSV");
  add_common(table, common, false);
  TableArgs ta;
  table->add_option("--family", ta.families, "Families to include")
      ->check(CLI::IsMember({"ag", "s2"}));
  table->add_option("--ag-n", ta.ag_n, "Values of n for the alternating group graph");
  table->add_option("--s2-n", ta.s2_n, "Values of n for the split-star");

  auto* hyper = app.add_subcommand("hyper", "Scan every minimum-size vertex set");
  add_common(hyper, common);

  auto* census = app.add_subcommand("census", "List vertex sets of one size leaving many components");
  add_common(census, common);
  int census_size = 0;
  int census_min = 2;
  census->add_option("--size", census_size, "Fault size")->required();
  census->add_option("--min-components", census_min, "Fewest components to list");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(common, format, out, err);
    if (*kappa) return cmd_kappa(common, ka, out, err);
    if (*cut) return cmd_cut(common, ca, out, err);
    if (*verify) return cmd_verify(common, va, out, err);
    if (*table) return cmd_table(common, ta, out, err);
    if (*hyper) return cmd_hyper(common, out, err);
    if (*census) return cmd_census(common, census_size, census_min, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace kappalab::cli
