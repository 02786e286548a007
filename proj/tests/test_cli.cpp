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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = kappalab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

using kappalab::cli::ExitCode;

TEST_CASE("gen") {
  const auto ag = run({"gen", "--family", "ag", "--n", "4", "--format", "dimacs"});
  CHECK(ag.code == ExitCode::kOk);
  CHECK(ag.out.rfind("p edge 12 24\n", 0) == 0);
  const auto s2 = run({"gen", "--family", "s2", "--n", "4"});
  CHECK(s2.out.rfind("p edge 24 60\n", 0) == 0);
  CHECK(run({"gen", "--family", "ag", "--n", "2"}).code == ExitCode::kUsage);
  CHECK(run({"gen", "--family", "s2", "--n", "8"}).code == ExitCode::kUsage);
  CHECK(run({"gen", "--family", "star", "--n", "4"}).code == ExitCode::kUsage);
  CHECK(run({"gen", "--n", "4"}).code == ExitCode::kUsage);
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"--help"}).code == ExitCode::kOk);

  const auto json = run({"gen", "--family", "ag", "--n", "4", "--format", "json"}).json();
  CHECK(json["schema"] == 1);
  CHECK(json["command"] == "gen");
}

TEST_CASE("kappa") {
  const auto a = run({"kappa", "--family", "ag", "--n", "4", "--ell", "4", "--exhaustive"});
  CHECK(a.code == ExitCode::kOk);
  CHECK(a.json()["value"] == 8);
  CHECK(run({"kappa", "--family", "s2", "--n", "4", "--ell", "5", "--exhaustive"}).json()["value"] ==
        12);
  const auto w = run({"kappa", "--family", "ag", "--n", "5", "--ell", "3", "--witness", "--B", "1"});
  CHECK(w.json()["value"] == 10);
  CHECK(w.json()["tier"] == "WitnessUpperBound");
  const auto c = run({"kappa", "--family", "ag", "--n", "7", "--ell", "3", "--construct"});
  CHECK(c.code == ExitCode::kOk);

  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--witness", "--construct"}).code ==
        ExitCode::kUsage);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "1"}).code == ExitCode::kUsage);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "5", "--construct"}).code ==
        ExitCode::kUsage);
  const auto tight =
      run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--budget", "50"});
  CHECK(tight.code == ExitCode::kInconclusive);
  CHECK(tight.json()["status"] == "inconclusive");
  // A completed run exits 0 even when nothing qualifies below --kmax.
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--kmax", "3"}).code ==
        ExitCode::kOk);
}

TEST_CASE("budget from the environment") {
  ::setenv("KAPPALAB_BUDGET", "50", 1);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3"}).code == ExitCode::kInconclusive);
  // The flag wins over the variable.
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--budget", "100000"}).code ==
        ExitCode::kOk);
  ::setenv("KAPPALAB_BUDGET", "lots", 1);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3"}).code == ExitCode::kUsage);
  ::unsetenv("KAPPALAB_BUDGET");
}

TEST_CASE("cut") {
  const auto r = run({"cut", "--family", "ag", "--n", "4", "--ell", "3", "--fault", "1234", "2143",
                      "3412", "4321"});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.json()["accepted"] == false);
  CHECK(r.json()["count"] == 2);
  CHECK(run({"cut", "--family", "ag", "--n", "4", "--ell", "2", "--fault", "2134"}).code ==
        ExitCode::kUsage);
}

TEST_CASE("verify") {
  const auto basic = run({"verify", "--lemma", "basic", "--family", "ag", "--n", "5"});
  CHECK(basic.code == ExitCode::kOk);
  CHECK(basic.json()["violation_count"] == 0);
  CHECK(basic.json()["lemma_id"] == "basic");

  const auto cuts = run({"verify", "--lemma", "cut-structure", "--family", "ag", "--n", "4",
                         "--bound", "5"});
  CHECK(cuts.code == ExitCode::kOk);
  const auto j = cuts.json();
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["exceptions"].size() == 27);
  for (const auto& e : j["exceptions"]) {
    CHECK(e["observed"].get<std::string>().find("4-cycle") != std::string::npos);
  }

  const auto remark = run({"verify", "--lemma", "remark", "--family", "ag", "--n", "6"});
  CHECK(remark.json()["stats"]["min_size3"] == 20);
  CHECK(remark.json()["stats"]["min_size4"] == 24);

  CHECK(run({"verify", "--lemma", "claims", "--family", "ag", "--n", "5"}).code ==
        ExitCode::kViolation);
  CHECK(run({"verify", "--lemma", "claims", "--family", "ag", "--n", "4"}).code == ExitCode::kOk);
  CHECK(run({"verify", "--lemma", "nonsense", "--family", "ag", "--n", "4"}).code ==
        ExitCode::kUsage);
  CHECK(run({"verify", "--lemma", "claims", "--family", "s2", "--n", "4"}).code ==
        ExitCode::kUsage);

  const auto nb = run({"verify", "--lemma", "neighbor-bounds", "--family", "ag", "--n", "5",
                       "--size", "4"});
  CHECK(nb.json()["mode"] == "exhaustive");
  CHECK(nb.json()["min_attained"] == 16);
  const auto sampled = run({"verify", "--lemma", "neighbor-bounds", "--family", "ag", "--n", "6",
                            "--trials", "2000", "--seed", "4"});
  CHECK(sampled.json()["mode"] == "sampled");
  CHECK(sampled.json()["seed"] == 4);
  CHECK(sampled.json()["verdict"] == "consistent (sampled)");

  const auto s2 = run({"verify", "--lemma", "cut-structure", "--family", "s2", "--n", "5",
                       "--rule", "s2-6n-17", "--mode", "targeted", "--trials", "3000"});
  CHECK(s2.code == ExitCode::kOk);
  CHECK(run({"verify", "--lemma", "cut-structure", "--family", "s2", "--n", "5", "--rule",
             "ag-6n-20"})
            .code == ExitCode::kUsage);
  // A rule outside its range of n is reported as skipped.
  CHECK(run({"verify", "--lemma", "cut-structure", "--family", "ag", "--n", "4", "--rule",
             "ag-6n-20", "--bound", "4"})
            .code == ExitCode::kInconclusive);
}

TEST_CASE("table") {
  const auto t = run({"table"});
  CHECK(t.code == ExitCode::kOk);
  CHECK(t.out.rfind("family,ell,n,formula,computed,tier,match\n", 0) == 0);
  CHECK(t.out.find("ag,5,5,16,16,WitnessUpperBound,yes\n") != std::string::npos);
  CHECK(t.out.find("s2,4,4,10,10,Exhaustive,yes\n") != std::string::npos);
  CHECK(t.out.find("ag,3,7,18,18,WitnessUpperBound,yes\n") != std::string::npos);
  CHECK(t.out.find(",no\n") == std::string::npos);
  CHECK(t.out.find("not computed") != std::string::npos);
  const auto small = run({"table", "--family", "ag", "--ag-n", "4"});
  CHECK(small.out.find("s2,") == std::string::npos);
  CHECK(run({"table", "--ag-n", "9"}).code == ExitCode::kUsage);
}

TEST_CASE("hyper and census") {
  const auto h = run({"hyper", "--family", "ag", "--n", "4"});
  CHECK(h.code == ExitCode::kOk);
  CHECK(h.json()["hyper_connected"] == false);
  const auto c = run({"census", "--family", "ag", "--n", "4", "--size", "8", "--min-components",
                      "4"});
  CHECK(c.json()["cuts"].size() == 9);
  CHECK(run({"hyper", "--family", "ag", "--n", "5", "--budget", "10"}).code ==
        ExitCode::kInconclusive);
}

TEST_CASE("output files and worker counts") {
  const auto dir = std::filesystem::temp_directory_path() / "kappalab_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "k.json").string();
  const auto r = run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "-o", path});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"kappa", "--family", "ag", "--n", "4", "--ell", "3"}).out);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "-o",
             (dir / "missing" / "k.json").string()})
            .code == ExitCode::kIoError);
  std::filesystem::remove_all(dir);

  const auto base = run({"kappa", "--family", "s2", "--n", "4", "--ell", "3"}).out;
  for (const char* jobs : {"4", "8"}) {
    CHECK(run({"kappa", "--family", "s2", "--n", "4", "--ell", "3", "--jobs", jobs}).out == base);
  }
  const auto autodetect = run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--jobs", "0"});
  CHECK(autodetect.json()["jobs"].get<int>() >= 1);
  CHECK(run({"kappa", "--family", "ag", "--n", "4", "--ell", "3", "--jobs", "-1"}).code ==
        ExitCode::kUsage);
}
