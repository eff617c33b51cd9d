// Copyright 2026 The breakqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;    // path to the command-line binary under test
fs::path g_workdir;   // scratch directory, wiped per run

struct RunOutcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunOutcome run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = g_workdir / ("out" + std::to_string(counter));
  const fs::path err = g_workdir / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = g_cli + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int raw = std::system(cmd.c_str());
  RunOutcome r;
  r.code = raw < 0 ? raw : WEXITSTATUS(raw);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("gen writes deterministic instance files") {
  const fs::path d1 = g_workdir / "gen_a";
  const fs::path d2 = g_workdir / "gen_b";
  auto r1 = run_cli("gen --n 3 --count 2 --seed 42 --out-dir " + d1.string());
  auto r2 = run_cli("gen --n 3 --count 2 --seed 42 --out-dir " + d2.string());
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  for (const char* name : {"mdrrt_n3_i0.json", "mdrrt_n3_i1.json"}) {
    CAPTURE(name);
    const std::string a = slurp(d1 / name);
    const std::string b = slurp(d2 / name);
    REQUIRE(!a.empty());
    CHECK(a == b);  // byte identical
  }
  CHECK(slurp(d1 / "mdrrt_n3_i0.json") != slurp(d1 / "mdrrt_n3_i1.json"));

  // Different seed, different tables.
  const fs::path d3 = g_workdir / "gen_c";
  auto r3 = run_cli("gen --n 3 --count 1 --seed 43 --out-dir " + d3.string());
  CHECK(r3.code == 0);
  CHECK(slurp(d3 / "mdrrt_n3_i0.json") != slurp(d1 / "mdrrt_n3_i0.json"));
}

TEST_CASE("solve writes a machine-readable solution next to the input") {
  const fs::path dir = g_workdir / "solve";
  REQUIRE(run_cli("gen --n 3 --count 1 --seed 7 --out-dir " + dir.string())
              .code == 0);
  const fs::path input = dir / "mdrrt_n3_i0.json";
  auto r = run_cli("solve " + input.string() + " --solver bnb");
  CHECK(r.code == 0);
  CHECK(r.out.find("proven optimal") != std::string::npos);

  const fs::path sol = dir / "mdrrt_n3_i0.json.solution.json";
  REQUIRE(fs::exists(sol));
  auto parsed = nlohmann::json::parse(slurp(sol));
  CHECK(parsed["optimal"].get<bool>());
  CHECK(parsed["objective"].get<int64_t>() == 12);  // 6n-6 at n=3
  CHECK(parsed["breaks"].get<int64_t>() == 12);
  CHECK(parsed["penalty"].get<int64_t>() == 0);
  CHECK(parsed["z"].size() == 15);

  // Same seed, same bytes (run into a custom output path).
  const fs::path s2 = dir / "again.json";
  const fs::path s3 = dir / "again2.json";
  auto rs2 = run_cli("solve " + input.string() +
                     " --solver sa --seed 5 -o " + s2.string());
  auto rs3 = run_cli("solve " + input.string() +
                     " --solver sa --seed 5 -o " + s3.string());
  CHECK(rs2.code == 0);
  CHECK(rs3.code == 0);
  CHECK(slurp(s2) == slurp(s3));
}

TEST_CASE("solve signals constraint infeasibility with exit three") {
  const fs::path dir = g_workdir / "infeasible";
  REQUIRE(run_cli("gen --n 2 --count 1 --out-dir " + dir.string()).code == 0);
  const fs::path input = dir / "mdrrt_n2_i0.json";
  // No four-team mirrored schedule admits a run-limit-2 assignment: the
  // optimum keeps a positive penalty part and the exit code says so.
  auto r = run_cli("solve " + input.string() + " --cc 2 --solver bf");
  CHECK(r.code == 3);
  auto ok = run_cli("solve " + input.string() + " --cc 3 --solver bf");
  CHECK(ok.code == 0);
}

TEST_CASE("check validates tables and assignments") {
  const fs::path dir = g_workdir / "check";
  fs::create_directories(dir);
  const fs::path tt = dir / "tt.json";
  {
    std::ofstream out(tt);
    out << R"({"n": 2, "tau": [[2,3,4,2,3,4],[1,4,3,1,4,3],[4,1,2,4,1,2],[3,2,1,3,2,1]]})";
  }
  CHECK(run_cli("check " + tt.string()).code == 0);

  const fs::path broken = dir / "broken.json";
  {
    std::ofstream out(broken);
    out << R"({"n": 2, "tau": [[2,3,4,2,3,9],[1,4,3,1,4,3],[4,1,2,4,1,2],[3,2,1,3,2,1]]})";
  }
  auto rb = run_cli("check " + broken.string());
  CHECK(rb.code == 3);

  const fs::path y = dir / "y.json";
  {
    std::ofstream out(y);
    out << R"({"y": [[1,0,1,0,1,0],[0,0,1,1,1,0],[1,1,0,0,0,1],[0,1,0,1,0,1]]})";
  }
  CHECK(run_cli("check " + tt.string() + " --assignment " + y.string())
            .code == 0);
  CHECK(run_cli("check " + tt.string() + " --assignment " + y.string() +
                " --cc 2")
            .code == 3);
  CHECK(run_cli("check " + tt.string() + " --assignment " + y.string() +
                " --cc 3")
            .code == 0);
}

TEST_CASE("export emits text model, metadata sidecar and rudy graph") {
  const fs::path dir = g_workdir / "export";
  REQUIRE(run_cli("gen --n 2 --count 1 --out-dir " + dir.string()).code == 0);
  const fs::path input = dir / "mdrrt_n2_i0.json";

  const fs::path qubo = dir / "model.qubo";
  auto rq = run_cli("export " + input.string() + " --format qubo-text -o " +
                    qubo.string());
  CHECK(rq.code == 0);
  const std::string text = slurp(qubo);
  CHECK(text.rfind("p qubo 6 ", 0) == 0);
  const std::string meta = slurp(dir / "model.qubo.meta.json");
  REQUIRE(!meta.empty());
  auto mj = nlohmann::json::parse(meta);
  CHECK(mj["n"].get<int>() == 2);

  const fs::path rudy = dir / "graph.rudy";
  auto rr = run_cli("export " + input.string() +
                    " --format maxcut-rudy --cc 2 -o " + rudy.string());
  CHECK(rr.code == 0);
  const std::string graph = slurp(rudy);
  CHECK(graph.find("# scale 1") != std::string::npos);
  CHECK(graph.find("# anchor") != std::string::npos);

  const fs::path copy = dir / "copy.json";
  CHECK(run_cli("export " + input.string() + " --format json -o " +
                copy.string())
            .code == 0);
  CHECK(nlohmann::json::parse(slurp(copy)) ==
        nlohmann::json::parse(slurp(input)));
}

TEST_CASE("bench prints the summary table and optional csv") {
  const fs::path csv = g_workdir / "bench.csv";
  auto r = run_cli(
      "bench --n-min 2 --n-max 3 --count 2 --seed 42 --solver bnb "
      "--time-limit 10 --csv " +
      csv.string());
  CHECK(r.code == 0);
  const std::string table = slurp(csv);
  std::istringstream lines(table);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,instances,solved,mean_time_s,mean_objective");
  std::string row2, row3;
  REQUIRE(static_cast<bool>(std::getline(lines, row2)));
  REQUIRE(static_cast<bool>(std::getline(lines, row3)));
  CHECK(row2.rfind("2,2,2,", 0) == 0);
  CHECK(row3.rfind("3,2,2,", 0) == 0);
  CHECK(row2.substr(row2.size() - 4) == "6.00");
  CHECK(row3.substr(row3.size() - 5) == "12.00");
}

TEST_CASE("usage and parse failures use distinct exit codes") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("gen --count 1").code == 1);          // missing required --n
  CHECK(run_cli("gen --n 1 --count 1").code == 1);    // out of range
  CHECK(run_cli("solve /nonexistent.json").code == 2);
  CHECK(run_cli("solve --solver tabu x.json").code == 1);

  const fs::path dir = g_workdir / "badjson";
  fs::create_directories(dir);
  const fs::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{ this is not json";
  }
  CHECK(run_cli("solve " + bad.string()).code == 2);
  CHECK(run_cli("check " + bad.string()).code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli-binary> [doctest args]\n",
                 argv[0]);
    return 1;
  }
  g_cli = argv[1];
  g_workdir = fs::temp_directory_path() / "breakqubo_test_cli";
  fs::remove_all(g_workdir);
  fs::create_directories(g_workdir);

  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);  // keep doctest away from the binary path
  const int rc = ctx.run();
  fs::remove_all(g_workdir);
  return rc;
}
