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

// breakqubo: generate mirrored double round-robin timetables, reduce break
// minimization (optionally with consecutive home/away constraints) to QUBO,
// solve exactly or heuristically, and check/export the artifacts.
//
// This front end talks to the core library exclusively through the C API in
// breakqubo.h.

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "breakqubo.h"

namespace {

// Exit codes shared by all subcommands. Usage errors exit 1 (CLI parsing),
// so the codes below stay distinguishable from one another and from success.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;             // unreadable or malformed input
constexpr int kExitInfeasible = 3;        // constraint violations at optimum
constexpr int kExitTimeoutNoIncumbent = 4;

int status_exit(bq_status st) {
  switch (st) {
    case BQ_ERROR_PARSE:
    case BQ_ERROR_IO:
      return kExitParse;
    default:
      return kExitUsage;
  }
}

int complain(bq_status st, const std::string& context) {
  std::cerr << "error: " << context << ": " << bq_last_error() << "\n";
  return status_exit(st);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { bq_string_free(s); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* h = nullptr;
  ~Handle() { Free(h); }
  T** out() { return &h; }
  T* get() const { return h; }
};

using TimetableHandle = Handle<bq_timetable, bq_timetable_free>;
using ModelHandle = Handle<bq_model, bq_model_free>;
using MaxcutHandle = Handle<bq_maxcut, bq_maxcut_free>;
using ResultHandle = Handle<bq_result, bq_result_free>;

// User-facing --cc values to model mode names.
std::string cc_flag_to_mode(const std::string& cc) {
  if (cc == "none") return "none";
  if (cc == "2") return "cc2";
  if (cc == "3") return "cc3";
  if (cc == "2+3") return "cc2+cc3";
  return cc;  // rejected later by the library
}

int load_timetable_arg(const std::string& path, TimetableHandle& tt) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  if (bq_status st = bq_timetable_from_json(text->c_str(), tt.out());
      st != BQ_OK) {
    return complain(st, path);
  }
  return kExitOk;
}

// ---- gen ---------------------------------------------------------------

struct GenArgs {
  int n = 0;
  int count = 1;
  std::optional<uint64_t> seed;
  std::string out_dir = ".";
};

int cmd_gen(const GenArgs& a) {
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << a.out_dir << ": " << ec.message()
              << "\n";
    return kExitParse;
  }
  for (int i = 0; i < a.count; ++i) {
    TimetableHandle tt;
    bq_status st;
    if (a.seed) {
      uint64_t inst_seed = 0;
      bq_derive_seed(*a.seed, static_cast<uint64_t>(a.n),
                     static_cast<uint64_t>(i), &inst_seed);
      st = bq_timetable_generate(a.n, 1, inst_seed, tt.out());
    } else {
      st = bq_timetable_generate(a.n, 0, 0, tt.out());
    }
    if (st != BQ_OK) return complain(st, "generate");
    StringGuard json;
    if ((st = bq_timetable_to_json(tt.get(), &json.s)) != BQ_OK) {
      return complain(st, "serialize");
    }
    std::ostringstream name;
    name << "mdrrt_n" << a.n << "_i" << i << ".json";
    const std::string path =
        (std::filesystem::path(a.out_dir) / name.str()).string();
    if (!write_file(path, std::string(json.s) + "\n")) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitParse;
    }
    std::cout << path << "\n";
  }
  return kExitOk;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string cc = "none";
  int64_t penalty = 10;
  std::string solver = "bnb";
  double time_limit = 0.0;
  uint64_t seed = 0;
  std::string output;
};

int cmd_solve(const SolveArgs& a) {
  TimetableHandle tt;
  if (int rc = load_timetable_arg(a.input, tt); rc != kExitOk) return rc;

  ModelHandle model;
  if (bq_status st = bq_model_build(tt.get(), cc_flag_to_mode(a.cc).c_str(),
                                    a.penalty, model.out());
      st != BQ_OK) {
    return complain(st, "build model");
  }

  ResultHandle result;
  if (bq_status st = bq_solve(model.get(), a.solver.c_str(), a.time_limit,
                              a.seed, result.out());
      st != BQ_OK) {
    std::cerr << "error: solve: " << bq_last_error() << "\n";
    return st == BQ_ERROR_INTERNAL ? kExitTimeoutNoIncumbent : status_exit(st);
  }

  int n = 0, optimal = 0, violations = 0, num_vars = 0;
  int64_t objective = 0, breaks = 0, penalty_part = 0;
  double wall = 0.0;
  bq_timetable_n(tt.get(), &n);
  bq_model_num_vars(model.get(), &num_vars);
  bq_result_objective(result.get(), &objective);
  bq_result_optimal(result.get(), &optimal);
  bq_result_breaks(result.get(), &breaks);
  bq_result_penalty(result.get(), &penalty_part);
  bq_result_cc_violation_count(result.get(), &violations);
  bq_result_wall_seconds(result.get(), &wall);

  StringGuard json;
  if (bq_status st = bq_result_to_json(result.get(), &json.s); st != BQ_OK) {
    return complain(st, "serialize solution");
  }
  const std::string out_path =
      a.output.empty() ? a.input + ".solution.json" : a.output;
  if (!write_file(out_path, std::string(json.s) + "\n")) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitParse;
  }

  std::printf("n=%d teams=%d vars=%d cc=%s penalty=%" PRId64 " solver=%s\n", n,
              2 * n, num_vars, a.cc.c_str(),
              a.cc == "none" ? 0 : a.penalty, a.solver.c_str());
  std::printf("objective %" PRId64 " (breaks %" PRId64 ", penalty part %" PRId64
              "), %s, verified\n",
              objective, breaks, penalty_part,
              optimal ? "proven optimal" : "not proven optimal");
  if (violations > 0) {
    std::printf("decoded assignment violates %d consecutive-constraint "
                "window(s)\n",
                violations);
  }
  std::printf("wall %.6f s, solution written to %s\n", wall, out_path.c_str());

  if (optimal && penalty_part > 0) {
    std::printf("infeasible or penalty too small: optimum keeps a positive "
                "penalty part\n");
    return kExitInfeasible;
  }
  return kExitOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  int n_min = 2;
  int n_max = 8;
  int count = 5;
  uint64_t seed = 0;
  std::string cc = "none";
  int64_t penalty = 10;
  std::string solver = "bnb";
  double time_limit = 3600.0;
  std::string csv;
};

int cmd_bench(const BenchArgs& a) {
  std::ostringstream csv;
  csv << "n,instances,solved,mean_time_s,mean_objective\n";
  std::printf("%3s %10s %7s %13s %15s\n", "n", "instances", "solved",
              "mean_time_s", "mean_objective");
  for (int n = a.n_min; n <= a.n_max && a.count > 0; ++n) {
    int solved = 0;
    double time_sum = 0.0;
    double obj_sum = 0.0;
    for (int i = 0; i < a.count; ++i) {
      uint64_t inst_seed = 0, solver_seed = 0;
      bq_derive_seed(a.seed, static_cast<uint64_t>(n), static_cast<uint64_t>(i),
                     &inst_seed);
      bq_derive_seed(a.seed, 1000000 + static_cast<uint64_t>(n),
                     static_cast<uint64_t>(i), &solver_seed);
      TimetableHandle tt;
      if (bq_status st = bq_timetable_generate(n, 1, inst_seed, tt.out());
          st != BQ_OK) {
        return complain(st, "generate");
      }
      ModelHandle model;
      if (bq_status st = bq_model_build(tt.get(), cc_flag_to_mode(a.cc).c_str(),
                                        a.penalty, model.out());
          st != BQ_OK) {
        return complain(st, "build model");
      }
      ResultHandle result;
      if (bq_status st = bq_solve(model.get(), a.solver.c_str(), a.time_limit,
                                  solver_seed, result.out());
          st != BQ_OK) {
        return complain(st, "solve");
      }
      int optimal = 0;
      int64_t objective = 0;
      double wall = 0.0;
      bq_result_optimal(result.get(), &optimal);
      bq_result_objective(result.get(), &objective);
      bq_result_wall_seconds(result.get(), &wall);
      // An instance that was not solved to proven optimality within the
      // limit is charged the full time limit.
      double charged = wall;
      if (a.time_limit > 0) {
        charged = optimal ? std::min(wall, a.time_limit) : a.time_limit;
      }
      solved += optimal ? 1 : 0;
      time_sum += charged;
      obj_sum += static_cast<double>(objective);
    }
    const double mean_time = time_sum / a.count;
    const double mean_obj = obj_sum / a.count;
    std::printf("%3d %10d %7d %13.6f %15.2f\n", n, a.count, solved, mean_time,
                mean_obj);
    char row[160];
    std::snprintf(row, sizeof(row), "%d,%d,%d,%.6f,%.2f\n", n, a.count, solved,
                  mean_time, mean_obj);
    csv << row;
  }
  if (!a.csv.empty()) {
    if (!write_file(a.csv, csv.str())) {
      std::cerr << "error: cannot write " << a.csv << "\n";
      return kExitParse;
    }
    std::printf("csv written to %s\n", a.csv.c_str());
  }
  return kExitOk;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::string assignment;
  std::string cc = "none";
};

int cmd_check(const CheckArgs& a) {
  TimetableHandle tt;
  if (int rc = load_timetable_arg(a.input, tt); rc != kExitOk) return rc;

  StringGuard report;
  if (bq_status st = bq_timetable_validate(tt.get(), &report.s); st != BQ_OK) {
    return complain(st, "validate");
  }
  const bool table_ok = std::string(report.s) == "[]";
  if (table_ok) {
    std::printf("timetable: valid\n");
  } else {
    std::printf("timetable: INVALID %s\n", report.s);
  }

  bool assignment_ok = true;
  if (!a.assignment.empty()) {
    const auto text = read_file(a.assignment);
    if (!text) {
      std::cerr << "error: cannot read " << a.assignment << "\n";
      return kExitParse;
    }
    StringGuard rep;
    int ok = 0;
    if (bq_status st = bq_check_assignment(tt.get(), text->c_str(),
                                           a.cc.c_str(), &rep.s, &ok);
        st != BQ_OK) {
      return complain(st, a.assignment);
    }
    assignment_ok = ok == 1;
    std::printf("assignment: %s %s\n", assignment_ok ? "ok" : "NOT ok", rep.s);
  }

  return table_ok && assignment_ok ? kExitOk : kExitInfeasible;
}

// ---- export ----------------------------------------------------------------

struct ExportArgs {
  std::string input;
  std::string format;
  std::string cc = "none";
  int64_t penalty = 10;
  std::string output;
  std::string meta;
};

int cmd_export(const ExportArgs& a) {
  TimetableHandle tt;
  if (int rc = load_timetable_arg(a.input, tt); rc != kExitOk) return rc;

  if (a.format == "json") {
    StringGuard json;
    if (bq_status st = bq_timetable_to_json(tt.get(), &json.s); st != BQ_OK) {
      return complain(st, "serialize");
    }
    if (!write_file(a.output, std::string(json.s) + "\n")) {
      std::cerr << "error: cannot write " << a.output << "\n";
      return kExitParse;
    }
    std::printf("timetable json written to %s\n", a.output.c_str());
    return kExitOk;
  }

  ModelHandle model;
  if (bq_status st = bq_model_build(tt.get(), cc_flag_to_mode(a.cc).c_str(),
                                    a.penalty, model.out());
      st != BQ_OK) {
    return complain(st, "build model");
  }

  if (a.format == "qubo-text") {
    StringGuard text, meta;
    if (bq_status st = bq_model_to_text(model.get(), &text.s); st != BQ_OK) {
      return complain(st, "serialize model");
    }
    if (bq_status st = bq_model_meta_json(model.get(), &meta.s); st != BQ_OK) {
      return complain(st, "serialize metadata");
    }
    const std::string meta_path = a.meta.empty() ? a.output + ".meta.json" : a.meta;
    if (!write_file(a.output, text.s) ||
        !write_file(meta_path, std::string(meta.s) + "\n")) {
      std::cerr << "error: cannot write " << a.output << " / " << meta_path
                << "\n";
      return kExitParse;
    }
    std::printf("qubo text written to %s (metadata: %s)\n", a.output.c_str(),
                meta_path.c_str());
    return kExitOk;
  }

  if (a.format == "maxcut-rudy") {
    MaxcutHandle mc;
    if (bq_status st = bq_maxcut_from_model(model.get(), mc.out()); st != BQ_OK) {
      return complain(st, "reduce to max-cut");
    }
    StringGuard text;
    if (bq_status st = bq_maxcut_to_rudy(mc.get(), &text.s); st != BQ_OK) {
      return complain(st, "serialize max-cut");
    }
    if (!write_file(a.output, text.s)) {
      std::cerr << "error: cannot write " << a.output << "\n";
      return kExitParse;
    }
    std::printf("max-cut rudy written to %s\n", a.output.c_str());
    return kExitOk;
  }

  std::cerr << "error: unknown format '" << a.format
            << "' (expected qubo-text, maxcut-rudy or json)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "break-minimization toolkit for mirrored double round-robin "
      "tournaments (QUBO reduction, exact and heuristic solvers)"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* cgen = app.add_subcommand(
      "gen", "generate mirrored double round-robin timetables");
  cgen->add_option("--n", gen.n, "half the number of teams (2n teams)")
      ->required()
      ->check(CLI::Range(2, 1000));
  cgen->add_option("--count", gen.count, "instances to generate")
      ->check(CLI::Range(1, 1000000));
  cgen->add_option("--seed", gen.seed,
                   "master seed for slot shuffling (omit for the canonical "
                   "slot order)");
  cgen->add_option("-o,--out-dir", gen.out_dir, "output directory");

  SolveArgs solve;
  CLI::App* csolve = app.add_subcommand(
      "solve", "build the break-minimization QUBO for a timetable and solve");
  csolve->add_option("input", solve.input, "timetable JSON file")->required();
  csolve->add_option("--cc", solve.cc, "consecutive constraint level")
      ->check(CLI::IsMember({"none", "2", "3", "2+3"}));
  csolve->add_option("--penalty", solve.penalty, "penalty weight (default 10)")
      ->check(CLI::Range(int64_t{1}, int64_t{1000000}));
  csolve->add_option("--solver", solve.solver, "bf | bnb | sa")
      ->check(CLI::IsMember({"bf", "bnb", "sa"}));
  csolve->add_option("--time-limit", solve.time_limit,
                     "branch-and-bound limit in seconds (0 = none)");
  csolve->add_option("--seed", solve.seed, "annealer seed");
  csolve->add_option("-o,--output", solve.output,
                     "solution path (default <input>.solution.json)");

  BenchArgs bench;
  CLI::App* cbench = app.add_subcommand(
      "bench", "generate, solve and tabulate a range of instance sizes");
  cbench->add_option("--n-min", bench.n_min, "smallest n")->check(CLI::Range(2, 1000));
  cbench->add_option("--n-max", bench.n_max, "largest n")->check(CLI::Range(2, 1000));
  cbench->add_option("--count", bench.count, "instances per n (0 = empty table)")
      ->check(CLI::Range(0, 1000000));
  cbench->add_option("--seed", bench.seed, "master seed");
  cbench->add_option("--cc", bench.cc, "consecutive constraint level")
      ->check(CLI::IsMember({"none", "2", "3", "2+3"}));
  cbench->add_option("--penalty", bench.penalty, "penalty weight")
      ->check(CLI::Range(int64_t{1}, int64_t{1000000}));
  cbench->add_option("--solver", bench.solver, "bf | bnb | sa")
      ->check(CLI::IsMember({"bf", "bnb", "sa"}));
  cbench->add_option("--time-limit", bench.time_limit,
                     "per-instance limit in seconds (default 3600)");
  cbench->add_option("--csv", bench.csv, "also write the table as CSV");

  CheckArgs check;
  CLI::App* ccheck = app.add_subcommand(
      "check", "validate a timetable and optionally an assignment against it");
  ccheck->add_option("input", check.input, "timetable JSON file")->required();
  ccheck->add_option("--assignment", check.assignment,
                     "home/away assignment JSON to check");
  ccheck->add_option("--cc", check.cc, "consecutive constraint level")
      ->check(CLI::IsMember({"none", "2", "3", "2+3"}));

  ExportArgs exp;
  CLI::App* cexport = app.add_subcommand(
      "export", "write a timetable or its model in an exchange format");
  cexport->add_option("input", exp.input, "timetable JSON file")->required();
  cexport->add_option("--format", exp.format, "qubo-text | maxcut-rudy | json")
      ->required();
  cexport->add_option("--cc", exp.cc, "consecutive constraint level")
      ->check(CLI::IsMember({"none", "2", "3", "2+3"}));
  cexport->add_option("--penalty", exp.penalty, "penalty weight");
  cexport->add_option("-o,--output", exp.output, "output path")->required();
  cexport->add_option("--meta", exp.meta,
                      "metadata sidecar path (default <output>.meta.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cgen->parsed()) return cmd_gen(gen);
  if (csolve->parsed()) return cmd_solve(solve);
  if (cbench->parsed()) return cmd_bench(bench);
  if (ccheck->parsed()) return cmd_check(check);
  if (cexport->parsed()) return cmd_export(exp);
  return kExitUsage;
}
