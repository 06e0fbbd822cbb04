// Copyright 2026 The Authors.
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

// Drives the installed command-line binary end to end through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "maxdet/conic.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "maxdet_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout_" + std::to_string(counter) + ".txt");
  const fs::path err = work_dir() / ("stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(MAXDET_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return res;
}

fs::path write_file(const std::string& name, const std::string& body) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
  return p;
}

fs::path write_csv(const std::string& name, const oracles::Mat2& a) {
  std::string body;
  char buf[64];
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      body += buf;
      body += j + 1 < row.size() ? "," : "\n";
    }
  }
  return write_file(name, body);
}

const std::string kTriangleCsv = "1,1,0\n1,0,1\n0,1,1\n";

}  // namespace

TEST_CASE("solve reports a certified triangle optimum in base two") {
  const fs::path input = write_file("triangle.csv", kTriangleCsv);
  const fs::path report = work_dir() / "triangle_report.json";
  const RunResult res = run_cli("solve --input " + input.string() +
                                " --log-base 2 --json " + report.string());
  CHECK(res.code == 0);
  CHECK(res.out.find("(*)") != std::string::npos);
  CHECK(res.out.find("subset: 1 2 3") != std::string::npos);

  const json j = json::parse(slurp(report));
  const std::set<std::string> keys = [&] {
    std::set<std::string> k;
    for (auto it = j.begin(); it != j.end(); ++it) k.insert(it.key());
    return k;
  }();
  const std::set<std::string> want{"name",      "n",          "r",
                                   "lb_log",    "ub_log",     "gap",
                                   "optimal",   "subset",     "time_bnb_s",
                                   "time_lp_s", "log_base"};
  CHECK(keys == want);

  CHECK(j["name"] == "triangle");
  CHECK(j["n"] == 3);
  CHECK(j["r"] == 3);
  CHECK(j["optimal"] == true);
  CHECK(j["log_base"] == "2");
  CHECK(std::abs(j["lb_log"].get<double>() - 2.0) <= 1e-6);
  CHECK(j["ub_log"].get<double>() >= 2.0 - 1e-6);
  CHECK(j["subset"] == json::array({1, 2, 3}));

  const double lb = j["lb_log"].get<double>();
  const double ub = j["ub_log"].get<double>();
  const double expect_gap =
      std::abs(ub - lb) / std::max({std::abs(ub), std::abs(lb), 1e-8});
  CHECK(std::abs(j["gap"].get<double>() - expect_gap) <= 1e-12);
  fs::remove(report);
}

TEST_CASE("solve defaults to the natural log") {
  const fs::path input = write_file("triangle_e.csv", kTriangleCsv);
  const fs::path report = work_dir() / "triangle_e.json";
  const RunResult res = run_cli("solve --input " + input.string() +
                                " --json " + report.string());
  CHECK(res.code == 0);
  const json j = json::parse(slurp(report));
  CHECK(j["log_base"] == "e");
  CHECK(std::abs(j["lb_log"].get<double>() - 2.0 * std::numbers::ln2) <= 1e-6);
  fs::remove(report);
}

TEST_CASE("solve honors one-based fixed indices") {
  std::mt19937_64 gen(61);
  const auto a = oracles::gaussian(gen, 6, 3);
  const fs::path input = write_csv("fixed.csv", a);
  const fs::path report = work_dir() / "fixed.json";
  const RunResult res = run_cli("solve --input " + input.string() +
                                " --fix 2 --json " + report.string());
  CHECK(res.code == 0);
  const json j = json::parse(slurp(report));
  const auto subset = j["subset"].get<std::vector<int>>();
  CHECK(std::find(subset.begin(), subset.end(), 2) != subset.end());

  const auto best = oracles::best_subset(a, 3, {1});
  CHECK(std::abs(j["lb_log"].get<double>() -
                 best.log2_det_m * std::numbers::ln2) <= 1e-6);
}

TEST_CASE("relax prints the certified interval") {
  const fs::path input = write_file("triangle_relax.csv", kTriangleCsv);
  const RunResult res = run_cli("relax --input " + input.string());
  CHECK(res.code == 0);
  CHECK(res.out.find("objective_ln:") != std::string::npos);
  CHECK(res.out.find("certified_ub_ln:") != std::string::npos);
  CHECK(res.out.find("iters:") != std::string::npos);
  CHECK(res.out.find("converged: true") != std::string::npos);

  double obj = 0.0;
  std::istringstream in(res.out);
  std::string key;
  in >> key >> obj;
  REQUIRE(key == "objective_ln:");
  // Printed with six significant digits, so compare at that resolution.
  CHECK(std::abs(obj - std::log(4.0)) <= 1e-5);  // det = 2, squared 4
}

TEST_CASE("export writes solver-ready model files") {
  const fs::path input = write_file("triangle_export.csv", kTriangleCsv);

  SUBCASE("exponential-cone model as cbf") {
    const fs::path out = work_dir() / "tri_lp.cbf";
    const RunResult res =
        run_cli("export --input " + input.string() +
                " --form lp --format cbf --out " + out.string());
    CHECK(res.code == 0);
    CHECK(res.out.find("wrote") != std::string::npos);
    const std::string text = slurp(out);
    CHECK(text.find("VER") != std::string::npos);
    CHECK(text.find("MAX") != std::string::npos);
    CHECK(text.find("EXP") != std::string::npos);
    fs::remove(out);
  }

  SUBCASE("lifted model as json") {
    const fs::path out = work_dir() / "tri_sdp.json";
    const RunResult res =
        run_cli("export --input " + input.string() +
                " --form sdp --format json --out " + out.string());
    CHECK(res.code == 0);
    const maxdet::ConicModel m = maxdet::read_model(out);
    CHECK(m.n == 3);
    CHECK(m.r == 3);
    CHECK(m.psd_blocks.size() == 8);  // Y plus 2n+1 blocks
    fs::remove(out);
  }
}

TEST_CASE("instance generation is reproducible") {
  const fs::path a = work_dir() / "gen_a.csv";
  const fs::path b = work_dir() / "gen_b.csv";
  const RunResult ra = run_cli("gen-ocp --nodes 6 --edges 9 --seed 11 --out " +
                               a.string());
  const RunResult rb = run_cli("gen-ocp --nodes 6 --edges 9 --seed 11 --out " +
                               b.string());
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(ra.out.find("r = 6") != std::string::npos);
  CHECK(slurp(a) == slurp(b));

  const fs::path c = work_dir() / "gen_c.csv";
  const RunResult rc = run_cli("gen-ocp --nodes 6 --edges 9 --seed 12 --out " +
                               c.string());
  CHECK(rc.code == 0);
  CHECK(slurp(a) != slurp(c));
  for (const auto& p : {a, b, c}) fs::remove(p);
}

TEST_CASE("bench walks a directory and emits consistent rows") {
  const fs::path dir = work_dir() / "bench_dir";
  fs::create_directories(dir);
  std::mt19937_64 gen(62);
  {
    std::ofstream tri(dir / "aa_triangle.csv", std::ios::binary);
    tri << kTriangleCsv;
  }
  const auto m1 = oracles::gaussian(gen, 6, 3);
  const auto m2 = oracles::gaussian(gen, 8, 2);
  write_csv("bench_dir/bb_random.csv", m1);
  write_csv("bench_dir/cc_random.csv", m2);

  const fs::path lines = work_dir() / "bench.jsonl";
  const RunResult res = run_cli("bench --dir " + dir.string() +
                                " --log-base 2 --json " + lines.string());
  CHECK(res.code == 0);

  std::istringstream in(slurp(lines));
  std::string line;
  std::vector<json> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["name"] == "aa_triangle");
  CHECK(rows[1]["name"] == "bb_random");
  CHECK(rows[2]["name"] == "cc_random");
  for (const auto& j : rows) {
    const double lb = j["lb_log"].get<double>();
    const double ub = j["ub_log"].get<double>();
    const double expect =
        std::abs(ub - lb) / std::max({std::abs(ub), std::abs(lb), 1e-8});
    CHECK(std::abs(j["gap"].get<double>() - expect) <= 1e-12);
    CHECK(j["optimal"] == true);
    CHECK(res.out.find(j["name"].get<std::string>()) != std::string::npos);
  }
  fs::remove_all(dir);
  fs::remove(lines);
}

TEST_CASE("failures exit with distinct codes and one-line diagnostics") {
  SUBCASE("missing input file") {
    const RunResult res = run_cli("solve --input /no/such/file.csv");
    CHECK(res.code == 3);
    CHECK(!res.err.empty());
    CHECK(std::count(res.err.begin(), res.err.end(), '\n') == 1);
  }

  SUBCASE("unparsable field") {
    const fs::path bad = write_file("bad.csv", "1,2\n3,oops\n");
    const RunResult res = run_cli("solve --input " + bad.string());
    CHECK(res.code == 3);
    CHECK(res.err.find("parse error") != std::string::npos);
  }

  SUBCASE("invalid generator dimensions") {
    const RunResult res =
        run_cli("gen-ocp --nodes 2 --edges 3 --seed 1 --out " +
                (work_dir() / "never.csv").string());
    CHECK(res.code == 1);
    CHECK(res.err.find("usage error") != std::string::npos);
  }

  SUBCASE("dependent fixed rows") {
    const fs::path dep = write_file("dep.csv", "1,0\n2,0\n0,1\n");
    const RunResult res =
        run_cli("solve --input " + dep.string() + " --fix 1,2");
    CHECK(res.code == 2);
    CHECK(res.err.find("infeasible") != std::string::npos);
  }

  SUBCASE("fixed index below one") {
    const fs::path tri = write_file("tri_fix.csv", kTriangleCsv);
    const RunResult res =
        run_cli("solve --input " + tri.string() + " --fix 0");
    CHECK(res.code == 1);
  }

  SUBCASE("unknown subcommand") {
    const RunResult res = run_cli("frobnicate");
    CHECK(res.code != 0);
  }
}
