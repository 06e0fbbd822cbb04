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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxdet/bnb.hpp"
#include "maxdet/conic.hpp"
#include "maxdet/csv.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/ocp.hpp"
#include "maxdet/relax.hpp"
#include "maxdet/report.hpp"

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

double now_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1-based user-facing row indices to the library's 0-based form.
std::vector<int> to_zero_based(const std::vector<int>& fixed) {
  std::vector<int> out;
  out.reserve(fixed.size());
  for (const int j : fixed) {
    if (j < 1) throw maxdet::BadSubset("row indices are 1-based");
    out.push_back(j - 1);
  }
  return out;
}

struct InstanceResult {
  maxdet::ReportRow row;
  maxdet::SolveReport solve;
  maxdet::RelaxSolution relax;
};

InstanceResult run_instance(const std::string& name,
                            const maxdet::InstanceMatrix& v,
                            const std::vector<int>& fixed, double time_limit_s,
                            maxdet::LogBase base, double relax_tol) {
  InstanceResult out;
  maxdet::SolveOptions opts;
  opts.time_limit_s = time_limit_s;
  out.solve = maxdet::solve(v, fixed, opts);

  const auto t0 = std::chrono::steady_clock::now();
  maxdet::RelaxOptions ropts;
  ropts.tol = relax_tol;
  out.relax = maxdet::solve_lp_relaxation(v, fixed, ropts);
  const double time_lp = now_seconds(t0);

  // The exact solver reports log2 det(M); the relaxation reports
  // ln det(M).  Both are converted to the requested base.
  const double ln2 = std::numbers::ln2;
  const double lb = base == maxdet::LogBase::kTwo ? out.solve.lb_log2
                                                  : out.solve.lb_log2 * ln2;
  const double ub = base == maxdet::LogBase::kTwo
                        ? out.relax.cert_ub_ln / ln2
                        : out.relax.cert_ub_ln;
  out.row.name = name;
  out.row.n = v.n();
  out.row.r = v.r();
  out.row.lb = lb;
  out.row.lb_optimal = out.solve.optimal;
  out.row.time_bnb_s = out.solve.time_seconds;
  out.row.ub = ub;
  out.row.time_lp_s = time_lp;
  out.row.gap = maxdet::normalized_gap(lb, ub);
  out.row.log_base = base;
  return out;
}

ordered_json report_json(const InstanceResult& res) {
  ordered_json j;
  j["name"] = res.row.name;
  j["n"] = res.row.n;
  j["r"] = res.row.r;
  j["lb_log"] = res.row.lb;
  j["ub_log"] = res.row.ub;
  j["gap"] = res.row.gap;
  j["optimal"] = res.row.lb_optimal;
  j["subset"] = res.solve.subset;
  j["time_bnb_s"] = res.row.time_bnb_s;
  j["time_lp_s"] = res.row.time_lp_s;
  j["log_base"] = res.row.log_base == maxdet::LogBase::kTwo ? "2" : "e";
  return j;
}

maxdet::InstanceMatrix load_instance(const std::string& input, char delimiter,
                                     bool skip_header) {
  maxdet::CsvOptions opts;
  opts.delimiter = delimiter;
  opts.skip_header = skip_header;
  const maxdet::RawMatrix raw = maxdet::load_csv(input, opts);
  return maxdet::instance_from_raw(raw);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Maximum-determinant principal submatrix toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string json_path;
  std::string log_base_name = "e";
  std::vector<int> fix;
  double time_limit_s = 600.0;
  double relax_tol = 1e-6;
  char delimiter = ',';
  bool skip_header = false;

  const auto add_csv_flags = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "CSV file with one observation per row")
        ->required();
    cmd->add_option("--delimiter", delimiter, "field delimiter (default ,)");
    cmd->add_flag("--skip-header", skip_header,
                  "ignore the first nonblank line");
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "exact solve with certified bounds and a benchmark row");
  add_csv_flags(solve);
  solve->add_option("--fix", fix,
                    "1-based row indices forced into the subset")
      ->delimiter(',');
  solve->add_option("--time-limit", time_limit_s,
                    "search budget in seconds (default 600)");
  solve->add_option("--log-base", log_base_name,
                    "report logs in base 2 or e (default e)")
      ->check(CLI::IsMember({"2", "e"}));
  solve->add_option("--json", json_path, "also write the report as JSON");

  CLI::App* relax = app.add_subcommand(
      "relax", "certified upper bound from the continuous relaxation");
  add_csv_flags(relax);
  relax->add_option("--tol", relax_tol,
                    "relative certificate gap target (default 1e-6)");

  CLI::App* exporter =
      app.add_subcommand("export", "write a conic model of the instance");
  add_csv_flags(exporter);
  std::string form = "lp";
  std::string format = "cbf";
  exporter->add_option("--form", form, "relaxation family: lp or sdp")
      ->check(CLI::IsMember({"lp", "sdp"}));
  exporter->add_option("--format", format, "file format: cbf or json")
      ->check(CLI::IsMember({"cbf", "json"}));
  exporter->add_option("--out", out_path, "output path")->required();

  CLI::App* gen = app.add_subcommand(
      "gen-ocp", "sample a random graph instance and write it as CSV");
  int nodes = 0;
  int edges = 0;
  std::uint64_t seed = 0;
  gen->add_option("--nodes", nodes, "vertex count r")->required();
  gen->add_option("--edges", edges, "edge count n")->required();
  gen->add_option("--seed", seed, "generator seed (default 0)");
  gen->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* bench = app.add_subcommand(
      "bench", "solve every CSV in a directory and print a table");
  std::string dir;
  bench->add_option("--dir", dir, "directory holding *.csv instances")
      ->required();
  bench->add_option("--time-limit", time_limit_s,
                    "per-instance budget in seconds (default 600)");
  bench->add_option("--log-base", log_base_name,
                    "report logs in base 2 or e (default e)")
      ->check(CLI::IsMember({"2", "e"}));
  bench->add_option("--json", json_path,
                    "also write one JSON report per line");
  bench->add_option("--delimiter", delimiter, "field delimiter (default ,)");
  bench->add_flag("--skip-header", skip_header,
                  "ignore the first nonblank line of each file");

  CLI11_PARSE(app, argc, argv);
  const maxdet::LogBase base = log_base_name == "2" ? maxdet::LogBase::kTwo
                                                    : maxdet::LogBase::kNatural;

  if (solve->parsed()) {
    const maxdet::InstanceMatrix v = load_instance(input, delimiter,
                                                   skip_header);
    const InstanceResult res =
        run_instance(fs::path(input).stem().string(), v, to_zero_based(fix),
                     time_limit_s, base, relax_tol);
    std::cout << maxdet::format_table({&res.row, 1});
    std::cout << "subset:";
    for (const int i : res.solve.subset) std::cout << ' ' << i;
    std::cout << "\nnodes: " << res.solve.nodes_explored << "\n";
    if (!json_path.empty()) {
      std::ofstream os(json_path, std::ios::binary);
      if (!os)
        throw maxdet::IoError("cannot open " + json_path + " for writing");
      os << report_json(res).dump(2) << "\n";
    }
    return 0;
  }

  if (relax->parsed()) {
    const maxdet::InstanceMatrix v = load_instance(input, delimiter,
                                                   skip_header);
    maxdet::RelaxOptions opts;
    opts.tol = relax_tol;
    const maxdet::RelaxSolution sol = maxdet::solve_lp_relaxation(v, {}, opts);
    std::cout << "objective_ln: " << sol.obj_ln << "\n"
              << "certified_ub_ln: " << sol.cert_ub_ln << "\n"
              << "iters: " << sol.iters << "\n"
              << "converged: " << (sol.converged ? "true" : "false") << "\n";
    return 0;
  }

  if (exporter->parsed()) {
    const maxdet::InstanceMatrix v = load_instance(input, delimiter,
                                                   skip_header);
    const maxdet::ConicModel model = form == "lp"
                                         ? maxdet::build_expcone_lp(v)
                                         : maxdet::build_sdp_relaxation(v);
    maxdet::write_model(model,
                        format == "cbf" ? maxdet::ModelFormat::kCbf
                                        : maxdet::ModelFormat::kJson,
                        out_path);
    std::cout << "wrote " << out_path << " (" << model.num_scalar_vars
              << " variables, " << model.psd_blocks.size() << " psd blocks, "
              << model.exp_cones.size() << " exp cones)\n";
    return 0;
  }

  if (gen->parsed()) {
    const maxdet::OcpInstance inst = maxdet::gen_ocp(nodes, edges, seed);
    maxdet::write_instance_csv(inst, out_path);
    std::cout << "wrote " << out_path << " (r = " << inst.r
              << ", n = " << inst.n << ", seed = " << inst.seed << ")\n";
    return 0;
  }

  if (bench->parsed()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".csv")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw maxdet::IoError("no .csv files in " + dir);

    std::ofstream json_os;
    if (!json_path.empty()) {
      json_os.open(json_path, std::ios::binary);
      if (!json_os)
        throw maxdet::IoError("cannot open " + json_path + " for writing");
    }
    std::vector<maxdet::ReportRow> rows;
    for (const fs::path& file : files) {
      const maxdet::InstanceMatrix v =
          load_instance(file.string(), delimiter, skip_header);
      InstanceResult res = run_instance(file.stem().string(), v, {},
                                        time_limit_s, base, relax_tol);
      if (json_os.is_open())
        json_os << report_json(res).dump() << "\n";
      rows.push_back(std::move(res.row));
    }
    std::cout << maxdet::format_table(rows);
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const maxdet::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const maxdet::InfeasibleDomain& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const maxdet::InfeasibleNode& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const maxdet::DependentFixedRows& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const maxdet::StartSingular& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const maxdet::BadDimensions& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const maxdet::BadSubset& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const maxdet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const maxdet::Error& e) {
    // Remaining library errors are data problems: IoError, RankZero,
    // NotTall, RankDeficient.
    std::cerr << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
