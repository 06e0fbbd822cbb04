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

#include "maxdet/conic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> checked_fixed(int n, int r, std::span<const int> fixed) {
  std::vector<char> seen(n, 0);
  std::vector<int> out(fixed.begin(), fixed.end());
  for (const int j : out) {
    if (j < 0 || j >= n) throw BadSubset("fixed index out of range");
    if (seen[j]) throw BadSubset("duplicate fixed index");
    seen[j] = 1;
  }
  if (static_cast<int>(out.size()) > r)
    throw InfeasibleDomain("more than r rows pinned to 1");
  std::sort(out.begin(), out.end());
  return out;
}

// Lower-triangular entries of v v^T appended to a coefficient list.
void outer_product_entries(std::span<const double> vi,
                           std::vector<PsdEntry>& entries, double sign,
                           int row_offset = 0, int col_offset = 0) {
  const int r = static_cast<int>(vi.size());
  for (int p = 0; p < r; ++p)
    for (int q = 0; q <= p; ++q) {
      const double val = sign * vi[p] * vi[q];
      if (val != 0.0)
        entries.push_back({row_offset + p, col_offset + q, val});
    }
}

}  // namespace

int packed_lower_index(int r, int a, int b) {
  assert(0 <= b && b <= a && a < r);
  if (a == b) return a;
  // Diagonal first, then the strict lower triangle column by column.
  return r + b * (r - 1) - b * (b - 1) / 2 + (a - b - 1);
}

ConicModel build_expcone_lp(const InstanceMatrix& v,
                            std::span<const int> fixed) {
  const int n = v.n();
  const int r = v.r();
  const int nz = r * (r + 1) / 2;

  ConicModel m;
  m.name = "expcone_lp";
  m.n = n;
  m.r = r;
  m.fixed_one = checked_fixed(n, r, fixed);
  m.num_scalar_vars = n + nz + r;

  const auto xvar = [](int i) { return i; };
  const auto zvar = [n](int k) { return n + k; };
  const auto svar = [n, nz](int k) { return n + nz + k; };

  m.box_bounds.assign(m.num_scalar_vars, {-kInf, kInf});
  for (int i = 0; i < n; ++i) m.box_bounds[xvar(i)] = {0.0, 1.0};
  for (const int j : m.fixed_one) m.box_bounds[xvar(j)] = {1.0, 1.0};

  LinearConstraint simplex;
  for (int i = 0; i < n; ++i) simplex.terms.push_back({xvar(i), 1.0});
  simplex.rel = Relation::kEq;
  simplex.rhs = static_cast<double>(r);
  m.linear_constraints.push_back(std::move(simplex));

  // [ V^T Diag(x) V   L(z) ; L(z)^T  Diag(z_1..z_r) ] is PSD, where
  // L(z) is lower triangular with the packed z on and below the
  // diagonal.  Block rows 0..r-1 are the Gram part, r..2r-1 the
  // diagonal part.
  PsdBlock block;
  block.order = 2 * r;
  for (int i = 0; i < n; ++i) {
    PsdCoeff c;
    c.var = xvar(i);
    outer_product_entries(v.row(i), c.entries, 1.0);
    block.coeffs.push_back(std::move(c));
  }
  for (int k = 0; k < r; ++k) {
    PsdCoeff c;
    c.var = zvar(k);
    c.entries.push_back({r + k, k, 1.0});      // L(z)_{kk}
    c.entries.push_back({r + k, r + k, 1.0});  // Diag(z)_{kk}
    block.coeffs.push_back(std::move(c));
  }
  for (int b = 0; b < r; ++b)
    for (int a = b + 1; a < r; ++a) {
      PsdCoeff c;
      c.var = zvar(packed_lower_index(r, a, b));
      c.entries.push_back({r + b, a, 1.0});  // mirror of L(z)_{ab}
      block.coeffs.push_back(std::move(c));
    }
  m.psd_blocks.push_back(std::move(block));

  for (int k = 0; k < r; ++k)
    m.exp_cones.push_back({ConeSlot::variable(zvar(k)), ConeSlot::fixed(1.0),
                           ConeSlot::variable(svar(k))});
  for (int k = 0; k < r; ++k) m.objective.push_back({svar(k), 1.0});
  return m;
}

ConicModel build_sdp_relaxation(const InstanceMatrix& v,
                                std::span<const int> fixed) {
  const int n = v.n();
  const int r = v.r();
  const int nz = r * (r + 1) / 2;

  ConicModel m;
  m.name = "sdp_relaxation";
  m.n = n;
  m.r = r;
  m.fixed_one = checked_fixed(n, r, fixed);

  // Y is (n+1) x (n+1), rows/cols 0..n with index 0 for the constant
  // row; data row j of V corresponds to Y index j+1... no: Y indices
  // 1..n map directly to data rows 0..n-1.
  const auto yvar = [](int i, int j) {
    assert(j <= i);
    return i * (i + 1) / 2 + j;
  };
  const int ny = (n + 1) * (n + 2) / 2;
  const auto zvar = [ny, nz](int i, int k) { return ny + i * nz + k; };
  const auto svar = [ny, nz, n](int k) { return ny + (n + 1) * nz + k; };
  m.num_scalar_vars = ny + (n + 1) * nz + r;

  m.box_bounds.assign(m.num_scalar_vars, {-kInf, kInf});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) m.box_bounds[yvar(i, j)] = {0.0, kInf};
  m.box_bounds[yvar(0, 0)] = {1.0, 1.0};
  for (int i = 1; i <= n; ++i) m.box_bounds[yvar(i, 0)] = {0.0, 1.0};
  for (const int j : m.fixed_one) m.box_bounds[yvar(j + 1, 0)] = {1.0, 1.0};

  // Y (-r, e)^T = 0, one row per Y row.
  for (int a = 0; a <= n; ++a) {
    LinearConstraint row;
    row.terms.push_back({yvar(a, 0), -static_cast<double>(m.r)});
    for (int b = 1; b <= n; ++b) {
      const int var = b <= a ? yvar(a, b) : yvar(b, a);
      row.terms.push_back({var, 1.0});
    }
    std::sort(row.terms.begin(), row.terms.end(),
              [](const LinearTerm& s, const LinearTerm& t) {
                return s.var < t.var;
              });
    row.rel = Relation::kEq;
    row.rhs = 0.0;
    m.linear_constraints.push_back(std::move(row));
  }
  // First column agrees with the diagonal.
  for (int i = 1; i <= n; ++i) {
    LinearConstraint row;
    row.terms.push_back({yvar(i, 0), 1.0});
    row.terms.push_back({yvar(i, i), -1.0});
    row.rel = Relation::kEq;
    row.rhs = 0.0;
    m.linear_constraints.push_back(std::move(row));
  }
  // The zeroth column is a point of the capped simplex.
  {
    LinearConstraint row;
    for (int i = 1; i <= n; ++i) row.terms.push_back({yvar(i, 0), 1.0});
    row.rel = Relation::kEq;
    row.rhs = static_cast<double>(r);
    m.linear_constraints.push_back(std::move(row));
  }

  // Block 0: Y itself.
  {
    PsdBlock block;
    block.order = n + 1;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j) {
        PsdCoeff c;
        c.var = yvar(i, j);
        c.entries.push_back({i, j, 1.0});
        block.coeffs.push_back(std::move(c));
      }
    m.psd_blocks.push_back(std::move(block));
  }

  // Weighted block of column i of Y with its z vector: the Gram part
  // weighted by y^i_j = Y_{j,i} (data row j-1), the L(z^i) mirror and
  // the z^i diagonal.
  const auto weighted_block = [&](int col, double sign, PsdBlock& block) {
    for (int j = 1; j <= n; ++j) {
      PsdCoeff c;
      c.var = j >= col ? yvar(j, col) : yvar(col, j);
      outer_product_entries(v.row(j - 1), c.entries, sign);
      block.coeffs.push_back(std::move(c));
    }
  };
  const auto z_part = [&](int vec, double sign, PsdBlock& block) {
    for (int k = 0; k < r; ++k) {
      PsdCoeff c;
      c.var = zvar(vec, k);
      c.entries.push_back({r + k, k, sign});
      c.entries.push_back({r + k, r + k, sign});
      block.coeffs.push_back(std::move(c));
    }
    for (int b = 0; b < r; ++b)
      for (int a = b + 1; a < r; ++a) {
        PsdCoeff c;
        c.var = zvar(vec, packed_lower_index(r, a, b));
        c.entries.push_back({r + b, a, sign});
        block.coeffs.push_back(std::move(c));
      }
  };

  for (int i = 0; i <= n; ++i) {
    PsdBlock block;
    block.order = 2 * r;
    weighted_block(i, 1.0, block);
    z_part(i, 1.0, block);
    m.psd_blocks.push_back(std::move(block));
  }
  // Difference blocks: column 0 minus column i.
  for (int i = 1; i <= n; ++i) {
    PsdBlock block;
    block.order = 2 * r;
    weighted_block(0, 1.0, block);
    weighted_block(i, -1.0, block);
    z_part(0, 1.0, block);
    z_part(i, -1.0, block);
    m.psd_blocks.push_back(std::move(block));
  }

  for (int k = 0; k < r; ++k)
    m.exp_cones.push_back({ConeSlot::variable(zvar(0, k)),
                           ConeSlot::fixed(1.0),
                           ConeSlot::variable(svar(k))});
  for (int k = 0; k < r; ++k) m.objective.push_back({svar(k), 1.0});
  return m;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json bound_to_json(double b) {
  if (std::isinf(b)) return nullptr;
  return b;
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::kEq: return "eq";
    case Relation::kLe: return "le";
    case Relation::kGe: return "ge";
  }
  return "eq";
}

ordered_json slot_to_json(const ConeSlot& s) {
  return {{"var", s.var}, {"constant", s.constant}};
}

ordered_json model_to_json(const ConicModel& m) {
  ordered_json j;
  j["num_scalar_vars"] = m.num_scalar_vars;
  j["objective"] = ordered_json::array();
  for (const LinearTerm& t : m.objective)
    j["objective"].push_back({{"var", t.var}, {"coeff", t.coeff}});
  j["linear_constraints"] = ordered_json::array();
  for (const LinearConstraint& c : m.linear_constraints) {
    ordered_json jc;
    jc["terms"] = ordered_json::array();
    for (const LinearTerm& t : c.terms)
      jc["terms"].push_back({{"var", t.var}, {"coeff", t.coeff}});
    jc["rel"] = relation_name(c.rel);
    jc["rhs"] = c.rhs;
    j["linear_constraints"].push_back(std::move(jc));
  }
  j["box_bounds"] = ordered_json::array();
  for (const VarBound& b : m.box_bounds)
    j["box_bounds"].push_back(
        {{"lo", bound_to_json(b.lo)}, {"hi", bound_to_json(b.hi)}});
  j["psd_blocks"] = ordered_json::array();
  for (const PsdBlock& b : m.psd_blocks) {
    ordered_json jb;
    jb["order"] = b.order;
    jb["coeffs"] = ordered_json::array();
    for (const PsdCoeff& c : b.coeffs) {
      ordered_json jc;
      jc["var"] = c.var;
      jc["entries"] = ordered_json::array();
      for (const PsdEntry& e : c.entries)
        jc["entries"].push_back(
            {{"row", e.row}, {"col", e.col}, {"value", e.value}});
      jb["coeffs"].push_back(std::move(jc));
    }
    j["psd_blocks"].push_back(std::move(jb));
  }
  j["exp_cones"] = ordered_json::array();
  for (const ExpCone& c : m.exp_cones)
    j["exp_cones"].push_back({{"x1", slot_to_json(c.x1)},
                              {"x2", slot_to_json(c.x2)},
                              {"x3", slot_to_json(c.x3)}});
  j["name"] = m.name;
  j["n"] = m.n;
  j["r"] = m.r;
  j["fixed_one"] = m.fixed_one;
  return j;
}

// --- strict JSON readers ---

void check_keys(const ordered_json& j, std::initializer_list<const char*> keys,
                const std::string& path) {
  if (!j.is_object()) throw ParseError("expected an object", path);
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known) throw ParseError("unknown field \"" + item.key() + "\"", path);
  }
  for (const char* k : keys)
    if (!j.contains(k))
      throw ParseError("missing field \"" + std::string(k) + "\"", path);
}

int read_int(const ordered_json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ParseError("expected an integer", path);
  return j.get<int>();
}

double read_double(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError("expected a number", path);
  return j.get<double>();
}

double read_bound(const ordered_json& j, const std::string& path, double inf) {
  if (j.is_null()) return inf;
  return read_double(j, path);
}

const ordered_json& read_array(const ordered_json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array", path);
  return j;
}

LinearTerm read_term(const ordered_json& j, const std::string& path) {
  check_keys(j, {"var", "coeff"}, path);
  return {read_int(j["var"], path + ".var"),
          read_double(j["coeff"], path + ".coeff")};
}

ConeSlot read_slot(const ordered_json& j, const std::string& path) {
  check_keys(j, {"var", "constant"}, path);
  return {read_int(j["var"], path + ".var"),
          read_double(j["constant"], path + ".constant")};
}

ConicModel model_from_json(const ordered_json& j) {
  check_keys(j,
             {"num_scalar_vars", "objective", "linear_constraints",
              "box_bounds", "psd_blocks", "exp_cones", "name", "n", "r",
              "fixed_one"},
             "$");
  ConicModel m;
  m.num_scalar_vars = read_int(j["num_scalar_vars"], "$.num_scalar_vars");
  {
    int k = 0;
    for (const auto& t : read_array(j["objective"], "$.objective"))
      m.objective.push_back(
          read_term(t, "$.objective[" + std::to_string(k++) + "]"));
  }
  {
    int k = 0;
    for (const auto& jc :
         read_array(j["linear_constraints"], "$.linear_constraints")) {
      const std::string path = "$.linear_constraints[" + std::to_string(k++) + "]";
      check_keys(jc, {"terms", "rel", "rhs"}, path);
      LinearConstraint c;
      int t = 0;
      for (const auto& jt : read_array(jc["terms"], path + ".terms"))
        c.terms.push_back(
            read_term(jt, path + ".terms[" + std::to_string(t++) + "]"));
      if (!jc["rel"].is_string())
        throw ParseError("expected a string", path + ".rel");
      const std::string rel = jc["rel"].get<std::string>();
      if (rel == "eq")
        c.rel = Relation::kEq;
      else if (rel == "le")
        c.rel = Relation::kLe;
      else if (rel == "ge")
        c.rel = Relation::kGe;
      else
        throw ParseError("unknown relation \"" + rel + "\"", path + ".rel");
      c.rhs = read_double(jc["rhs"], path + ".rhs");
      m.linear_constraints.push_back(std::move(c));
    }
  }
  {
    int k = 0;
    for (const auto& jb : read_array(j["box_bounds"], "$.box_bounds")) {
      const std::string path = "$.box_bounds[" + std::to_string(k++) + "]";
      check_keys(jb, {"lo", "hi"}, path);
      m.box_bounds.push_back({read_bound(jb["lo"], path + ".lo", -kInf),
                              read_bound(jb["hi"], path + ".hi", kInf)});
    }
  }
  {
    int k = 0;
    for (const auto& jb : read_array(j["psd_blocks"], "$.psd_blocks")) {
      const std::string path = "$.psd_blocks[" + std::to_string(k++) + "]";
      check_keys(jb, {"order", "coeffs"}, path);
      PsdBlock b;
      b.order = read_int(jb["order"], path + ".order");
      int ci = 0;
      for (const auto& jc : read_array(jb["coeffs"], path + ".coeffs")) {
        const std::string cpath = path + ".coeffs[" + std::to_string(ci++) + "]";
        check_keys(jc, {"var", "entries"}, cpath);
        PsdCoeff c;
        c.var = read_int(jc["var"], cpath + ".var");
        int ei = 0;
        for (const auto& je : read_array(jc["entries"], cpath + ".entries")) {
          const std::string epath =
              cpath + ".entries[" + std::to_string(ei++) + "]";
          check_keys(je, {"row", "col", "value"}, epath);
          PsdEntry e;
          e.row = read_int(je["row"], epath + ".row");
          e.col = read_int(je["col"], epath + ".col");
          e.value = read_double(je["value"], epath + ".value");
          if (e.col > e.row)
            throw ParseError("entry above the diagonal", epath);
          c.entries.push_back(e);
        }
        b.coeffs.push_back(std::move(c));
      }
      m.psd_blocks.push_back(std::move(b));
    }
  }
  {
    int k = 0;
    for (const auto& jc : read_array(j["exp_cones"], "$.exp_cones")) {
      const std::string path = "$.exp_cones[" + std::to_string(k++) + "]";
      check_keys(jc, {"x1", "x2", "x3"}, path);
      m.exp_cones.push_back({read_slot(jc["x1"], path + ".x1"),
                             read_slot(jc["x2"], path + ".x2"),
                             read_slot(jc["x3"], path + ".x3")});
    }
  }
  if (!j["name"].is_string()) throw ParseError("expected a string", "$.name");
  m.name = j["name"].get<std::string>();
  m.n = read_int(j["n"], "$.n");
  m.r = read_int(j["r"], "$.r");
  for (const auto& ji : read_array(j["fixed_one"], "$.fixed_one"))
    m.fixed_one.push_back(read_int(ji, "$.fixed_one[]"));

  if (static_cast<int>(m.box_bounds.size()) != m.num_scalar_vars)
    throw ParseError("box_bounds size disagrees with num_scalar_vars",
                     "$.box_bounds");
  return m;
}

// --- CBF writer ---

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CbfRow {
  std::vector<LinearTerm> terms;
  double b = 0.0;
};

void append_group(std::vector<std::pair<std::string, int>>& groups,
                  const std::string& type, int count) {
  if (!groups.empty() && groups.back().first == type &&
      type != "EXP")  // exponential cones are fixed three-row groups
    groups.back().second += count;
  else
    groups.emplace_back(type, count);
}

void write_cbf(const ConicModel& m, std::ostream& os) {
  std::vector<CbfRow> rows;
  std::vector<std::pair<std::string, int>> groups;

  // Variable boxes as linear rows (all variables are declared free).
  for (int i = 0; i < m.num_scalar_vars; ++i) {
    const VarBound& b = m.box_bounds[i];
    if (std::isfinite(b.lo) && b.lo == b.hi) {
      rows.push_back({{{i, 1.0}}, -b.lo});
      append_group(groups, "L=", 1);
      continue;
    }
    if (std::isfinite(b.lo)) {
      rows.push_back({{{i, 1.0}}, -b.lo});
      append_group(groups, "L+", 1);
    }
    if (std::isfinite(b.hi)) {
      rows.push_back({{{i, -1.0}}, b.hi});
      append_group(groups, "L+", 1);
    }
  }
  for (const LinearConstraint& c : m.linear_constraints) {
    rows.push_back({c.terms, -c.rhs});
    append_group(groups,
                 c.rel == Relation::kEq   ? "L="
                 : c.rel == Relation::kLe ? "L-"
                                          : "L+",
                 1);
  }
  // Exponential cones: three consecutive rows (u, v, w) constrained to
  // w >= v * exp(u / v), i.e. our (x3, x2, x1) in that file order.
  const auto slot_row = [](const ConeSlot& s) {
    CbfRow row;
    if (s.var >= 0)
      row.terms.push_back({s.var, 1.0});
    else
      row.b = s.constant;
    return row;
  };
  for (const ExpCone& c : m.exp_cones) {
    rows.push_back(slot_row(c.x3));
    rows.push_back(slot_row(c.x2));
    rows.push_back(slot_row(c.x1));
    append_group(groups, "EXP", 3);
  }

  os << "# " << m.name << ": n = " << m.n << ", r = " << m.r
     << ", fixed =";
  for (const int j : m.fixed_one) os << ' ' << j;
  os << "\n\nVER\n3\n\nOBJSENSE\nMAX\n\n";
  os << "VAR\n" << m.num_scalar_vars << " 1\nF " << m.num_scalar_vars
     << "\n\n";
  if (!m.psd_blocks.empty()) {
    os << "PSDCON\n" << m.psd_blocks.size() << "\n";
    for (const PsdBlock& b : m.psd_blocks) os << b.order << "\n";
    os << "\n";
  }
  os << "CON\n" << rows.size() << " " << groups.size() << "\n";
  for (const auto& [type, count] : groups) os << type << " " << count << "\n";
  os << "\n";

  if (!m.objective.empty()) {
    os << "OBJACOORD\n" << m.objective.size() << "\n";
    for (const LinearTerm& t : m.objective)
      os << t.var << " " << fmt_double(t.coeff) << "\n";
    os << "\n";
  }

  std::vector<std::tuple<int, int, double>> acoord;
  std::vector<std::pair<int, double>> bcoord;
  for (int ri = 0; ri < static_cast<int>(rows.size()); ++ri) {
    for (const LinearTerm& t : rows[ri].terms)
      acoord.emplace_back(ri, t.var, t.coeff);
    if (rows[ri].b != 0.0) bcoord.emplace_back(ri, rows[ri].b);
  }
  if (!acoord.empty()) {
    os << "ACOORD\n" << acoord.size() << "\n";
    for (const auto& [row, var, val] : acoord)
      os << row << " " << var << " " << fmt_double(val) << "\n";
    os << "\n";
  }
  if (!bcoord.empty()) {
    os << "BCOORD\n" << bcoord.size() << "\n";
    for (const auto& [row, val] : bcoord)
      os << row << " " << fmt_double(val) << "\n";
    os << "\n";
  }

  std::vector<std::tuple<int, int, int, int, double>> hcoord;
  std::vector<std::tuple<int, int, int, double>> dcoord;
  for (int bi = 0; bi < static_cast<int>(m.psd_blocks.size()); ++bi)
    for (const PsdCoeff& c : m.psd_blocks[bi].coeffs)
      for (const PsdEntry& e : c.entries) {
        if (c.var == PsdCoeff::kConstantTerm)
          dcoord.emplace_back(bi, e.row, e.col, e.value);
        else
          hcoord.emplace_back(bi, c.var, e.row, e.col, e.value);
      }
  std::sort(hcoord.begin(), hcoord.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a),
                              std::get<3>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b),
                              std::get<3>(b));
            });
  std::sort(dcoord.begin(), dcoord.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
            });
  if (!hcoord.empty()) {
    os << "HCOORD\n" << hcoord.size() << "\n";
    for (const auto& [blk, var, row, col, val] : hcoord)
      os << blk << " " << var << " " << row << " " << col << " "
         << fmt_double(val) << "\n";
    os << "\n";
  }
  if (!dcoord.empty()) {
    os << "DCOORD\n" << dcoord.size() << "\n";
    for (const auto& [blk, row, col, val] : dcoord)
      os << blk << " " << row << " " << col << " " << fmt_double(val) << "\n";
    os << "\n";
  }
}

}  // namespace

void write_model(const ConicModel& model, ModelFormat format,
                 const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  if (format == ModelFormat::kJson) {
    os << model_to_json(model).dump(2) << "\n";
  } else {
    write_cbf(model, os);
  }
  os.flush();
  if (!os) throw IoError("failed while writing " + path.string());
}

ConicModel read_model(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string() + " for reading");
  std::stringstream buf;
  buf << is.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "$");
  }
  return model_from_json(j);
}

}  // namespace maxdet
