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

#include "maxdet/relax.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kArmijo = 1e-4;

std::vector<char> membership_mask(int n, std::span<const int> fixed) {
  std::vector<char> in(n, 0);
  for (const int j : fixed) {
    if (j < 0 || j >= n) throw BadSubset("fixed index out of range");
    if (in[j]) throw BadSubset("duplicate fixed index");
    in[j] = 1;
  }
  return in;
}

void check_domain(const CappedSimplex& dom, int fixed_count) {
  const int slots = dom.r - fixed_count;
  if (slots < 0 || slots > dom.n - fixed_count)
    throw InfeasibleDomain("no point satisfies sum x = " +
                           std::to_string(dom.r) + " with " +
                           std::to_string(fixed_count) + " of " +
                           std::to_string(dom.n) + " coordinates pinned to 1");
}

Matrix weighted_gram(const InstanceMatrix& v, std::span<const double> x,
                     double ridge) {
  const int r = v.r();
  Matrix a(r, r);
  for (int i = 0; i < v.n(); ++i) {
    const double w = x[i];
    if (w == 0.0) continue;
    const auto vi = v.row(i);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q <= p; ++q) a(p, q) += w * vi[p] * vi[q];
  }
  for (int k = 0; k < r; ++k) a(k, k) += ridge;
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) a(p, q) = a(q, p);
  return a;
}

// The ridged Gram matrix is positive definite by construction, so the
// factorization only rejects nonpositive pivots.
double logdet_ridged(const InstanceMatrix& v, std::span<const double> x,
                     double ridge) {
  Matrix a = weighted_gram(v, x, ridge);
  if (!cholesky_in_place(a, 0.0)) return -kInf;
  double ld = 0.0;
  for (int k = 0; k < v.r(); ++k) ld += std::log(a(k, k));
  return 2.0 * ld;
}

bool grad_ridged(const InstanceMatrix& v, std::span<const double> x,
                 double ridge, std::vector<double>& g) {
  Matrix a = weighted_gram(v, x, ridge);
  if (!cholesky_in_place(a, 0.0)) return false;
  const int r = v.r();
  g.resize(v.n());
  std::vector<double> y(r);
  for (int i = 0; i < v.n(); ++i) {
    const auto vi = v.row(i);
    for (int k = 0; k < r; ++k) y[k] = vi[k];
    forward_subst(a, y);
    g[i] = norm2sq(y);
  }
  return true;
}

// max over vertices w of g^T (w - x): vertices put 1 on the fixed set
// and on the r - |J| free coordinates with the largest gradient.
double fw_gap_term(const std::vector<double>& g, std::span<const double> x,
                   const CappedSimplex& dom, const std::vector<char>& in_j) {
  const int slots = dom.r - static_cast<int>(dom.fixed_one.size());
  double vertex = 0.0;
  for (const int j : dom.fixed_one) vertex += g[j];
  if (slots > 0) {
    std::vector<double> free_g;
    free_g.reserve(dom.n);
    for (int i = 0; i < dom.n; ++i)
      if (!in_j[i]) free_g.push_back(g[i]);
    std::nth_element(free_g.begin(), free_g.begin() + (slots - 1),
                     free_g.end(), std::greater<double>());
    for (int k = 0; k < slots; ++k) vertex += free_g[k];
  }
  double gx = 0.0;
  for (int i = 0; i < dom.n; ++i) gx += g[i] * x[i];
  return vertex - gx;
}

}  // namespace

bool CappedSimplex::contains(std::span<const double> x,
                             double feas_tol) const {
  if (static_cast<int>(x.size()) != n) return false;
  long double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (x[i] < -feas_tol || x[i] > 1.0 + feas_tol) return false;
    sum += x[i];
  }
  for (const int j : fixed_one)
    if (j < 0 || j >= n || x[j] < 1.0 - feas_tol) return false;
  return std::abs(static_cast<double>(sum) - r) <=
         feas_tol * std::max(1.0, static_cast<double>(r));
}

std::vector<double> project_capped_simplex(std::span<const double> y,
                                           const CappedSimplex& dom) {
  assert(static_cast<int>(y.size()) == dom.n);
  const std::vector<char> in_j = membership_mask(dom.n, dom.fixed_one);
  check_domain(dom, static_cast<int>(dom.fixed_one.size()));

  std::vector<double> x(dom.n);
  for (const int j : dom.fixed_one) x[j] = 1.0;

  std::vector<int> free_idx;
  free_idx.reserve(dom.n);
  for (int i = 0; i < dom.n; ++i)
    if (!in_j[i]) free_idx.push_back(i);
  const int nf = static_cast<int>(free_idx.size());
  const int s = dom.r - static_cast<int>(dom.fixed_one.size());

  if (s == 0) return x;
  if (s == nf) {
    for (const int i : free_idx) x[i] = 1.0;
    return x;
  }

  // Breakpoints of tau -> sum_i clip(y_i - tau, 0, 1) over free coords:
  // at y_i - 1 coordinate i drops from the cap, at y_i it reaches zero.
  struct Event {
    double pos;
    bool enter;  // true: cap -> active, false: active -> zero
    double y;
  };
  std::vector<Event> events;
  events.reserve(2 * nf);
  for (const int i : free_idx) {
    events.push_back({y[i] - 1.0, true, y[i]});
    events.push_back({y[i], false, y[i]});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.pos < b.pos; });

  int n_one = nf;
  int n_act = 0;
  double sum_act = 0.0;
  double tau = events.back().pos;
  double prev_pos = -kInf;
  for (const Event& e : events) {
    // Value at the right end of the segment ending at e.pos.
    const double g_right = n_one + sum_act - n_act * e.pos;
    if (g_right <= static_cast<double>(s)) {
      if (n_act > 0) {
        tau = (n_one + sum_act - s) / n_act;
        tau = std::clamp(tau, std::max(prev_pos, e.pos - 2.0), e.pos);
      } else {
        tau = e.pos;  // plateau: exactly n_one coordinates at the cap
      }
      break;
    }
    if (e.enter) {
      --n_one;
      ++n_act;
      sum_act += e.y;
    } else {
      --n_act;
      sum_act -= e.y;
    }
    prev_pos = e.pos;
  }

  for (const int i : free_idx) x[i] = std::clamp(y[i] - tau, 0.0, 1.0);

  // Spread the residual rounding error over the interior coordinates.
  for (int round = 0; round < 2; ++round) {
    long double sum = 0.0;
    for (const int i : free_idx) sum += x[i];
    const double resid = static_cast<double>(s - sum);
    if (std::abs(resid) <= 1e-13) break;
    std::vector<int> interior;
    for (const int i : free_idx)
      if (x[i] > 0.0 && x[i] < 1.0) interior.push_back(i);
    if (interior.empty()) break;
    const double d = resid / static_cast<double>(interior.size());
    for (const int i : interior) x[i] = std::clamp(x[i] + d, 0.0, 1.0);
  }
  return x;
}

double certificate_ub(std::span<const double> x, const InstanceMatrix& v,
                      const CappedSimplex& dom) {
  assert(dom.n == v.n() && static_cast<int>(x.size()) == v.n());
  const std::vector<char> in_j = membership_mask(dom.n, dom.fixed_one);
  check_domain(dom, static_cast<int>(dom.fixed_one.size()));
  const double f = logdet_weighted(v, x);
  if (!std::isfinite(f))
    throw SingularWeighting("objective is -inf at the certificate point");
  const std::vector<double> g = grad_logdet_weighted(v, x);
  return f + fw_gap_term(g, x, dom, in_j);
}

RelaxSolution solve_lp_relaxation(const InstanceMatrix& v,
                                  std::span<const int> fixed,
                                  const RelaxOptions& opts) {
  const int n = v.n();
  CappedSimplex dom{n, v.r(), {fixed.begin(), fixed.end()}};
  std::sort(dom.fixed_one.begin(), dom.fixed_one.end());
  const std::vector<char> in_j = membership_mask(n, dom.fixed_one);
  check_domain(dom, static_cast<int>(dom.fixed_one.size()));

  const int nf = n - static_cast<int>(dom.fixed_one.size());
  const int s = dom.r - static_cast<int>(dom.fixed_one.size());

  std::vector<double> x(n, 0.0);
  for (const int j : dom.fixed_one) x[j] = 1.0;
  if (nf > 0) {
    const double fill = static_cast<double>(s) / nf;
    for (int i = 0; i < n; ++i)
      if (!in_j[i]) x[i] = fill;
  }

  double ridge = 0.0;
  double f_search = logdet_weighted(v, x);
  if (!std::isfinite(f_search)) {
    double mean_norm2 = 0.0;
    for (int i = 0; i < n; ++i) mean_norm2 += v.row_norm2(i);
    mean_norm2 /= std::max(1, n);
    ridge = 1e-10 * mean_norm2;
    f_search = logdet_ridged(v, x, ridge);
    if (!std::isfinite(f_search))
      throw StartSingular("objective is -inf at the start even with a ridge");
  }

  RelaxSolution sol;
  sol.cert_ub_ln = kInf;
  std::vector<double> g;
  std::vector<double> xt(n);
  double last_step = 0.0;

  for (int it = 0; it <= opts.max_iters; ++it) {
    double f_true = -kInf;
    double cert = kInf;
    if (ridge == 0.0) {
      f_true = f_search;
      g = grad_logdet_weighted(v, x);
      cert = f_true + fw_gap_term(g, x, dom, in_j);
      sol.cert_ub_ln = std::min(sol.cert_ub_ln, cert);
    } else if (!grad_ridged(v, x, ridge, g)) {
      break;  // ridged Gram went singular: give up on stepping further
    }
    if (opts.record_trace) sol.trace.push_back({f_true, cert, last_step});
    if (ridge == 0.0 && cert - f_true <= opts.tol * std::max(1.0, std::abs(f_true))) {
      sol.converged = true;
      break;
    }
    if (it == opts.max_iters) break;

    // Backtracking line search along the projection arc.
    bool accepted = false;
    for (double t = 1.0; t >= 1e-20; t *= 0.5) {
      for (int i = 0; i < n; ++i) xt[i] = x[i] + t * g[i];
      xt = project_capped_simplex(xt, dom);
      const double ft = ridge == 0.0 ? logdet_weighted(v, xt)
                                     : logdet_ridged(v, xt, ridge);
      if (!std::isfinite(ft)) continue;
      double gd = 0.0;
      for (int i = 0; i < n; ++i) gd += g[i] * (xt[i] - x[i]);
      if (ft >= f_search + kArmijo * gd) {
        x = xt;
        f_search = ft;
        last_step = t;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    sol.iters = it + 1;

    if (ridge > 0.0) {
      const double f_plain = logdet_weighted(v, x);
      if (std::isfinite(f_plain)) {
        ridge = 0.0;
        f_search = f_plain;
      }
    }
  }

  sol.x = std::move(x);
  sol.obj_ln = logdet_weighted(v, sol.x);
  return sol;
}

DominanceResult lp_projection_dominance(const InstanceMatrix& v,
                                        std::span<const int> fixed,
                                        const RelaxOptions& opts) {
  const RelaxSolution raw = solve_lp_relaxation(v, fixed, opts);
  const ProjectedRows state = project_rows(v, fixed);
  const InstanceMatrix projected(state.tilde());
  const RelaxSolution proj = solve_lp_relaxation(projected, fixed, opts);
  DominanceResult out;
  out.ub_raw_ln = raw.cert_ub_ln;
  out.ub_proj_ln = proj.cert_ub_ln;
  out.holds = out.ub_proj_ln <= out.ub_raw_ln + 1e-4;
  return out;
}

}  // namespace maxdet
