#include "lp.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "tolerances.hpp"

namespace convexo::lp {
namespace {

constexpr double kRcTol = 1e-9;      // reduced-cost optimality threshold
constexpr double kPivotMin = 1e-11;  // smallest admissible pivot
constexpr double kPivotZero = 1e-12; // entries below this are treated as zero
constexpr double kPhase1Tol = 1e-9;

enum class RowKind { Eq, Ineq, Upper };

struct RowRef {
  RowKind kind;
  int index;     // original row index, or variable index for Upper
  double scale;  // norm the row was divided by
  bool flipped;  // multiplied by -1 to make rhs nonnegative
};

// How an original variable maps onto nonnegative tableau columns.
struct VarMap {
  int col = -1;       // primary column
  int col_neg = -1;   // second column of a free split
  double shift = 0.0; // x = shift + sign * x'
  double sign = 1.0;
};

struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + surplus + artificial
  std::vector<double> t;    // rows x (cols + 1), last entry is rhs
  std::vector<double> cost; // reduced costs, cols + 1 (last = -objective)
  std::vector<int> basis;

  double& at(int r, int c) { return t[static_cast<size_t>(r) * (cols + 1) + c]; }
  double at(int r, int c) const { return t[static_cast<size_t>(r) * (cols + 1) + c]; }
  double& rhs(int r) { return t[static_cast<size_t>(r) * (cols + 1) + cols]; }
  double rhs(int r) const { return t[static_cast<size_t>(r) * (cols + 1) + cols]; }
};

void pivot(Tableau& tb, int pr, int pc) {
  const int w = tb.cols + 1;
  double* prow = &tb.t[static_cast<size_t>(pr) * w];
  const double inv = 1.0 / prow[pc];
  for (int c = 0; c < w; ++c) prow[c] *= inv;
  prow[pc] = 1.0;
  for (int r = 0; r < tb.rows; ++r) {
    if (r == pr) continue;
    double* row = &tb.t[static_cast<size_t>(r) * w];
    const double f = row[pc];
    if (f == 0.0) continue;
    for (int c = 0; c < w; ++c) row[c] -= f * prow[c];
    row[pc] = 0.0;
  }
  double f = tb.cost[pc];
  if (f != 0.0) {
    for (int c = 0; c < w; ++c) tb.cost[c] -= f * prow[c];
    tb.cost[pc] = 0.0;
  }
  tb.basis[pr] = pc;
}

// Returns true on optimality, throws on breakdown; `allowed` marks columns
// permitted to enter. Dantzig pricing switches to Bland's rule after a
// degenerate stall, which keeps the run deterministic and cycle-free.
bool run_simplex(Tableau& tb, const std::vector<char>& allowed, Status* unbounded_flag) {
  const int stall_limit = 3 * (tb.rows + tb.cols) + 20;
  int stall = 0;
  bool bland = false;
  double last_obj = tb.cost[tb.cols];
  long iter_cap = 200000L + 200L * static_cast<long>(tb.rows) * 4L;
  for (long iter = 0; iter < iter_cap; ++iter) {
    int enter = -1;
    if (!bland) {
      double best = -kRcTol;
      for (int c = 0; c < tb.cols; ++c)
        if (allowed[c] && tb.cost[c] < best) { best = tb.cost[c]; enter = c; }
    } else {
      for (int c = 0; c < tb.cols; ++c)
        if (allowed[c] && tb.cost[c] < -kRcTol) { enter = c; break; }
    }
    if (enter < 0) return true;

    int leave = -1;
    double best_ratio = 0.0;
    bool tiny_pivot_only = false;
    for (int r = 0; r < tb.rows; ++r) {
      double v = tb.at(r, enter);
      if (v > kPivotZero && v <= kPivotMin) tiny_pivot_only = true;
      if (v <= kPivotMin) continue;
      tiny_pivot_only = false;
      double ratio = tb.rhs(r) / v;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && tb.basis[r] < tb.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      if (tiny_pivot_only) fail(Err::Numeric, "simplex pivot breakdown: pivots below 1e-12");
      *unbounded_flag = Status::Unbounded;
      return false;
    }
    pivot(tb, leave, enter);

    double obj = tb.cost[tb.cols];
    if (obj > last_obj + 1e-12) {  // cost row stores -objective; progress raises it
      stall = 0;
      last_obj = obj;
    } else if (++stall > stall_limit && !bland) {
      bland = true;
      stall = 0;
    }
  }
  fail(Err::Numeric, "simplex iteration limit exceeded");
}

}  // namespace

Result solve(const LinearProgram& lp) {
  if (lp.n < 1) fail(Err::Invariant, "linear program needs at least one variable");
  auto check_row = [&](const Row& r) {
    if (static_cast<int>(r.a.size()) != lp.n) fail(Err::Invariant, "constraint width mismatch");
    for (double v : r.a)
      if (!std::isfinite(v)) fail(Err::Invariant, "non-finite constraint coefficient");
    if (!std::isfinite(r.b)) fail(Err::Invariant, "non-finite constraint rhs");
  };
  for (const auto& r : lp.eq) check_row(r);
  for (const auto& r : lp.ineq) check_row(r);
  if (!lp.objective.empty() && static_cast<int>(lp.objective.size()) != lp.n)
    fail(Err::Invariant, "objective width mismatch");

  const int n = lp.n;
  auto lower_of = [&](int j) { return lp.lower.empty() ? -kInf : lp.lower[j]; };
  auto upper_of = [&](int j) { return lp.upper.empty() ? kInf : lp.upper[j]; };

  // Variable transform to nonnegative columns.
  std::vector<VarMap> vmap(n);
  int nx = 0;
  for (int j = 0; j < n; ++j) {
    double lo = lower_of(j), up = upper_of(j);
    if (lo > up) fail(Err::Invariant, "empty variable bound interval");
    if (std::isfinite(lo)) {
      vmap[j] = {nx++, -1, lo, 1.0};
    } else if (std::isfinite(up)) {
      vmap[j] = {nx++, -1, up, -1.0};
    } else {
      vmap[j] = {nx, nx + 1, 0.0, 1.0};
      nx += 2;
    }
  }

  // Row list: original eq, original ineq, then upper-bound rows for boxed vars.
  struct BuiltRow {
    std::vector<double> a;  // original-variable coefficients
    double b;
    RowRef ref;
  };
  std::vector<BuiltRow> built;
  for (int i = 0; i < static_cast<int>(lp.eq.size()); ++i)
    built.push_back({lp.eq[i].a, lp.eq[i].b, {RowKind::Eq, i, 1.0, false}});
  for (int i = 0; i < static_cast<int>(lp.ineq.size()); ++i)
    built.push_back({lp.ineq[i].a, lp.ineq[i].b, {RowKind::Ineq, i, 1.0, false}});
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(lower_of(j)) && std::isfinite(upper_of(j))) {
      std::vector<double> a(n, 0.0);
      a[j] = -1.0;
      built.push_back({std::move(a), -upper_of(j), {RowKind::Upper, j, 1.0, false}});
    }
  }

  const int m = static_cast<int>(built.size());
  int n_ineq_rows = 0;
  for (const auto& r : built)
    if (r.ref.kind != RowKind::Eq) ++n_ineq_rows;

  Tableau tb;
  tb.rows = m;
  tb.cols = nx + n_ineq_rows + m;  // structural + surplus + artificial
  tb.t.assign(static_cast<size_t>(m) * (tb.cols + 1), 0.0);
  tb.cost.assign(tb.cols + 1, 0.0);
  tb.basis.assign(m, -1);

  int surplus_at = nx;
  for (int r = 0; r < m; ++r) {
    auto& br = built[r];
    double nrm = 0.0;
    for (double v : br.a) nrm += v * v;
    nrm = std::sqrt(nrm);
    br.ref.scale = (nrm > 0.0) ? nrm : 1.0;
    double rhs = br.b;
    for (int j = 0; j < n; ++j) rhs -= br.a[j] * vmap[j].shift;
    rhs /= br.ref.scale;
    std::vector<double> coef(nx, 0.0);
    for (int j = 0; j < n; ++j) {
      double v = br.a[j] / br.ref.scale;
      if (v == 0.0) continue;
      if (vmap[j].col_neg >= 0) {
        coef[vmap[j].col] += v;
        coef[vmap[j].col_neg] -= v;
      } else {
        coef[vmap[j].col] += vmap[j].sign * v;
      }
    }
    double srp = (br.ref.kind != RowKind::Eq) ? -1.0 : 0.0;
    if (rhs < 0.0) {
      rhs = -rhs;
      srp = -srp;
      for (auto& v : coef) v = -v;
      br.ref.flipped = true;
    }
    for (int c = 0; c < nx; ++c) tb.at(r, c) = coef[c];
    if (br.ref.kind != RowKind::Eq) tb.at(r, surplus_at++) = srp;
    tb.at(r, nx + n_ineq_rows + r) = 1.0;  // artificial
    tb.rhs(r) = rhs;
    tb.basis[r] = nx + n_ineq_rows + r;
  }

  // Phase 1: minimize the artificial sum.
  for (int r = 0; r < m; ++r) tb.cost[nx + n_ineq_rows + r] = 1.0;
  for (int r = 0; r < m; ++r) {
    const int w = tb.cols + 1;
    const double* row = &tb.t[static_cast<size_t>(r) * w];
    for (int c = 0; c < w; ++c) tb.cost[c] -= row[c];
  }
  std::vector<char> allowed(tb.cols, 1);
  Status flag = Status::Optimal;
  if (!run_simplex(tb, allowed, &flag)) fail(Err::Numeric, "phase 1 unbounded");

  Result res;
  double phase1 = -tb.cost[tb.cols];
  if (phase1 > kPhase1Tol) {
    res.status = Status::Infeasible;
    // pi_r = 1 - reduced cost of the r-th artificial column.
    std::vector<double> y(m);
    for (int r = 0; r < m; ++r) {
      double pi = 1.0 - tb.cost[nx + n_ineq_rows + r];
      if (built[r].ref.flipped) pi = -pi;
      y[r] = pi / built[r].ref.scale;
    }
    res.farkas_eq.assign(lp.eq.size(), 0.0);
    res.farkas_ineq.assign(lp.ineq.size(), 0.0);
    res.farkas_lower.assign(n, 0.0);
    res.farkas_upper.assign(n, 0.0);
    std::vector<double> combo(n, 0.0);
    double rhs_combo = 0.0;
    for (int r = 0; r < m; ++r) {
      const auto& ref = built[r].ref;
      double v = y[r];
      if (ref.kind != RowKind::Eq && v < 0.0) v = 0.0;  // clamp dual roundoff
      if (ref.kind == RowKind::Eq) res.farkas_eq[ref.index] = v;
      else if (ref.kind == RowKind::Ineq) res.farkas_ineq[ref.index] = v;
      else res.farkas_upper[ref.index] = v;
      for (int j = 0; j < n; ++j) combo[j] += v * built[r].a[j];
      rhs_combo += v * built[r].b;
    }
    for (int j = 0; j < n; ++j) {
      double lo = lower_of(j), up = upper_of(j);
      bool has_lower_shift = std::isfinite(lo);
      bool only_upper = !std::isfinite(lo) && std::isfinite(up);
      if (has_lower_shift) {
        double z = -combo[j];
        if (z < 0.0) z = 0.0;
        res.farkas_lower[j] = z;
        combo[j] += z;
        rhs_combo += z * lo;
      } else if (only_upper) {
        double w = combo[j];
        if (w < 0.0) w = 0.0;
        res.farkas_upper[j] += w;
        combo[j] -= w;
        rhs_combo -= w * up;
      }
    }
    double viol = 0.0;
    for (int j = 0; j < n; ++j) viol = std::max(viol, std::abs(combo[j]));
    if (viol > tol::lp || rhs_combo <= tol::lp_farkas_margin)
      fail(Err::Numeric, "Farkas certificate failed self-verification");
    return res;
  }

  // Phase 2.
  if (!lp.objective.empty()) {
    std::fill(tb.cost.begin(), tb.cost.end(), 0.0);
    for (int j = 0; j < n; ++j) {
      double c = lp.objective[j];
      if (c == 0.0) continue;
      if (vmap[j].col_neg >= 0) {
        tb.cost[vmap[j].col] += c;
        tb.cost[vmap[j].col_neg] -= c;
      } else {
        tb.cost[vmap[j].col] += vmap[j].sign * c;
      }
    }
    for (int r = 0; r < m; ++r) {
      double f = tb.cost[tb.basis[r]];
      if (f == 0.0) continue;
      const int w = tb.cols + 1;
      const double* row = &tb.t[static_cast<size_t>(r) * w];
      for (int c = 0; c < w; ++c) tb.cost[c] -= f * row[c];
    }
    for (int r = 0; r < m; ++r) allowed[nx + n_ineq_rows + r] = 0;
    Status ub = Status::Optimal;
    if (!run_simplex(tb, allowed, &ub)) {
      res.status = Status::Unbounded;
      return res;
    }
  }

  // Read the point back in original variables.
  std::vector<double> xt(nx, 0.0);
  for (int r = 0; r < m; ++r)
    if (tb.basis[r] < nx) xt[tb.basis[r]] = tb.rhs(r);
  res.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double v;
    if (vmap[j].col_neg >= 0) v = xt[vmap[j].col] - xt[vmap[j].col_neg];
    else v = vmap[j].shift + vmap[j].sign * xt[vmap[j].col];
    res.x[j] = v;
  }
  if (!lp.objective.empty()) {
    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += lp.objective[j] * res.x[j];
    res.objective_value = obj;
  }

  for (const auto& br : built) {
    double ax = 0.0, nrm = br.ref.scale;
    for (int j = 0; j < n; ++j) ax += br.a[j] * res.x[j];
    double resid = (ax - br.b) / nrm;
    bool ok = (br.ref.kind == RowKind::Eq) ? std::abs(resid) <= tol::lp : resid >= -tol::lp;
    if (!ok) fail(Err::Numeric, "LP solution failed constraint self-verification");
  }
  for (int j = 0; j < n; ++j) {
    if (res.x[j] < lower_of(j) - tol::lp || res.x[j] > upper_of(j) + tol::lp)
      fail(Err::Numeric, "LP solution failed bound self-verification");
  }
  res.status = Status::Optimal;
  return res;
}

}  // namespace convexo::lp
