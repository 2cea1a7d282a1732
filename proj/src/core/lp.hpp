#pragma once

#include <limits>
#include <vector>

namespace convexo::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Row {
  std::vector<double> a;
  double b = 0.0;
};

// min c·x  s.t.  eq: a·x = b,  ineq: a·x >= b,  lower <= x <= upper.
// Empty objective means pure feasibility. Empty bound vectors mean free
// variables; otherwise +-inf entries are allowed.
struct LinearProgram {
  int n = 0;
  std::vector<double> objective;
  std::vector<Row> eq;
  std::vector<Row> ineq;
  std::vector<double> lower;
  std::vector<double> upper;
};

enum class Status { Optimal, Infeasible, Unbounded };

// On Infeasible, the Farkas multipliers prove the contradiction
//   Σ y_eq·(eq rows) + Σ y_ineq·(ineq rows) + Σ y_lo·(x_j >= l_j) + Σ y_up·(-x_j >= -u_j)
// combines to 0 >= positive; y_ineq, y_lo, y_up are nonnegative. The solver
// re-verifies both optima and certificates by substitution before returning.
struct Result {
  Status status = Status::Optimal;
  std::vector<double> x;
  double objective_value = 0.0;
  std::vector<double> farkas_eq;
  std::vector<double> farkas_ineq;
  std::vector<double> farkas_lower;
  std::vector<double> farkas_upper;
};

Result solve(const LinearProgram& lp);

}  // namespace convexo::lp
