#pragma once

#include <array>
#include <cmath>

namespace convexo::geom {

// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi, ascending.
inline std::array<double, 3> sym3_eigenvalues(double a00, double a01, double a02, double a11,
                                              double a12, double a22) {
  double a[3][3] = {{a00, a01, a02}, {a01, a11, a12}, {a02, a12, a22}};
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    double diag = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]);
    if (off <= 1e-15 * (diag + 1e-300)) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        double app = a[p][p], aqq = a[q][q], apq = a[p][q];
        a[p][p] = c * c * app - 2 * s * c * apq + s * s * aqq;
        a[q][q] = s * s * app + 2 * s * c * apq + c * c * aqq;
        a[p][q] = a[q][p] = 0.0;
        int r = 3 - p - q;
        double arp = a[r][p], arq = a[r][q];
        a[r][p] = a[p][r] = c * arp - s * arq;
        a[r][q] = a[q][r] = s * arp + c * arq;
      }
    }
  }
  std::array<double, 3> ev = {a[0][0], a[1][1], a[2][2]};
  if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
  if (ev[1] > ev[2]) std::swap(ev[1], ev[2]);
  if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
  return ev;
}

// Solve Ax=b (3x3); reports the spectral condition number of A via AᵀA.
inline bool solve3(const double A[3][3], const double b[3], double x[3], double* cond) {
  double g[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g[i][j] += A[k][i] * A[k][j];
  auto ev = sym3_eigenvalues(g[0][0], g[0][1], g[0][2], g[1][1], g[1][2], g[2][2]);
  if (cond) *cond = (ev[0] <= 0.0) ? 1e300 : std::sqrt(ev[2] / ev[0]);
  double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  if (det == 0.0) return false;
  double inv = 1.0 / det;
  x[0] = inv * (b[0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                A[0][1] * (b[1] * A[2][2] - A[1][2] * b[2]) +
                A[0][2] * (b[1] * A[2][1] - A[1][1] * b[2]));
  x[1] = inv * (A[0][0] * (b[1] * A[2][2] - A[1][2] * b[2]) -
                b[0] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                A[0][2] * (A[1][0] * b[2] - b[1] * A[2][0]));
  x[2] = inv * (A[0][0] * (A[1][1] * b[2] - b[1] * A[2][1]) -
                A[0][1] * (A[1][0] * b[2] - b[1] * A[2][0]) +
                b[0] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]));
  return true;
}

inline bool solve2(double a00, double a01, double a10, double a11, double b0, double b1,
                   double* x0, double* x1) {
  double det = a00 * a11 - a01 * a10;
  if (det == 0.0) return false;
  *x0 = (b0 * a11 - a01 * b1) / det;
  *x1 = (a00 * b1 - b0 * a10) / det;
  return true;
}

}  // namespace convexo::geom
