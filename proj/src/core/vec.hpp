#pragma once

#include <array>
#include <cmath>

#include "error.hpp"

namespace convexo {

// Points and directions in R^2 or R^3. 2D data keeps z = 0 so the same
// arithmetic serves both dimensions.
using Vec = std::array<double, 3>;

inline Vec vec2(double x, double y) { return {x, y, 0.0}; }
inline Vec vec3(double x, double y, double z) { return {x, y, z}; }

inline Vec add(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec scale(const Vec& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec normalized(const Vec& a) {
  double n = norm(a);
  if (n <= 0.0) fail(Err::ZeroDirection, "cannot normalize the zero vector");
  return scale(a, 1.0 / n);
}

// Counterclockwise quarter turn in the plane.
inline Vec rot90(const Vec& a) { return {-a[1], a[0], 0.0}; }

inline double angle2(const Vec& a) { return std::atan2(a[1], a[0]); }

// Chordal distance between unit vectors; ~equal to the angle for small angles
// and numerically reliable where acos is not.
inline double chord(const Vec& u, const Vec& v) { return dist(u, v); }

inline Vec unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

}  // namespace convexo
