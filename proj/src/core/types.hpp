#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vec.hpp"

namespace convexo {

// Convex body in vertex representation. Stored vertices are exactly the
// extreme points; dim 2 or 3. Degenerate bodies (singletons, segments,
// planar figures in R^3) are represented only this way.
struct VBody {
  int dim = 2;
  std::vector<Vec> vertices;
};

// Full-dimensional convex body as outward unit facet normals and tight
// support numbers.
struct HBody {
  int dim = 2;
  std::vector<Vec> normals;
  std::vector<double> support;
};

using Body = std::variant<VBody, HBody>;

inline int body_dim(const Body& b) {
  return std::holds_alternative<VBody>(b) ? std::get<VBody>(b).dim : std::get<HBody>(b).dim;
}

struct Atom {
  Vec u;      // unit direction
  double w;   // weight
};

// Finite atomic measure on the unit sphere. `positive` asserts w >= 0;
// `alexandrov` additionally asserts closedness and spanning (validated at
// construction, never assumed).
struct SphericalMeasure {
  int dim = 2;
  std::vector<Atom> atoms;
  bool positive = true;
  bool alexandrov = false;

  double total_mass() const {
    double s = 0;
    for (const auto& a : atoms) s += a.w;
    return s;
  }
};

// Discrete measure on points of a compact convex set (affine majorization).
struct PointAtom {
  Vec x;
  double w;
};

struct PointMeasure {
  int dim = 2;
  std::vector<PointAtom> atoms;
};

// f(x) = max_j (<slopes_j, x> - offsets_j); dim may be 1, 2 or 3.
struct MaxAffineFunction {
  int dim = 1;
  std::vector<Vec> slopes;
  std::vector<double> offsets;
};

struct FacetData {
  Vec normal;
  double area = 0.0;
  double support = 0.0;
};

// Directions with quadrature weights summing to the sphere surface measure.
struct SphereGrid {
  int dim = 2;
  std::vector<Vec> dirs;
  std::vector<double> weights;

  int size() const { return static_cast<int>(dirs.size()); }
};

// n-dimensional coordinate Riesz space with N cones given by generators,
// plus two positive functionals f and g.
struct FunctionalSystem {
  int n = 0;
  std::vector<std::vector<std::vector<double>>> cones;  // cones[k][j] = generator in R^n
  std::vector<double> f;
  std::vector<double> g;
};

}  // namespace convexo
