#pragma once

#include <vector>

#include "vec.hpp"

namespace convexo::geom {

// Convex hulls with exact predicates: inputs are snapped to a 2^40 lattice
// over their bounding box and all orientation tests run in 128-bit integers.
// Geometric quantities (normals, areas, supports) are then read from the
// original double coordinates.

// Indices of the extreme points in counterclockwise order, starting at the
// lexicographic minimum. Collinear middle points are dropped.
std::vector<int> hull2d(const std::vector<Vec>& pts);

struct HullFacet {
  Vec normal;              // outward unit normal
  double support;          // max <normal, v> over the hull
  double area;             // facet polygon area
  std::vector<int> cycle;  // vertex indices, counterclockwise from outside
};

struct Hull3D {
  std::vector<int> vertices;  // extreme point indices, ascending
  std::vector<HullFacet> facets;
};

// Throws DegenerateBody when the affine rank of the point set is below 3.
Hull3D hull3d(const std::vector<Vec>& pts);

// Affine rank (0..3) decided on the quantized lattice.
int affine_rank(const std::vector<Vec>& pts);

}  // namespace convexo::geom
