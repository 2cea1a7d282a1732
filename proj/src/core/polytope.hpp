#pragma once

#include <optional>
#include <vector>

#include "types.hpp"

namespace convexo::poly {

// Quadrature grids: uniform angles in 2D, subdivided-icosahedron directions
// with equal weights in 3D (smallest subdivision reaching min_dirs).
SphereGrid uniform_grid_2d(int m);
SphereGrid icosphere_grid(int min_dirs);
SphereGrid make_grid(int dim, int m);
SphereGrid canonical_grid(int dim);

// Canonical vertex body from an arbitrary point cloud: extreme points only,
// any affine rank; 2D vertices come out counterclockwise.
VBody vbody_from_points(int dim, const std::vector<Vec>& pts);

double support_eval(const VBody& b, const Vec& z);
double support_eval(const Body& b, const Vec& z);

VBody to_vbody(const Body& b);

// Intersection of halfspaces <u_i,x> <= h_i. Facet areas and tight support
// values are reported per input index (0 for redundant halfspaces).
struct Intersection {
  std::vector<Vec> vertices;
  std::vector<double> facet_area;
  std::vector<double> tight_support;
  std::vector<std::vector<Vec>> facet_polys;  // 3D facet cycles (2D: endpoint pairs)
  bool ok = false;  // full-dimensional nonempty result
};
Intersection intersect_halfspaces(int dim, const std::vector<Vec>& normals,
                                  const std::vector<double>& h);

VBody h_to_v(const HBody& b);

struct HRep {
  HBody hbody;
  std::vector<FacetData> facets;
};
HRep v_to_h(const VBody& b);  // throws DegenerateBody below full rank

double volume(const Body& b);

VBody minkowski_sum(const Body& x, const Body& y);

double integral_width(const Body& b, const SphereGrid& grid);

double fenchel_conjugate(const MaxAffineFunction& f, const Vec& y);

double diameter(const VBody& b);

// Hausdorff distance upper bound by matching vertices both ways.
double hausdorff_vertex_bound(const VBody& a, const VBody& b);

// L1 distance from x to conv(vertices of q), by LP.
double dist_to_hull_l1(const VBody& q, const Vec& x);

// Translation t with y + t inside x (none if impossible); decided by LP over
// the facet normals of x.
std::optional<Vec> inclusion_translate(const Body& x, const Body& y);

}  // namespace convexo::poly
