#include "polytope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "error.hpp"
#include "hull.hpp"
#include "lp.hpp"
#include "smallmat.hpp"
#include "tolerances.hpp"

namespace convexo::poly {

using std::numbers::pi;

SphereGrid uniform_grid_2d(int m) {
  if (m < 3) fail(Err::BadQuadrature, "2D grid needs at least 3 directions");
  SphereGrid g;
  g.dim = 2;
  g.dirs.reserve(m);
  g.weights.assign(m, 2.0 * pi / m);
  for (int i = 0; i < m; ++i) g.dirs.push_back(unit_from_angle(2.0 * pi * i / m));
  return g;
}

SphereGrid icosphere_grid(int min_dirs) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p = normalized(p);
  std::vector<std::array<int, 3>> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  while (static_cast<int>(v.size()) < min_dirs) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      int id = static_cast<int>(v.size());
      v.push_back(normalized(scale(add(v[a], v[b]), 0.5)));
      mid[key] = id;
      return id;
    };
    std::vector<std::array<int, 3>> nf;
    nf.reserve(f.size() * 4);
    for (auto& tri : f) {
      int ab = midpoint(tri[0], tri[1]), bc = midpoint(tri[1], tri[2]), ca = midpoint(tri[2], tri[0]);
      nf.push_back({tri[0], ab, ca});
      nf.push_back({tri[1], bc, ab});
      nf.push_back({tri[2], ca, bc});
      nf.push_back({ab, bc, ca});
    }
    f = std::move(nf);
  }
  SphereGrid g;
  g.dim = 3;
  g.dirs = std::move(v);
  g.weights.assign(g.dirs.size(), 4.0 * pi / static_cast<double>(g.dirs.size()));
  return g;
}

SphereGrid make_grid(int dim, int m) {
  if (dim == 2) return uniform_grid_2d(m);
  if (dim == 3) return icosphere_grid(m);
  fail(Err::DimensionMismatch, "grid dimension must be 2 or 3");
}

SphereGrid canonical_grid(int dim) { return dim == 2 ? uniform_grid_2d(256) : icosphere_grid(162); }

namespace {

Vec lexmin_rotate_start(std::vector<Vec>& cycle) {
  size_t best = 0;
  for (size_t i = 1; i < cycle.size(); ++i)
    if (std::lexicographical_compare(cycle[i].begin(), cycle[i].end(), cycle[best].begin(),
                                     cycle[best].end()))
      best = i;
  std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
  return cycle.front();
}

// Plane basis from the covariance of the points; normal = weakest axis.
Vec plane_normal(const std::vector<Vec>& pts) {
  Vec c = {0, 0, 0};
  for (const auto& p : pts) c = add(c, p);
  c = scale(c, 1.0 / static_cast<double>(pts.size()));
  double m[3][3] = {};
  for (const auto& p : pts) {
    Vec d = sub(p, c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += d[i] * d[j];
  }
  // Smallest-eigenvalue direction by inverse-iteration-free search: try the
  // cross products of the two dominant spreads.
  Vec best = {0, 0, 1};
  double bestval = 1e300;
  std::vector<Vec> candidates;
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size() && j < i + 8; ++j) {
      Vec n = cross(sub(pts[i], pts[0]), sub(pts[j], pts[0]));
      if (norm(n) > 1e-12) candidates.push_back(normalized(n));
    }
  for (const auto& n : candidates) {
    double q = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q += n[i] * m[i][j] * n[j];
    if (q < bestval) { bestval = q; best = n; }
  }
  return best;
}

}  // namespace

VBody vbody_from_points(int dim, const std::vector<Vec>& pts) {
  if (pts.empty()) fail(Err::Invariant, "body needs at least one point");
  VBody out;
  out.dim = dim;
  if (dim == 2) {
    auto idx = geom::hull2d(pts);
    for (int i : idx) out.vertices.push_back(pts[i]);
    if (out.vertices.size() > 2) lexmin_rotate_start(out.vertices);
    else std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }
  int rank = geom::affine_rank(pts);
  if (rank <= 0) {
    out.vertices.push_back(pts[0]);
  } else if (rank == 1) {
    Vec d = {0, 0, 0};
    for (size_t i = 1; i < pts.size(); ++i) {
      d = sub(pts[i], pts[0]);
      if (norm(d) > 0) break;
    }
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (dot(sub(pts[i], pts[lo]), d) < 0) lo = i;
      if (dot(sub(pts[i], pts[hi]), d) > 0) hi = i;
    }
    out.vertices = {pts[lo], pts[hi]};
    std::sort(out.vertices.begin(), out.vertices.end());
  } else if (rank == 2) {
    Vec n = plane_normal(pts);
    Vec e1 = std::abs(n[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    e1 = normalized(sub(e1, scale(n, dot(e1, n))));
    Vec e2 = cross(n, e1);
    std::vector<Vec> flat(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) flat[i] = vec2(dot(pts[i], e1), dot(pts[i], e2));
    auto idx = geom::hull2d(flat);
    for (int i : idx) out.vertices.push_back(pts[i]);
    if (out.vertices.size() > 2) lexmin_rotate_start(out.vertices);
    else std::sort(out.vertices.begin(), out.vertices.end());
  } else {
    auto hull = geom::hull3d(pts);
    for (int i : hull.vertices) out.vertices.push_back(pts[i]);
    std::sort(out.vertices.begin(), out.vertices.end());
  }
  return out;
}

double support_eval(const VBody& b, const Vec& z) {
  if (norm(z) == 0.0) fail(Err::ZeroDirection, "support direction must be nonzero");
  double s = -1e300;
  for (const auto& v : b.vertices) s = std::max(s, dot(v, z));
  return s;
}

double support_eval(const Body& b, const Vec& z) { return support_eval(to_vbody(b), z); }

VBody to_vbody(const Body& b) {
  if (std::holds_alternative<VBody>(b)) return std::get<VBody>(b);
  return h_to_v(std::get<HBody>(b));
}

namespace {

struct HPlane {
  Vec u;
  double h;
  int idx;
  double ang;
};

bool line_intersect(const HPlane& a, const HPlane& b, Vec* out) {
  double det = cross2(a.u, b.u);
  if (std::abs(det) < 1e-13) return false;
  double x, y;
  geom::solve2(a.u[0], a.u[1], b.u[0], b.u[1], a.h, b.h, &x, &y);
  *out = vec2(x, y);
  return true;
}

Intersection intersect_2d(const std::vector<Vec>& normals, const std::vector<double>& h) {
  const int m = static_cast<int>(normals.size());
  Intersection out;
  out.facet_area.assign(m, 0.0);
  out.tight_support.assign(m, 0.0);
  out.facet_polys.assign(m, {});
  double scale_h = 1.0;
  for (double v : h) scale_h = std::max(scale_h, std::abs(v));
  const double eps = 1e-12 * scale_h;

  std::vector<HPlane> lines;
  lines.reserve(m);
  for (int i = 0; i < m; ++i) lines.push_back({normals[i], h[i], i, angle2(normals[i])});
  std::sort(lines.begin(), lines.end(), [](const HPlane& a, const HPlane& b) {
    if (a.ang != b.ang) return a.ang < b.ang;
    return a.h < b.h;
  });
  std::vector<HPlane> kept;
  for (const auto& l : lines) {
    if (!kept.empty() && std::abs(l.ang - kept.back().ang) < 1e-13) continue;  // keep tighter
    kept.push_back(l);
  }
  if (kept.size() < 3) return out;

  auto violates = [&](const HPlane& a, const HPlane& b, const HPlane& c) {
    Vec p;
    if (!line_intersect(a, b, &p)) return false;
    return dot(c.u, p) > c.h + eps;
  };

  std::deque<HPlane> dq;
  for (const auto& l : kept) {
    while (dq.size() >= 2 && violates(dq[dq.size() - 2], dq.back(), l)) dq.pop_back();
    while (dq.size() >= 2 && violates(dq[0], dq[1], l)) dq.pop_front();
    dq.push_back(l);
  }
  while (dq.size() >= 3 && violates(dq[dq.size() - 2], dq.back(), dq.front())) dq.pop_back();
  while (dq.size() >= 3 && violates(dq[0], dq[1], dq.back())) dq.pop_front();
  if (dq.size() < 3) return out;

  const int k = static_cast<int>(dq.size());
  std::vector<Vec> corner(k);  // corner[j] = line j ∧ line j+1
  for (int j = 0; j < k; ++j) {
    if (!line_intersect(dq[j], dq[(j + 1) % k], &corner[j])) return out;
  }
  // Verify against every input halfplane; reject non-polygonal leftovers.
  double area2 = 0.0;
  for (int j = 0; j < k; ++j) area2 += cross2(corner[j], corner[(j + 1) % k]);
  if (area2 <= eps * eps) return out;
  for (const auto& c : corner)
    for (int i = 0; i < m; ++i)
      if (dot(normals[i], c) > h[i] + 64.0 * eps + 1e-12) return out;

  for (int j = 0; j < k; ++j) {
    const Vec& a = corner[(j + k - 1) % k];
    const Vec& b = corner[j];
    out.facet_area[dq[j].idx] = dist(a, b);
    out.facet_polys[dq[j].idx] = {a, b};
  }
  std::vector<Vec> verts;
  for (int j = 0; j < k; ++j) {
    if (verts.empty() || dist(corner[j], verts.back()) > 1e-11 * scale_h) verts.push_back(corner[j]);
  }
  if (verts.size() > 1 && dist(verts.front(), verts.back()) <= 1e-11 * scale_h) verts.pop_back();
  if (verts.size() < 3) return out;
  lexmin_rotate_start(verts);
  out.vertices = std::move(verts);
  for (int i = 0; i < m; ++i) {
    double s = -1e300;
    for (const auto& v : out.vertices) s = std::max(s, dot(normals[i], v));
    out.tight_support[i] = s;
  }
  out.ok = true;
  return out;
}

Intersection intersect_3d(const std::vector<Vec>& normals, const std::vector<double>& h) {
  const int m = static_cast<int>(normals.size());
  Intersection out;
  out.facet_area.assign(m, 0.0);
  out.tight_support.assign(m, 0.0);
  out.facet_polys.assign(m, {});
  double scale_h = 1.0;
  for (double v : h) scale_h = std::max(scale_h, std::abs(v));

  // Interior point: the origin when it is strictly inside, else Chebyshev center.
  Vec c = {0, 0, 0};
  double margin = 1e300;
  for (int i = 0; i < m; ++i) margin = std::min(margin, h[i]);
  if (margin <= 1e-12 * scale_h) {
    lp::LinearProgram p;
    p.n = 4;
    p.objective = {0, 0, 0, -1};
    for (int i = 0; i < m; ++i)
      p.ineq.push_back({{-normals[i][0], -normals[i][1], -normals[i][2], -1.0}, -h[i]});
    lp::Result r = lp::solve(p);
    if (r.status != lp::Status::Optimal || r.x[3] <= 1e-10 * scale_h) return out;
    c = {r.x[0], r.x[1], r.x[2]};
  }

  std::vector<double> hs(m);
  std::vector<Vec> dual(m);
  for (int i = 0; i < m; ++i) {
    hs[i] = h[i] - dot(normals[i], c);
    if (hs[i] <= 0) return out;
    dual[i] = scale(normals[i], 1.0 / hs[i]);
  }
  geom::Hull3D hull;
  try {
    hull = geom::hull3d(dual);
  } catch (const CvxError&) {
    return out;
  }

  std::vector<Vec> primal(hull.facets.size());
  std::vector<std::vector<int>> incident(m);
  for (size_t fi = 0; fi < hull.facets.size(); ++fi) {
    const auto& cyc = hull.facets[fi].cycle;
    double M[3][3] = {}, b[3] = {};
    for (int pid : cyc) {
      for (int r = 0; r < 3; ++r) {
        b[r] += dual[pid][r];
        for (int s = 0; s < 3; ++s) M[r][s] += dual[pid][r] * dual[pid][s];
      }
    }
    auto ev = geom::sym3_eigenvalues(M[0][0], M[0][1], M[0][2], M[1][1], M[1][2], M[2][2]);
    if (ev[0] <= 0 || std::sqrt(ev[2] / ev[0]) > tol::cond_limit)
      fail(Err::NumericalDegeneracy, "nearly parallel planes meet: condition number above 1e12");
    double x[3];
    geom::solve3(M, b, x, nullptr);
    primal[fi] = add(Vec{x[0], x[1], x[2]}, c);
    for (int pid : cyc) incident[pid].push_back(static_cast<int>(fi));
  }

  for (int i = 0; i < m; ++i) {
    if (incident[i].size() < 3) continue;
    std::vector<Vec> poly;
    for (int fi : incident[i]) poly.push_back(primal[fi]);
    Vec u = normals[i];
    Vec ctr = {0, 0, 0};
    for (const auto& p : poly) ctr = add(ctr, p);
    ctr = scale(ctr, 1.0 / static_cast<double>(poly.size()));
    Vec e1 = std::abs(u[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    e1 = normalized(sub(e1, scale(u, dot(e1, u))));
    Vec e2 = cross(u, e1);
    std::sort(poly.begin(), poly.end(), [&](const Vec& a, const Vec& b2) {
      Vec da = sub(a, ctr), db = sub(b2, ctr);
      return std::atan2(dot(da, e2), dot(da, e1)) < std::atan2(dot(db, e2), dot(db, e1));
    });
    double area = 0.0;
    for (size_t j = 0; j < poly.size(); ++j)
      area += 0.5 * norm(cross(sub(poly[j], ctr), sub(poly[(j + 1) % poly.size()], ctr)));
    out.facet_area[i] = area;
    out.facet_polys[i] = std::move(poly);
  }

  std::vector<Vec> verts;
  for (const auto& p : primal) {
    bool dup = false;
    for (const auto& q : verts)
      if (dist(p, q) <= 1e-9 * std::max(1.0, scale_h)) { dup = true; break; }
    if (!dup) verts.push_back(p);
  }
  if (verts.size() < 4) return out;
  std::sort(verts.begin(), verts.end());
  out.vertices = std::move(verts);
  for (int i = 0; i < m; ++i) {
    double s = -1e300;
    for (const auto& v : out.vertices) s = std::max(s, dot(normals[i], v));
    out.tight_support[i] = s;
  }
  out.ok = true;
  return out;
}

}  // namespace

Intersection intersect_halfspaces(int dim, const std::vector<Vec>& normals,
                                  const std::vector<double>& h) {
  if (normals.size() != h.size()) fail(Err::Invariant, "normals/support length mismatch");
  return dim == 2 ? intersect_2d(normals, h) : intersect_3d(normals, h);
}

VBody h_to_v(const HBody& b) {
  Intersection s = intersect_halfspaces(b.dim, b.normals, b.support);
  if (!s.ok)
    fail(Err::NumericalDegeneracy, "halfspace intersection is empty or not full-dimensional");
  VBody v;
  v.dim = b.dim;
  v.vertices = s.vertices;
  return v;
}

HRep v_to_h(const VBody& b) {
  if (geom::affine_rank(b.vertices) < b.dim)
    fail(Err::DegenerateBody, "body is not full-dimensional");
  HRep out;
  out.hbody.dim = b.dim;
  if (b.dim == 2) {
    auto idx = geom::hull2d(b.vertices);
    const int k = static_cast<int>(idx.size());
    for (int j = 0; j < k; ++j) {
      const Vec& a = b.vertices[idx[j]];
      const Vec& c = b.vertices[idx[(j + 1) % k]];
      Vec d = sub(c, a);
      Vec u = normalized(vec2(d[1], -d[0]));
      out.hbody.normals.push_back(u);
      out.hbody.support.push_back(dot(u, a));
      out.facets.push_back({u, dist(a, c), dot(u, a)});
    }
  } else {
    auto hull = geom::hull3d(b.vertices);
    std::vector<FacetData> raw;
    for (const auto& f : hull.facets) raw.push_back({f.normal, f.area, f.support});
    // Merge facets whose normals collide within the direction threshold.
    std::vector<FacetData> merged;
    std::vector<char> used(raw.size(), 0);
    for (size_t i = 0; i < raw.size(); ++i) {
      if (used[i]) continue;
      FacetData acc = raw[i];
      Vec nsum = scale(raw[i].normal, raw[i].area);
      for (size_t j = i + 1; j < raw.size(); ++j) {
        if (used[j] || chord(raw[i].normal, raw[j].normal) > tol::distinct_dir) continue;
        used[j] = 1;
        acc.area += raw[j].area;
        acc.support = std::max(acc.support, raw[j].support);
        nsum = add(nsum, scale(raw[j].normal, raw[j].area));
      }
      acc.normal = normalized(nsum);
      merged.push_back(acc);
    }
    std::sort(merged.begin(), merged.end(),
              [](const FacetData& a, const FacetData& b2) { return a.normal < b2.normal; });
    for (const auto& f : merged) {
      out.hbody.normals.push_back(f.normal);
      out.hbody.support.push_back(f.support);
    }
    out.facets = std::move(merged);
  }
  return out;
}

double volume(const Body& b) {
  const VBody v = to_vbody(b);
  if (geom::affine_rank(v.vertices) < v.dim) return 0.0;
  if (v.dim == 2) {
    auto idx = geom::hull2d(v.vertices);
    double a2 = 0.0;
    const int k = static_cast<int>(idx.size());
    for (int j = 0; j < k; ++j)
      a2 += cross2(v.vertices[idx[j]], v.vertices[idx[(j + 1) % k]]);
    return 0.5 * a2;
  }
  auto hull = geom::hull3d(v.vertices);
  Vec g = {0, 0, 0};
  for (int i : hull.vertices) g = add(g, v.vertices[i]);
  g = scale(g, 1.0 / static_cast<double>(hull.vertices.size()));
  double vol = 0.0;
  for (const auto& f : hull.facets) {
    const int k = static_cast<int>(f.cycle.size());
    Vec c = {0, 0, 0};
    for (int i : f.cycle) c = add(c, v.vertices[i]);
    c = scale(c, 1.0 / static_cast<double>(k));
    for (int j = 0; j < k; ++j) {
      Vec a = sub(v.vertices[f.cycle[j]], g);
      Vec b2 = sub(v.vertices[f.cycle[(j + 1) % k]], g);
      Vec cc = sub(c, g);
      vol += dot(a, cross(b2, cc)) / 6.0;
    }
  }
  return vol;
}

VBody minkowski_sum(const Body& x, const Body& y) {
  if (body_dim(x) != body_dim(y)) fail(Err::DimensionMismatch, "Minkowski sum needs equal dims");
  VBody a = to_vbody(x), b = to_vbody(y);
  std::vector<Vec> sums;
  sums.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& p : a.vertices)
    for (const auto& q : b.vertices) sums.push_back(add(p, q));
  return vbody_from_points(a.dim, sums);
}

double integral_width(const Body& b, const SphereGrid& grid) {
  const int dim = body_dim(b);
  if (dim != grid.dim) fail(Err::DimensionMismatch, "grid and body dimension differ");
  double total = 0.0;
  for (double w : grid.weights) {
    if (w <= 0.0) fail(Err::BadQuadrature, "quadrature weights must be positive");
    total += w;
  }
  double full = dim == 2 ? 2.0 * pi : 4.0 * pi;
  if (std::abs(total - full) > 1e-7 * full)
    fail(Err::BadQuadrature, "quadrature weights must sum to the sphere surface measure");
  const VBody v = to_vbody(b);
  double acc = 0.0;
  for (int i = 0; i < grid.size(); ++i) acc += support_eval(v, grid.dirs[i]) * grid.weights[i];
  return acc / dim;
}

double fenchel_conjugate(const MaxAffineFunction& f, const Vec& y) {
  const int k = static_cast<int>(f.slopes.size());
  lp::LinearProgram p;
  p.n = k;
  p.objective = f.offsets;
  for (int d = 0; d < f.dim; ++d) {
    lp::Row row;
    row.a.resize(k);
    for (int j = 0; j < k; ++j) row.a[j] = f.slopes[j][d];
    row.b = y[d];
    p.eq.push_back(row);
  }
  p.eq.push_back({std::vector<double>(k, 1.0), 1.0});
  p.lower.assign(k, 0.0);
  p.upper.assign(k, lp::kInf);
  lp::Result r = lp::solve(p);
  if (r.status == lp::Status::Infeasible) return std::numeric_limits<double>::infinity();
  if (r.status != lp::Status::Optimal) fail(Err::Numeric, "conjugate LP did not solve");
  return r.objective_value;
}

double diameter(const VBody& b) {
  double d = 0.0;
  for (size_t i = 0; i < b.vertices.size(); ++i)
    for (size_t j = i + 1; j < b.vertices.size(); ++j)
      d = std::max(d, dist(b.vertices[i], b.vertices[j]));
  return d;
}

double hausdorff_vertex_bound(const VBody& a, const VBody& b) {
  auto one_way = [](const VBody& p, const VBody& q) {
    double worst = 0.0;
    for (const auto& v : p.vertices) {
      double best = 1e300;
      for (const auto& w : q.vertices) best = std::min(best, dist(v, w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

double dist_to_hull_l1(const VBody& q, const Vec& x) {
  const int k = static_cast<int>(q.vertices.size());
  const int dim = q.dim;
  lp::LinearProgram p;
  p.n = k + 2 * dim;
  p.objective.assign(p.n, 0.0);
  for (int d = 0; d < 2 * dim; ++d) p.objective[k + d] = 1.0;
  for (int d = 0; d < dim; ++d) {
    lp::Row row;
    row.a.assign(p.n, 0.0);
    for (int j = 0; j < k; ++j) row.a[j] = q.vertices[j][d];
    row.a[k + d] = 1.0;
    row.a[k + dim + d] = -1.0;
    row.b = x[d];
    p.eq.push_back(row);
  }
  lp::Row ones;
  ones.a.assign(p.n, 0.0);
  for (int j = 0; j < k; ++j) ones.a[j] = 1.0;
  ones.b = 1.0;
  p.eq.push_back(ones);
  p.lower.assign(p.n, 0.0);
  p.upper.assign(p.n, lp::kInf);
  lp::Result r = lp::solve(p);
  if (r.status != lp::Status::Optimal) fail(Err::Numeric, "hull distance LP did not solve");
  return r.objective_value;
}

std::optional<Vec> inclusion_translate(const Body& x, const Body& y) {
  if (body_dim(x) != body_dim(y)) fail(Err::DimensionMismatch, "inclusion needs equal dims");
  const int dim = body_dim(x);
  HRep hx = v_to_h(to_vbody(x));
  const VBody vy = to_vbody(y);
  double scale_h = 1.0;
  for (double v : hx.hbody.support) scale_h = std::max(scale_h, std::abs(v));
  lp::LinearProgram p;
  p.n = dim + 1;  // translation + margin
  p.objective.assign(p.n, 0.0);
  p.objective[dim] = -1.0;
  for (size_t i = 0; i < hx.hbody.normals.size(); ++i) {
    lp::Row row;
    row.a.assign(p.n, 0.0);
    for (int d = 0; d < dim; ++d) row.a[d] = -hx.hbody.normals[i][d];
    row.a[dim] = -1.0;
    row.b = -(hx.hbody.support[i] - support_eval(vy, hx.hbody.normals[i]));
    p.ineq.push_back(row);
  }
  lp::Result r = lp::solve(p);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  if (r.x[dim] < -1e-9 * scale_h) return std::nullopt;
  Vec t = {0, 0, 0};
  for (int d = 0; d < dim; ++d) t[d] = r.x[d];
  return t;
}

}  // namespace convexo::poly
