#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "error.hpp"

namespace convexo::geom {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct QPoint {
  i64 x = 0, y = 0, z = 0;
  bool operator==(const QPoint& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator<(const QPoint& o) const { return std::tie(x, y, z) < std::tie(o.x, o.y, o.z); }
};

constexpr double kLattice = 1099511627776.0;  // 2^40

std::vector<QPoint> quantize(const std::vector<Vec>& pts) {
  double lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (int c = 0; c < 3; ++c) {
    lo[c] = hi[c] = pts.empty() ? 0.0 : pts[0][c];
    for (const auto& p : pts) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
  }
  double extent = std::max({hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]});
  double s = extent > 0.0 ? (kLattice - 1.0) / extent : 0.0;
  std::vector<QPoint> q(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    q[i].x = llround((pts[i][0] - lo[0]) * s);
    q[i].y = llround((pts[i][1] - lo[1]) * s);
    q[i].z = llround((pts[i][2] - lo[2]) * s);
  }
  return q;
}

i128 cross2q(const QPoint& o, const QPoint& a, const QPoint& b) {
  return i128(a.x - o.x) * i128(b.y - o.y) - i128(a.y - o.y) * i128(b.x - o.x);
}

// Sign of det[b-a, c-a, d-a]; positive means d lies outside the oriented
// plane (a,b,c). Coordinates fit in 41 bits, so the result fits in 128.
i128 orient3(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  i128 bx = b.x - a.x, by = b.y - a.y, bz = b.z - a.z;
  i128 cx = c.x - a.x, cy = c.y - a.y, cz = c.z - a.z;
  i128 dx = d.x - a.x, dy = d.y - a.y, dz = d.z - a.z;
  i128 nx = by * cz - bz * cy;
  i128 ny = bz * cx - bx * cz;
  i128 nz = bx * cy - by * cx;
  return nx * dx + ny * dy + nz * dz;
}

i128 collinear3(const QPoint& a, const QPoint& b, const QPoint& c) {
  i128 ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  i128 vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  i128 cx = uy * vz - uz * vy;
  i128 cy = uz * vx - ux * vz;
  i128 cz = ux * vy - uy * vx;
  i128 m = 0;
  if (cx < 0) cx = -cx;
  if (cy < 0) cy = -cy;
  if (cz < 0) cz = -cz;
  m = cx | cy | cz;
  return m;
}

}  // namespace

std::vector<int> hull2d(const std::vector<Vec>& pts) {
  std::vector<QPoint> q = quantize(pts);
  std::vector<int> idx;
  {
    std::map<std::pair<i64, i64>, int> seen;
    for (int i = 0; i < static_cast<int>(q.size()); ++i)
      if (seen.emplace(std::make_pair(q[i].x, q[i].y), i).second) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::tie(q[a].x, q[a].y) < std::tie(q[b].x, q[b].y);
  });
  const int n = static_cast<int>(idx.size());
  if (n <= 2) return idx;

  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross2q(q[hull[k - 2]], q[hull[k - 1]], q[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {  // upper hull
    while (k >= t && cross2q(q[hull[k - 2]], q[hull[k - 1]], q[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && q[hull[0]] == q[hull[1]]) hull.resize(1);
  return hull;
}

int affine_rank(const std::vector<Vec>& pts) {
  std::vector<QPoint> q = quantize(pts);
  if (q.empty()) return -1;
  size_t p1 = 0;
  while (p1 < q.size() && q[p1] == q[0]) ++p1;
  if (p1 == q.size()) return 0;
  size_t p2 = 0;
  while (p2 < q.size() && collinear3(q[0], q[p1], q[p2]) == 0) ++p2;
  if (p2 == q.size()) return 1;
  for (size_t p3 = 0; p3 < q.size(); ++p3)
    if (orient3(q[0], q[p1], q[p2], q[p3]) != 0) return 3;
  return 2;
}

namespace {

struct Face {
  int a, b, c;
  bool alive = true;
};

struct Builder {
  const std::vector<QPoint>& q;
  std::vector<Face> faces;
  std::map<std::pair<int, int>, int> edge_face;  // directed edge -> face id

  explicit Builder(const std::vector<QPoint>& pts) : q(pts) {}

  void add_face(int a, int b, int c) {
    int id = static_cast<int>(faces.size());
    faces.push_back({a, b, c, true});
    edge_face[{a, b}] = id;
    edge_face[{b, c}] = id;
    edge_face[{c, a}] = id;
  }

  void drop_face(int id) {
    Face& f = faces[id];
    f.alive = false;
    edge_face.erase({f.a, f.b});
    edge_face.erase({f.b, f.c});
    edge_face.erase({f.c, f.a});
  }

  void insert(int p) {
    std::vector<int> visible;
    for (int id = 0; id < static_cast<int>(faces.size()); ++id) {
      const Face& f = faces[id];
      if (f.alive && orient3(q[f.a], q[f.b], q[f.c], q[p]) > 0) visible.push_back(id);
    }
    if (visible.empty()) return;
    std::vector<char> vis(faces.size(), 0);
    for (int id : visible) vis[id] = 1;
    std::vector<std::pair<int, int>> horizon;
    for (int id : visible) {
      const Face& f = faces[id];
      const int e[3][2] = {{f.a, f.b}, {f.b, f.c}, {f.c, f.a}};
      for (auto& ed : e) {
        auto it = edge_face.find({ed[1], ed[0]});
        if (it == edge_face.end() || !vis[it->second]) horizon.push_back({ed[0], ed[1]});
      }
    }
    for (int id : visible) drop_face(id);
    for (auto& ed : horizon) add_face(ed.first, ed.second, p);
  }
};

}  // namespace

Hull3D hull3d(const std::vector<Vec>& pts) {
  std::vector<QPoint> q = quantize(pts);
  std::vector<int> idx;
  {
    std::map<QPoint, int> seen;
    for (int i = 0; i < static_cast<int>(q.size()); ++i)
      if (seen.emplace(q[i], i).second) idx.push_back(i);
  }
  if (idx.size() < 4) fail(Err::DegenerateBody, "3D hull needs affine rank 3");

  // Initial simplex: exact independence tests, double metrics to pick far points.
  int i0 = idx[0];
  int i1 = -1, i2 = -1, i3 = -1;
  double best = -1.0;
  for (int i : idx) {
    if (q[i] == q[i0]) continue;
    double d = norm2(sub(pts[i], pts[i0]));
    if (d > best) { best = d; i1 = i; }
  }
  best = -1.0;
  for (int i : idx) {
    if (i1 < 0) break;
    if (collinear3(q[i0], q[i1], q[i]) == 0) continue;
    double d = norm(cross(sub(pts[i1], pts[i0]), sub(pts[i], pts[i0])));
    if (d > best) { best = d; i2 = i; }
  }
  best = -1.0;
  for (int i : idx) {
    if (i2 < 0) break;
    i128 o = orient3(q[i0], q[i1], q[i2], q[i]);
    if (o == 0) continue;
    double d = std::abs(static_cast<double>(o));
    if (d > best) { best = d; i3 = i; }
  }
  if (i1 < 0 || i2 < 0 || i3 < 0) fail(Err::DegenerateBody, "3D hull needs affine rank 3");
  if (orient3(q[i0], q[i1], q[i2], q[i3]) > 0) std::swap(i1, i2);

  Builder bld(q);
  bld.add_face(i0, i1, i2);
  bld.add_face(i1, i3, i2);
  bld.add_face(i0, i2, i3);
  bld.add_face(i0, i3, i1);
  for (int i : idx) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    bld.insert(i);
  }

  // Merge coplanar adjacent triangles into facets (union-find on exact planes).
  std::vector<int> parent(bld.faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [edge, id] : bld.edge_face) {
    auto it = bld.edge_face.find({edge.second, edge.first});
    if (it == bld.edge_face.end() || it->second < id) continue;
    const Face& f = bld.faces[id];
    const Face& g = bld.faces[it->second];
    int apex = g.a + g.b + g.c - edge.first - edge.second;
    if (orient3(q[f.a], q[f.b], q[f.c], q[apex]) == 0) parent[find(id)] = find(it->second);
  }
  std::map<int, std::vector<int>> groups;
  for (int id = 0; id < static_cast<int>(bld.faces.size()); ++id)
    if (bld.faces[id].alive) groups[find(id)].push_back(id);

  Hull3D out;
  std::vector<char> is_vertex(pts.size(), 0);
  for (auto& [root, tris] : groups) {
    const Face& f0 = bld.faces[tris[0]];
    Vec n = cross(sub(pts[f0.b], pts[f0.a]), sub(pts[f0.c], pts[f0.a]));
    Vec u = normalized(n);

    std::vector<int> members;
    for (int id : tris) {
      const Face& f = bld.faces[id];
      members.push_back(f.a);
      members.push_back(f.b);
      members.push_back(f.c);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    // Order the facet polygon counterclockwise around the outward normal.
    Vec centroid = {0, 0, 0};
    for (int v : members) centroid = add(centroid, pts[v]);
    centroid = scale(centroid, 1.0 / static_cast<double>(members.size()));
    Vec e1 = sub(pts[members[0]], centroid);
    e1 = sub(e1, scale(u, dot(e1, u)));
    if (norm(e1) == 0.0 && members.size() > 1) e1 = sub(pts[members[1]], centroid);
    e1 = normalized(e1);
    Vec e2 = cross(u, e1);
    std::vector<std::pair<double, int>> order;
    for (int v : members) {
      Vec d = sub(pts[v], centroid);
      order.push_back({std::atan2(dot(d, e2), dot(d, e1)), v});
    }
    std::sort(order.begin(), order.end());

    std::vector<int> cycle;
    for (auto& [ang, v] : order) cycle.push_back(v);
    // Drop boundary points that are exactly mid-edge on the lattice.
    if (cycle.size() > 2) {
      std::vector<int> clean;
      const int nc = static_cast<int>(cycle.size());
      for (int i = 0; i < nc; ++i) {
        int prev = cycle[(i + nc - 1) % nc], next = cycle[(i + 1) % nc];
        if (collinear3(q[prev], q[cycle[i]], q[next]) != 0) clean.push_back(cycle[i]);
      }
      cycle = std::move(clean);
    }
    if (cycle.size() < 3) continue;

    double area = 0.0;
    double support = -1e300;
    Vec c2 = {0, 0, 0};
    for (int v : cycle) c2 = add(c2, pts[v]);
    c2 = scale(c2, 1.0 / static_cast<double>(cycle.size()));
    for (size_t i = 0; i < cycle.size(); ++i) {
      const Vec& a = pts[cycle[i]];
      const Vec& b = pts[cycle[(i + 1) % cycle.size()]];
      area += 0.5 * norm(cross(sub(a, c2), sub(b, c2)));
    }
    for (int v : cycle) support = std::max(support, dot(u, pts[v]));
    for (int v : cycle) is_vertex[v] = 1;
    out.facets.push_back({u, support, area, cycle});
  }
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (is_vertex[i]) out.vertices.push_back(i);
  if (out.vertices.size() < 4) fail(Err::DegenerateBody, "3D hull collapsed");
  return out;
}

}  // namespace convexo::geom
