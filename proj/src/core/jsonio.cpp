#include "jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "hull.hpp"
#include "lp.hpp"
#include "polytope.hpp"
#include "smallmat.hpp"
#include "tolerances.hpp"

namespace convexo::io {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::Schema, "malformed JSON document");
  return j;
}

double get_number(const json& j, const char* what) {
  if (!j.is_number()) fail(Err::Schema, std::string(what) + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(Err::Schema, std::string(what) + " must be finite");
  return v;
}

int get_dim(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(Err::Schema, "missing integer field 'dim'");
  int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) fail(Err::Schema, "'dim' must be 2 or 3");
  return dim;
}

Vec get_vec(const json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(Err::Schema, std::string(what) + " must be an array of length dim");
  Vec v = {0, 0, 0};
  for (int d = 0; d < dim; ++d) v[d] = get_number(j[d], what);
  return v;
}

Vec get_unit(const json& j, int dim, const char* what) {
  Vec v = get_vec(j, dim, what);
  if (std::abs(norm(v) - 1.0) > tol::unit_norm)
    fail(Err::Invariant, std::string("unit-norm: ") + what + " must have unit length");
  return v;
}

void check_positive_span(int dim, const std::vector<Vec>& normals) {
  double m00 = 0, m01 = 0, m02 = 0, m11 = 0, m12 = 0, m22 = 0;
  for (const auto& u : normals) {
    m00 += u[0] * u[0]; m01 += u[0] * u[1]; m02 += u[0] * u[2];
    m11 += u[1] * u[1]; m12 += u[1] * u[2]; m22 += u[2] * u[2];
  }
  if (dim == 2) m22 = 1.0;  // unused axis
  auto ev = geom::sym3_eigenvalues(m00, m01, m02, m11, m12, m22);
  if (ev[0] <= tol::span_eig)
    fail(Err::Invariant, "positive-span: normals do not positively span R^N");
  lp::LinearProgram p;
  p.n = static_cast<int>(normals.size());
  for (int d = 0; d < dim; ++d) {
    lp::Row row;
    row.a.resize(p.n);
    for (int i = 0; i < p.n; ++i) row.a[i] = normals[i][d];
    row.b = 0.0;
    p.eq.push_back(row);
  }
  p.lower.assign(p.n, 1.0);
  p.upper.assign(p.n, lp::kInf);
  if (lp::solve(p).status != lp::Status::Optimal)
    fail(Err::Invariant, "positive-span: normals do not positively span R^N");
}

VBody make_vbody(int dim, const std::vector<Vec>& pts, bool validate_extreme) {
  for (const auto& p : pts)
    for (int d = dim; d < 3; ++d)
      if (p[d] != 0.0) fail(Err::Schema, "vertex has more coordinates than dim");
  VBody canon = poly::vbody_from_points(dim, pts);
  if (validate_extreme) {
    double scale_p = 1.0;
    for (const auto& p : pts) scale_p = std::max(scale_p, norm(p));
    if (canon.vertices.size() != pts.size())
      fail(Err::Invariant, "extreme-points: vertices must be exactly the extreme points");
    for (const auto& p : pts) {
      double best = 1e300;
      for (const auto& q : canon.vertices) best = std::min(best, dist(p, q));
      if (best > tol::distinct_dir * scale_p)
        fail(Err::Invariant, "extreme-points: vertices must be exactly the extreme points");
    }
  }
  return canon;
}

}  // namespace

Body parse_body(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(Err::Schema, "body document must be an object");
  int dim = get_dim(j);
  if (!j.contains("kind") || !j["kind"].is_string()) fail(Err::Schema, "missing field 'kind'");
  std::string kind = j["kind"].get<std::string>();

  if (kind == "vpoly") {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
      fail(Err::Schema, "vpoly needs a nonempty 'vertices' array");
    std::vector<Vec> pts;
    for (const auto& e : j["vertices"]) pts.push_back(get_vec(e, dim, "vertex"));
    return make_vbody(dim, pts, true);
  }

  if (kind == "segment") {
    if (!j.contains("endpoints") || !j["endpoints"].is_array() || j["endpoints"].size() != 2)
      fail(Err::Schema, "segment needs an 'endpoints' array of two points");
    std::vector<Vec> pts = {get_vec(j["endpoints"][0], dim, "endpoint"),
                            get_vec(j["endpoints"][1], dim, "endpoint")};
    return make_vbody(dim, pts, false);
  }

  if (kind == "ball") {
    if (!j.contains("radius")) fail(Err::Schema, "ball needs a 'radius'");
    double r = get_number(j["radius"], "radius");
    if (r <= 0.0) fail(Err::Invariant, "radius must be positive");
    int m = dim == 2 ? 256 : 162;
    if (j.contains("m")) m = j["m"].get<int>();
    SphereGrid g = poly::make_grid(dim, m);
    std::vector<Vec> pts;
    for (const auto& u : g.dirs) pts.push_back(scale(u, r));
    return make_vbody(dim, pts, false);
  }

  if (kind == "hpoly") {
    if (!j.contains("normals") || !j.contains("support") || !j["normals"].is_array() ||
        !j["support"].is_array() || j["normals"].size() != j["support"].size())
      fail(Err::Schema, "hpoly needs matching 'normals' and 'support' arrays");
    HBody b;
    b.dim = dim;
    for (const auto& e : j["normals"]) b.normals.push_back(get_unit(e, dim, "normal"));
    for (const auto& e : j["support"]) b.support.push_back(get_number(e, "support number"));
    for (size_t i = 0; i < b.normals.size(); ++i)
      for (size_t k = i + 1; k < b.normals.size(); ++k)
        if (chord(b.normals[i], b.normals[k]) <= tol::distinct_dir)
          fail(Err::Invariant, "normals-distinct: facet normals must be pairwise distinct");
    check_positive_span(dim, b.normals);
    if (static_cast<int>(b.normals.size()) < dim + 1)
      fail(Err::Invariant, "facet-count: need at least dim+1 halfspaces");
    auto s = poly::intersect_halfspaces(dim, b.normals, b.support);
    if (!s.ok)
      fail(Err::Invariant, "support-consistency: halfspaces define an empty or flat body");
    double scale_h = 1.0;
    for (double v : b.support) scale_h = std::max(scale_h, std::abs(v));
    for (size_t i = 0; i < b.support.size(); ++i)
      if (std::abs(b.support[i] - s.tight_support[i]) > tol::distinct_dir * scale_h)
        fail(Err::Invariant, "support-consistency: support numbers must be tight");
    // Canonical facet order.
    std::vector<int> order(b.normals.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (dim == 2) {
      std::sort(order.begin(), order.end(),
                [&](int a, int c) { return angle2(b.normals[a]) < angle2(b.normals[c]); });
    } else {
      std::sort(order.begin(), order.end(),
                [&](int a, int c) { return b.normals[a] < b.normals[c]; });
    }
    HBody sorted;
    sorted.dim = dim;
    for (int i : order) {
      sorted.normals.push_back(b.normals[i]);
      sorted.support.push_back(b.support[i]);
    }
    return sorted;
  }

  fail(Err::Schema, "unknown body kind '" + kind + "'");
}

SphericalMeasure parse_measure(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(Err::Schema, "measure document must be an object");
  int dim = get_dim(j);
  if (!j.contains("atoms") || !j["atoms"].is_array())
    fail(Err::Schema, "measure needs an 'atoms' array");
  SphericalMeasure m;
  m.dim = dim;
  for (const auto& e : j["atoms"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("w"))
      fail(Err::Schema, "atom needs fields 'u' and 'w'");
    Atom a;
    a.u = get_unit(e["u"], dim, "atom direction");
    a.w = get_number(e["w"], "atom weight");
    // Merge directions closer than the separation threshold.
    bool merged = false;
    for (auto& prev : m.atoms) {
      if (chord(prev.u, a.u) <= tol::distinct_dir) {
        Vec mix = add(scale(prev.u, prev.w), scale(a.u, a.w));
        if (norm(mix) > 1e-12) prev.u = normalized(mix);
        prev.w += a.w;
        merged = true;
        break;
      }
    }
    if (!merged) m.atoms.push_back(a);
  }
  bool want_alexandrov = j.value("alexandrov", false);
  if (want_alexandrov) {
    for (const auto& a : m.atoms)
      if (a.w <= 0.0) fail(Err::Invariant, "positivity: Alexandrov atoms must have positive weight");
  }
  std::erase_if(m.atoms, [](const Atom& a) { return a.w == 0.0; });
  m.positive = std::all_of(m.atoms.begin(), m.atoms.end(), [](const Atom& a) { return a.w >= 0.0; });

  if (want_alexandrov) {
    Vec r = {0, 0, 0};
    double mass = 0.0;
    for (const auto& a : m.atoms) {
      r = add(r, scale(a.u, a.w));
      mass += a.w;
    }
    if (norm(r) > tol::measure_close * mass)
      fail(Err::Invariant, "closedness: atom directions weighted by mass must sum to zero");
    double m00 = 0, m01 = 0, m02 = 0, m11 = 0, m12 = 0, m22 = dim == 2 ? 1.0 : 0.0;
    for (const auto& a : m.atoms) {
      m00 += a.u[0] * a.u[0]; m01 += a.u[0] * a.u[1]; m02 += a.u[0] * a.u[2];
      m11 += a.u[1] * a.u[1]; m12 += a.u[1] * a.u[2]; m22 += dim == 2 ? 0.0 : a.u[2] * a.u[2];
    }
    auto ev = geom::sym3_eigenvalues(m00, m01, m02, m11, m12, m22);
    if (ev[0] <= tol::span_eig)
      fail(Err::Invariant, "spanning: atom directions must linearly span R^N");
    m.alexandrov = true;
  }
  return m;
}

PointMeasure parse_point_measure(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(Err::Schema, "point measure document must be an object");
  int dim = get_dim(j);
  if (!j.contains("atoms") || !j["atoms"].is_array())
    fail(Err::Schema, "point measure needs an 'atoms' array");
  PointMeasure m;
  m.dim = dim;
  for (const auto& e : j["atoms"]) {
    if (!e.is_object() || !e.contains("x") || !e.contains("w"))
      fail(Err::Schema, "point atom needs fields 'x' and 'w'");
    PointAtom a;
    a.x = get_vec(e["x"], dim, "atom location");
    a.w = get_number(e["w"], "atom weight");
    if (a.w != 0.0) m.atoms.push_back(a);
  }
  return m;
}

MaxAffineFunction parse_max_affine(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(Err::Schema, "function document must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(Err::Schema, "missing integer field 'dim'");
  int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 3) fail(Err::Schema, "'dim' must be 1, 2 or 3");
  if (!j.contains("slopes") || !j.contains("offsets") || !j["slopes"].is_array() ||
      !j["offsets"].is_array() || j["slopes"].size() != j["offsets"].size() ||
      j["slopes"].empty())
    fail(Err::Schema, "function needs matching nonempty 'slopes' and 'offsets'");
  MaxAffineFunction f;
  f.dim = dim;
  for (const auto& e : j["slopes"]) f.slopes.push_back(get_vec(e, dim, "slope"));
  for (const auto& e : j["offsets"]) f.offsets.push_back(get_number(e, "offset"));
  return f;
}

FunctionalSystem parse_functional_system(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(Err::Schema, "system document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) fail(Err::Schema, "missing field 'n'");
  FunctionalSystem sys;
  sys.n = j["n"].get<int>();
  if (sys.n < 1) fail(Err::Schema, "'n' must be positive");
  if (!j.contains("cones") || !j["cones"].is_array() || j["cones"].empty())
    fail(Err::Schema, "system needs a nonempty 'cones' array");
  for (const auto& cone : j["cones"]) {
    if (!cone.is_array() || cone.empty()) fail(Err::Schema, "each cone needs generators");
    std::vector<std::vector<double>> gens;
    for (const auto& g : cone) {
      if (!g.is_array() || static_cast<int>(g.size()) != sys.n)
        fail(Err::Schema, "generator length must equal n");
      std::vector<double> v;
      for (const auto& e : g) v.push_back(get_number(e, "generator entry"));
      if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }))
        fail(Err::Invariant, "generators must be nonzero");
      gens.push_back(v);
    }
    sys.cones.push_back(gens);
  }
  auto get_func = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_array() || static_cast<int>(j[name].size()) != sys.n)
      fail(Err::Schema, std::string("system needs '") + name + "' of length n");
    std::vector<double> v;
    for (const auto& e : j[name]) v.push_back(get_number(e, name));
    for (double x : v)
      if (x < 0.0) fail(Err::Invariant, std::string(name) + " must be a positive functional");
    return v;
  };
  sys.f = get_func("f");
  sys.g = get_func("g");
  return sys;
}

namespace {

json vec_json(const Vec& v, int dim) {
  json a = json::array();
  for (int d = 0; d < dim; ++d) a.push_back(v[d]);
  return a;
}

void dump_value(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += it.key();
        out += "\":";
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_value(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::string: {
      out += '"';
      for (char c : j.get<std::string>()) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\t': out += "\\t"; break;
          case '\r': out += "\\r"; break;
          default: out += c;
        }
      }
      out += '"';
      break;
    }
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) fail(Err::Numeric, "cannot serialize a non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += "null";
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_value(j, out);
  return out;
}

json body_json(const Body& b) {
  json j;
  if (std::holds_alternative<VBody>(b)) {
    const VBody& v = std::get<VBody>(b);
    j["dim"] = v.dim;
    j["kind"] = "vpoly";
    json verts = json::array();
    for (const auto& p : v.vertices) verts.push_back(vec_json(p, v.dim));
    j["vertices"] = verts;
  } else {
    const HBody& h = std::get<HBody>(b);
    j["dim"] = h.dim;
    j["kind"] = "hpoly";
    json normals = json::array(), support = json::array();
    for (const auto& u : h.normals) normals.push_back(vec_json(u, h.dim));
    for (double s : h.support) support.push_back(s);
    j["normals"] = normals;
    j["support"] = support;
  }
  return j;
}

json measure_json(const SphericalMeasure& m) {
  json j;
  j["dim"] = m.dim;
  j["alexandrov"] = m.alexandrov;
  j["positive"] = m.positive;
  json atoms = json::array();
  for (const auto& a : m.atoms) {
    json e;
    e["u"] = vec_json(a.u, m.dim);
    e["w"] = a.w;
    atoms.push_back(e);
  }
  j["atoms"] = atoms;
  return j;
}

std::string serialize(const Body& b) { return dump(body_json(b)); }
std::string serialize(const SphericalMeasure& m) { return dump(measure_json(m)); }

}  // namespace convexo::io
