#include "lattice3/geom.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace lattice3 {

bool operator==(const Point3& a, const Point3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}
bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }

bool operator<(const Point3& a, const Point3& b) {
  if (int c = cmp(a.x, b.x)) return c < 0;
  if (int c = cmp(a.y, b.y)) return c < 0;
  return a.z < b.z;
}

Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
Point3 operator*(const Int& k, const Point3& a) {
  return {k * a.x, k * a.y, k * a.z};
}

Int dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Int det3(const Point3& a, const Point3& b, const Point3& c) {
  return dot(a, cross(b, c));
}

Int orient(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return det3(b - a, c - a, d - a);
}

Int content(const Point3& a) { return gcd(gcd(a.x, a.y), a.z); }

Point3 primitive(const Point3& a) {
  const Int g = content(a);
  if (g == 0) throw std::invalid_argument("primitive of zero vector");
  return {a.x / g, a.y / g, a.z / g};
}

bool is_primitive(const Point3& a) { return content(a) == 1; }

Point3 apply(const IntMatrix& m, const Point3& p) {
  return {m(0, 0) * p.x + m(0, 1) * p.y + m(0, 2) * p.z,
          m(1, 0) * p.x + m(1, 1) * p.y + m(1, 2) * p.z,
          m(2, 0) * p.x + m(2, 1) * p.y + m(2, 2) * p.z};
}

std::string to_string(const Point3& p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
  return os.str();
}

bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}
bool operator<(const Point2& a, const Point2& b) {
  if (int c = cmp(a.x, b.x)) return c < 0;
  return a.y < b.y;
}

bool LatticePolytope3::contains(const Point3& p) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.eval(p) >= 0; });
}

namespace {

struct Tri {
  std::size_t a, b, c;
};

bool facet_less(const Facet& l, const Facet& r) {
  if (l.normal != r.normal) return l.normal < r.normal;
  return l.offset < r.offset;
}

bool lex_positive(const Point3& d) {
  for (std::size_t i = 0; i < 3; ++i)
    if (d[i] != 0) return d[i] > 0;
  return false;
}

}  // namespace

LatticePolytope3 hull(std::initializer_list<Point3> pts) {
  return hull(std::span<const Point3>(pts.begin(), pts.size()));
}

LatticePolytope3 hull(std::span<const Point3> input) {
  if (input.empty()) throw std::invalid_argument("hull of empty point set");
  std::vector<Point3> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Initial non-degenerate tetrahedron.
  std::size_t i1 = 1;
  while (i1 < pts.size() && pts[i1] == pts[0]) ++i1;
  if (i1 >= pts.size()) throw DimensionDeficient("points span a point");
  std::size_t i2 = 1;
  while (i2 < pts.size() && cross(pts[i1] - pts[0], pts[i2] - pts[0]).is_zero())
    ++i2;
  if (i2 >= pts.size()) throw DimensionDeficient("points are collinear");
  std::size_t i3 = 1;
  while (i3 < pts.size() && orient(pts[0], pts[i1], pts[i2], pts[i3]) == 0) ++i3;
  if (i3 >= pts.size()) throw DimensionDeficient("points are coplanar");

  std::vector<Tri> faces;
  std::vector<bool> alive;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c,
                      std::size_t inside) {
    if (orient(pts[a], pts[b], pts[c], pts[inside]) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
    alive.push_back(true);
  };
  add_face(0, i1, i2, i3);
  add_face(0, i1, i3, i2);
  add_face(0, i2, i3, i1);
  add_face(i1, i2, i3, 0);

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (p == 0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (alive[f] && orient(pts[faces[f].a], pts[faces[f].b], pts[faces[f].c],
                             pts[p]) > 0)
        visible.push_back(f);
    if (visible.empty()) continue;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f : visible) {
      const Tri& t = faces[f];
      edges.insert({t.a, t.b});
      edges.insert({t.b, t.c});
      edges.insert({t.c, t.a});
    }
    for (std::size_t f : visible) alive[f] = false;
    for (const auto& [u, v] : edges) {
      if (edges.count({v, u})) continue;
      faces.push_back({u, v, p});
      alive.push_back(true);
    }
  }

  LatticePolytope3 out;
  std::vector<Facet> facets;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!alive[f]) continue;
    const Tri& t = faces[f];
    out.boundary_.push_back({pts[t.a], pts[t.b], pts[t.c]});
    const Point3 inward =
        -primitive(cross(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a]));
    facets.push_back({inward, -dot(inward, pts[t.a])});
  }
  std::sort(facets.begin(), facets.end(), facet_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  out.facets_ = std::move(facets);

  std::set<Point3> candidates;
  for (const auto& tri : out.boundary_) candidates.insert(tri.begin(), tri.end());
  for (const Point3& c : candidates) {
    std::vector<const Point3*> normals;
    for (const Facet& f : out.facets_)
      if (f.eval(c) == 0) normals.push_back(&f.normal);
    bool extreme = false;
    for (std::size_t a = 0; a < normals.size() && !extreme; ++a)
      for (std::size_t b = a + 1; b < normals.size() && !extreme; ++b)
        for (std::size_t d = b + 1; d < normals.size() && !extreme; ++d)
          extreme = det3(*normals[a], *normals[b], *normals[d]) != 0;
    if (extreme) out.vertices_.push_back(c);
  }

  Point3 lo = out.vertices_.front(), hi = out.vertices_.front();
  for (const Point3& v : out.vertices_)
    for (std::size_t k = 0; k < 3; ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (hi[k] < v[k]) hi[k] = v[k];
    }
  out.lattice_points_ = lattice_points_in_region(out.facets_, lo, hi);
  return out;
}

std::vector<Point3> lattice_points_in_region(std::span<const Facet> facets,
                                             const Point3& lo, const Point3& hi) {
  std::vector<Point3> out;
  Int zlo, zhi, base, bound;
  for (Int x = lo.x; x <= hi.x; ++x) {
    for (Int y = lo.y; y <= hi.y; ++y) {
      zlo = lo.z;
      zhi = hi.z;
      for (const Facet& f : facets) {
        base = f.normal.x * x + f.normal.y * y + f.offset;
        const int s = sgn(f.normal.z);
        if (s > 0) {
          bound = ceil_div(-base, f.normal.z);
          if (zlo < bound) zlo = bound;
        } else if (s < 0) {
          bound = floor_div(base, -f.normal.z);
          if (bound < zhi) zhi = bound;
        } else if (base < 0) {
          zhi = zlo - 1;
        }
        if (zhi < zlo) break;
      }
      for (Int z = zlo; z <= zhi; ++z) out.emplace_back(x, y, z);
    }
  }
  return out;
}

const std::vector<Point3>& lattice_points(const LatticePolytope3& p) {
  return p.lattice_points();
}

std::vector<Point3> interior_lattice_points(const LatticePolytope3& p) {
  std::vector<Point3> out;
  for (const Point3& q : p.lattice_points())
    if (std::all_of(p.facets().begin(), p.facets().end(),
                    [&](const Facet& f) { return f.eval(q) > 0; }))
      out.push_back(q);
  return out;
}

std::vector<Point3> boundary_lattice_points(const LatticePolytope3& p) {
  std::vector<Point3> out;
  for (const Point3& q : p.lattice_points())
    if (std::any_of(p.facets().begin(), p.facets().end(),
                    [&](const Facet& f) { return f.eval(q) == 0; }))
      out.push_back(q);
  return out;
}

Int normalized_volume(const LatticePolytope3& p) {
  const Point3& apex = p.vertices().front();
  Int total = 0;
  for (const auto& t : p.boundary()) total += abs(orient(apex, t[0], t[1], t[2]));
  return total;
}

std::optional<LatticePolytope3> remove_lattice_point(const LatticePolytope3& p,
                                                     const Point3& v) {
  const auto& pts = p.lattice_points();
  if (!std::binary_search(pts.begin(), pts.end(), v))
    throw std::invalid_argument("remove_lattice_point: " + to_string(v) +
                                " is not a lattice point of the polytope");
  std::vector<Point3> rest;
  rest.reserve(pts.size() - 1);
  for (const Point3& q : pts)
    if (q != v) rest.push_back(q);
  try {
    return hull(rest);
  } catch (const DimensionDeficient&) {
    return std::nullopt;
  }
}

IntMatrix projection_along(const Point3& dir) {
  if (!is_primitive(dir))
    throw std::invalid_argument("projection direction must be primitive");
  IntMatrix col(3, 1);
  for (std::size_t k = 0; k < 3; ++k) col(k, 0) = dir[k];
  // U * dir = (0, 0, 1): the first two rows of U vanish on dir.
  const IntMatrix u = hnf_left(col).u;
  IntMatrix proj(2, 3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) proj(r, c) = u(r, c);
  return proj;
}

PointConfiguration2 project_along(const LatticePolytope3& p, const Point3& dir) {
  const IntMatrix proj = projection_along(dir);
  PointConfiguration2 out;
  for (const Point3& q : p.lattice_points()) {
    Point2 image{proj(0, 0) * q.x + proj(0, 1) * q.y + proj(0, 2) * q.z,
                 proj(1, 0) * q.x + proj(1, 1) * q.y + proj(1, 2) * q.z};
    ++out.fiber_counts[image];
  }
  for (const auto& [pt, count] : out.fiber_counts) out.points.push_back(pt);
  return out;
}

SpikeDescriptor find_spike(const LatticePolytope3& p) {
  const auto& pts = p.lattice_points();
  SpikeDescriptor best;
  std::set<std::pair<Point3, Point3>> seen;  // (direction, first point)
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point3 d = primitive(pts[j] - pts[i]);
      if (!lex_positive(d)) d = -d;
      std::vector<Point3> chain;
      for (const Point3& r : pts)
        if (cross(r - pts[i], d).is_zero()) chain.push_back(r);
      if (!seen.insert({d, chain.front()}).second) continue;
      bool better = best.chain.empty() || chain.size() > best.chain.size();
      if (!better && chain.size() == best.chain.size())
        better = std::tie(d, chain.front()) <
                 std::tie(best.direction, best.chain.front());
      if (better) {
        best.direction = d;
        best.chain = std::move(chain);
      }
    }
  }
  best.length = static_cast<long>(best.chain.size()) - 1;
  return best;
}

}  // namespace lattice3
