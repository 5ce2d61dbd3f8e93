#include "lattice3/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lattice3 {

Int configuration_index(const IntMatrix& points) {
  const std::size_t d = points.rows();
  const std::size_t n = points.cols();
  if (n < d + 1) return 0;
  IntMatrix diff(d, n - 1);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) diff(i, j - 1) = points(i, j) - points(i, 0);
  Int index = 1;
  for (const Int& x : snf(diff).divisors()) index *= x;
  return index;
}

Int sublattice_index(const LatticePolytope3& p) {
  const auto& pts = p.lattice_points();
  IntMatrix m(3, pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = pts[j][i];
  return configuration_index(m);
}

Int width_along(const LatticePolytope3& p, const Point3& f) {
  Int lo = dot(f, p.vertices().front());
  Int hi = lo;
  for (const Point3& v : p.vertices()) {
    const Int x = dot(f, v);
    if (x < lo) lo = x;
    if (hi < x) hi = x;
  }
  return hi - lo;
}

namespace {

bool lex_positive(const Point3& d) {
  for (std::size_t i = 0; i < 3; ++i)
    if (d[i] != 0) return d[i] > 0;
  return false;
}

// Vertex quadruple of maximal volume, with its Hermite-reduced frame.
struct Frame {
  Point3 origin;
  IntMatrix u;  // U * [d1 d2 d3] = h
  IntMatrix h;
};

Frame max_volume_frame(const std::vector<Point3>& v) {
  Int best = 0;
  std::array<std::size_t, 4> idx{};
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (std::size_t c = b + 1; c < v.size(); ++c)
        for (std::size_t d = c + 1; d < v.size(); ++d) {
          const Int vol = abs(orient(v[a], v[b], v[c], v[d]));
          if (vol > best) {
            best = vol;
            idx = {a, b, c, d};
          }
        }
  IntMatrix edges(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const Point3 e = v[idx[j + 1]] - v[idx[0]];
    for (std::size_t i = 0; i < 3; ++i) edges(i, j) = e[i];
  }
  HnfResult r = hnf_left(edges);
  return {v[idx[0]], std::move(r.u), std::move(r.h)};
}

struct WidthSearch {
  Int best;
  std::vector<Point3> optimal;  // original coordinates, lex-positive
};

WidthSearch search_width(const LatticePolytope3& p) {
  const Frame frame = max_volume_frame(p.vertices());
  std::vector<Point3> local;
  for (const Point3& v : p.vertices()) local.push_back(apply(frame.u, v - frame.origin));

  auto local_width = [&](const Point3& f) {
    Int lo = dot(f, local.front());
    Int hi = lo;
    for (const Point3& q : local) {
      const Int x = dot(f, q);
      if (x < lo) lo = x;
      if (hi < x) hi = x;
    }
    return Int(hi - lo);
  };

  Int best = local_width(Point3(1, 0, 0));
  for (const Point3& e : {Point3(0, 1, 0), Point3(0, 0, 1)}) {
    const Int w = local_width(e);
    if (w < best) best = w;
  }

  // g_j = <f, H e_j> is bounded by the width of f, and H is lower triangular,
  // so the admissible f form a triangular box.
  const IntMatrix& h = frame.h;
  std::vector<std::pair<Int, Point3>> found;
  for (Int c = 0; c <= floor_div(best, h(2, 2)); ++c) {
    const Int g2c = h(2, 1) * c;
    const Int b_lo = c == 0 ? Int(0) : ceil_div(-best - g2c, h(1, 1));
    for (Int b = b_lo; b <= floor_div(best - g2c, h(1, 1)); ++b) {
      const Int g1c = h(1, 0) * b + h(2, 0) * c;
      const Int a_lo =
          (c == 0 && b == 0) ? Int(1) : ceil_div(-best - g1c, h(0, 0));
      for (Int a = a_lo; a <= floor_div(best - g1c, h(0, 0)); ++a) {
        const Point3 f(a, b, c);
        if (!is_primitive(f)) continue;
        const Int w = local_width(f);
        if (w > best) continue;
        best = w;
        found.emplace_back(w, f);
      }
    }
  }

  WidthSearch out{best, {}};
  const IntMatrix ut = frame.u.transposed();
  for (const auto& [w, f] : found) {
    if (w != best) continue;
    Point3 g = apply(ut, f);
    if (!lex_positive(g)) g = -g;
    out.optimal.push_back(g);
  }
  // The frame's coordinate functionals lie in the searched box.
  if (out.optimal.empty())
    throw std::logic_error("width search found no optimal functional");
  std::sort(out.optimal.begin(), out.optimal.end());
  out.optimal.erase(std::unique(out.optimal.begin(), out.optimal.end()),
                    out.optimal.end());
  return out;
}

}  // namespace

WidthResult width(const LatticePolytope3& p) {
  WidthSearch s = search_width(p);
  return {s.best, s.optimal.front()};
}

std::vector<Point3> width_functionals(const LatticePolytope3& p) {
  return search_width(p).optimal;
}

HStarVector make_hstar(std::vector<Int> coefficients) {
  while (coefficients.size() > 1 && coefficients.back() == 0)
    coefficients.pop_back();
  return HStarVector{std::move(coefficients)};
}

std::string to_string(const HStarVector& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.coefficients.size(); ++i)
    os << (i ? ", " : "") << h.coefficients[i];
  os << ')';
  return os.str();
}

HStarVector hstar(const LatticePolytope3& p) {
  const Int n = static_cast<long>(p.size());
  const Int n0 = static_cast<long>(interior_lattice_points(p).size());
  const Int vol = normalized_volume(p);
  std::vector<Int> h{1, n - 4, vol + 3 - n0 - n, n0};
  for (const Int& x : h)
    if (x < 0)
      throw std::logic_error("negative h* coefficient: inconsistent invariants");
  return make_hstar(std::move(h));
}

Int dilate_size(const LatticePolytope3& p, long t) {
  if (t < 0) throw std::invalid_argument("negative dilation factor");
  if (t == 0) return 1;
  std::vector<Facet> facets = p.facets();
  for (Facet& f : facets) f.offset *= t;
  Point3 lo = p.vertices().front(), hi = lo;
  for (const Point3& v : p.vertices())
    for (std::size_t k = 0; k < 3; ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (hi[k] < v[k]) hi[k] = v[k];
    }
  const Int tt = t;
  return static_cast<long>(
      lattice_points_in_region(facets, tt * lo, tt * hi).size());
}

std::vector<Int> ehrhart_numerator(const LatticePolytope3& p, long tmax) {
  std::vector<Int> sizes;
  for (long t = 0; t <= tmax; ++t) sizes.push_back(dilate_size(p, t));
  static const long binom4[] = {1, 4, 6, 4, 1};
  std::vector<Int> out;
  for (long i = 0; i <= tmax; ++i) {
    Int c = 0;
    for (long j = 0; j <= std::min(i, 4L); ++j)
      c += (j % 2 ? -binom4[j] : binom4[j]) * sizes[i - j];
    out.push_back(c);
  }
  return out;
}

std::array<mpq_class, 4> ehrhart_polynomial(const LatticePolytope3& p) {
  std::array<Int, 4> l;
  for (long t = 0; t < 4; ++t) l[t] = dilate_size(p, t);
  // Forward differences at 0, then the Newton basis expanded into monomials.
  const Int d0 = l[0];
  const Int d1 = l[1] - l[0];
  const Int d2 = l[2] - 2 * l[1] + l[0];
  const Int d3 = l[3] - 3 * l[2] + 3 * l[1] - l[0];
  auto frac = [](const Int& n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  };
  return {mpq_class(d0), d1 - frac(d2, 2) + frac(d3, 3),
          frac(d2, 2) - frac(d3, 2), frac(d3, 6)};
}

bool ehrhart_check(const LatticePolytope3& p, long tmax) {
  if (tmax < 3) throw std::invalid_argument("ehrhart_check needs tmax >= 3");
  HStarVector h;
  try {
    h = hstar(p);
  } catch (const std::logic_error&) {
    return false;
  }
  const std::vector<Int> num = ehrhart_numerator(p, tmax);
  for (long i = 0; i <= tmax; ++i) {
    const Int expected = i <= 3 ? h[static_cast<std::size_t>(i)] : Int(0);
    if (num[i] != expected) return false;
  }
  const auto poly = ehrhart_polynomial(p);
  mpq_class lead(normalized_volume(p), 6);
  lead.canonicalize();
  if (poly[3] != lead) return false;
  for (long t = 0; t <= tmax; ++t) {
    const mpq_class tt(t);
    const mpq_class value = poly[0] + tt * (poly[1] + tt * (poly[2] + tt * poly[3]));
    if (value != mpq_class(dilate_size(p, t))) return false;
  }
  return true;
}

namespace {

using Small = __int128;

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
Vec3<T> sub(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class T>
std::size_t count_tetrahedron(const std::array<Vec3<T>, 4>& v, std::size_t limit) {
  std::array<Vec3<T>, 4> normal;
  std::array<T, 4> offset;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3<T>& a = v[(i + 1) % 4];
    const Vec3<T>& b = v[(i + 2) % 4];
    const Vec3<T>& c = v[(i + 3) % 4];
    const Vec3<T> e1 = sub(b, a), e2 = sub(c, a);
    Vec3<T> n{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
              e1[0] * e2[1] - e1[1] * e2[0]};
    T off = -(n[0] * a[0] + n[1] * a[1] + n[2] * a[2]);
    // Orient each face plane so that the opposite vertex is on the >= 0 side.
    if (n[0] * v[i][0] + n[1] * v[i][1] + n[2] * v[i][2] + off < 0) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    normal[i] = n;
    offset[i] = off;
  }
  Vec3<T> lo = v[0], hi = v[0];
  for (const auto& p : v)
    for (std::size_t k = 0; k < 3; ++k) {
      if (p[k] < lo[k]) lo[k] = p[k];
      if (hi[k] < p[k]) hi[k] = p[k];
    }
  std::size_t count = 0;
  for (T x = lo[0]; x <= hi[0]; ++x)
    for (T y = lo[1]; y <= hi[1]; ++y)
      for (T z = lo[2]; z <= hi[2]; ++z) {
        bool inside = true;
        for (std::size_t i = 0; i < 4 && inside; ++i)
          inside = normal[i][0] * x + normal[i][1] * y + normal[i][2] * z +
                       offset[i] >= 0;
        if (inside && ++count > limit) return count;
      }
  return count;
}

bool fits_small(const Int& x) {
  static const Int bound = Int(1) << 30;
  return abs(x) < bound;
}

}  // namespace

std::size_t tetrahedron_lattice_point_count(const std::array<Point3, 4>& t,
                                            std::size_t limit) {
  if (orient(t[0], t[1], t[2], t[3]) == 0)
    throw std::invalid_argument("degenerate tetrahedron");
  bool small = true;
  for (const Point3& p : t)
    for (std::size_t k = 0; k < 3; ++k) small = small && fits_small(p[k]);
  if (small) {
    std::array<Vec3<Small>, 4> v;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 3; ++k) v[i][k] = t[i][k].get_si();
    return count_tetrahedron(v, limit);
  }
  std::array<Vec3<Int>, 4> v;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 3; ++k) v[i][k] = t[i][k];
  return count_tetrahedron(v, limit);
}

std::vector<EmptyTetrahedron> empty_tetrahedra(const LatticePolytope3& p) {
  const auto& pts = p.lattice_points();
  const std::size_t n = pts.size();
  std::vector<EmptyTetrahedron> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const Int vol = abs(orient(pts[a], pts[b], pts[c], pts[d]));
          if (vol == 0) continue;
          const std::array<Point3, 4> t{pts[a], pts[b], pts[c], pts[d]};
          if (tetrahedron_lattice_point_count(t, 4) == 4) out.push_back({t, vol});
        }
  return out;
}

PartitionCertificate partition_certificate(const LatticePolytope3& p) {
  PartitionCertificate c;
  c.index = sublattice_index(p);
  c.volume = normalized_volume(p);
  c.volume_sum = 0;
  c.volumes_equal_index = true;
  for (const auto& t : empty_tetrahedra(p)) {
    ++c.tetrahedra;
    c.volume_sum += t.volume;
    if (t.volume != c.index) c.volumes_equal_index = false;
  }
  c.holds = c.volumes_equal_index && c.volume_sum == c.volume;
  return c;
}

bool verify_partition(const LatticePolytope3& p) {
  return partition_certificate(p).holds;
}

std::optional<EmptyTetrahedron> has_unimodular_tetrahedron(
    const LatticePolytope3& p) {
  const auto& pts = p.lattice_points();
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (abs(orient(pts[a], pts[b], pts[c], pts[d])) == 1)
            return EmptyTetrahedron{{pts[a], pts[b], pts[c], pts[d]}, 1};
  return std::nullopt;
}

HStarLawReport check_hstar_laws(const LatticePolytope3& p) {
  HStarLawReport r;
  r.hstar = hstar(p);
  r.index = sublattice_index(p);
  r.inequality_applies = r.index > 1;
  if (r.inequality_applies)
    r.inequality_holds = r.hstar[2] >= (r.index - 1) * (1 + r.hstar[1]);
  for (std::size_t i = 0; i < r.hstar.degree(); ++i)
    if (r.hstar[i] == 0) r.gaps.push_back(i);
  return r;
}

InvariantProfile profile(const LatticePolytope3& p) {
  InvariantProfile r;
  r.size = p.size();
  r.interior = interior_lattice_points(p).size();
  r.volume = normalized_volume(p);
  r.index = sublattice_index(p);
  const WidthResult w = width(p);
  r.width = w.width;
  r.width_functional = w.functional;
  r.hstar = hstar(p);
  return r;
}

}  // namespace lattice3
