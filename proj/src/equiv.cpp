#include "lattice3/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lattice3 {

AffineUnimodularMap AffineUnimodularMap::make(IntMatrix a, Point3 t) {
  if (a.rows() != 3 || a.cols() != 3)
    throw std::invalid_argument("affine map needs a 3x3 matrix");
  if (abs(det(a)) != 1)
    throw std::invalid_argument("affine map matrix is not unimodular");
  return {std::move(a), std::move(t)};
}

AffineUnimodularMap AffineUnimodularMap::after(
    const AffineUnimodularMap& other) const {
  return {a * other.a, apply(a, other.t) + t};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  IntMatrix inv = inverse_unimodular(a);
  Point3 shift = -apply(inv, t);
  return {std::move(inv), std::move(shift)};
}

namespace {

struct BestFrame {
  CanonicalForm form;
  Point3 origin;
  IntMatrix u;
};

BestFrame minimal_frame(const LatticePolytope3& p) {
  const auto& v = p.vertices();
  const auto& pts = p.lattice_points();
  const std::size_t nv = v.size();
  BestFrame best;
  bool have = false;
  IntMatrix edges(3, 3);
  std::vector<Point3> image(pts.size());
  for (std::size_t i0 = 0; i0 < nv; ++i0) {
    for (std::size_t i1 = 0; i1 < nv; ++i1) {
      if (i1 == i0) continue;
      const Point3 d1 = v[i1] - v[i0];
      for (std::size_t i2 = 0; i2 < nv; ++i2) {
        if (i2 == i0 || i2 == i1) continue;
        const Point3 d2 = v[i2] - v[i0];
        const Point3 c12 = cross(d1, d2);
        if (c12.is_zero()) continue;
        for (std::size_t i3 = 0; i3 < nv; ++i3) {
          if (i3 == i0 || i3 == i1 || i3 == i2) continue;
          const Point3 d3 = v[i3] - v[i0];
          if (dot(c12, d3) == 0) continue;
          for (std::size_t r = 0; r < 3; ++r) {
            edges(r, 0) = d1[r];
            edges(r, 1) = d2[r];
            edges(r, 2) = d3[r];
          }
          IntMatrix u = hnf_left(edges).u;
          for (std::size_t k = 0; k < pts.size(); ++k)
            image[k] = apply(u, pts[k] - v[i0]);
          std::sort(image.begin(), image.end());
          if (!have || image < best.form.points) {
            best.form.points = image;
            best.origin = v[i0];
            best.u = std::move(u);
            have = true;
          }
        }
      }
    }
  }
  best.form.size = pts.size();
  return best;
}

}  // namespace

CanonicalForm canonical_form(const LatticePolytope3& p) {
  return minimal_frame(p).form;
}

bool are_isomorphic(const LatticePolytope3& p, const LatticePolytope3& q) {
  if (p.size() != q.size() || p.vertices().size() != q.vertices().size())
    return false;
  return canonical_form(p) == canonical_form(q);
}

bool maps_onto(const AffineUnimodularMap& phi, const LatticePolytope3& p,
               const LatticePolytope3& q) {
  if (p.size() != q.size()) return false;
  std::vector<Point3> image;
  image.reserve(p.size());
  for (const Point3& x : p.lattice_points()) image.push_back(phi(x));
  std::sort(image.begin(), image.end());
  return image == q.lattice_points();
}

std::optional<AffineUnimodularMap> find_isomorphism(const LatticePolytope3& p,
                                                    const LatticePolytope3& q) {
  if (p.size() != q.size()) return std::nullopt;
  const BestFrame fp = minimal_frame(p);
  const BestFrame fq = minimal_frame(q);
  if (!(fp.form == fq.form)) return std::nullopt;
  // U_q (phi(x) - o_q) = U_p (x - o_p)
  const IntMatrix a = inverse_unimodular(fq.u) * fp.u;
  AffineUnimodularMap phi{a, fq.origin - apply(a, fp.origin)};
  if (!maps_onto(phi, p, q))
    throw std::logic_error("recovered isomorphism does not map P onto Q");
  return phi;
}

LatticePolytope3 apply_map(const AffineUnimodularMap& phi,
                           const LatticePolytope3& p) {
  if (phi.a.rows() != 3 || phi.a.cols() != 3 || abs(det(phi.a)) != 1)
    throw std::invalid_argument("apply_map: matrix is not unimodular");
  std::vector<Point3> image;
  for (const Point3& v : p.vertices()) image.push_back(phi(v));
  return hull(image);
}

AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng, int steps) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  IntMatrix a(3, 3);
  for (std::size_t i = 0; i < 3; ++i) a(i, perm[i]) = coin(rng) ? 1 : -1;
  std::uniform_int_distribution<std::size_t> idx(0, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    while (j == i) j = idx(rng);
    a.add_row_multiple(i, j, coin(rng) ? Int(1) : Int(-1));
  }
  std::uniform_int_distribution<long> shift(-3, 3);
  return AffineUnimodularMap::make(std::move(a),
                                   Point3(shift(rng), shift(rng), shift(rng)));
}

}  // namespace lattice3
