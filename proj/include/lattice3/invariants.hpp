#pragma once

// Lattice invariants of 3-polytopes: sublattice index, lattice width,
// h*-vector, empty tetrahedra and the certificates built from them.

#include "lattice3/geom.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lattice3 {

/// Index of the affine lattice generated by a point configuration. Points are
/// given as columns of `points` (d x n). Returns 0 when the configuration
/// does not affinely span R^d.
Int configuration_index(const IntMatrix& points);

/// Index in Z^3 of the affine lattice generated by P's lattice points, as the
/// product of the elementary divisors of the difference matrix.
Int sublattice_index(const LatticePolytope3& p);

struct WidthResult {
  Int width;
  Point3 functional;  ///< primitive, first nonzero coordinate positive
};

/// Certified lattice width. The search frames P by the vertex quadruple of
/// largest volume, reduces that frame to Hermite form, and enumerates every
/// functional whose values on the three frame edges are bounded by the best
/// width found so far.
WidthResult width(const LatticePolytope3& p);

/// Every primitive functional (up to sign) attaining the lattice width,
/// lexicographically sorted.
std::vector<Point3> width_functionals(const LatticePolytope3& p);

/// Width of P in direction f (max - min over the vertices).
Int width_along(const LatticePolytope3& p, const Point3& f);

struct HStarVector {
  std::vector<Int> coefficients;  ///< h0*, ..., hs*, trailing zeros trimmed

  std::size_t degree() const { return coefficients.size() - 1; }
  /// Coefficient i, zero past the degree.
  Int operator[](std::size_t i) const {
    return i < coefficients.size() ? coefficients[i] : Int(0);
  }
  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

HStarVector make_hstar(std::vector<Int> coefficients);
/// Renders "(1, h1, h2, h3)" up to the degree.
std::string to_string(const HStarVector& h);

/// h* from (n, n0, V). Throws std::logic_error on a negative coefficient.
HStarVector hstar(const LatticePolytope3& p);

/// Number of lattice points of tP.
Int dilate_size(const LatticePolytope3& p, long t);

/// Coefficients 0..tmax of (1 - z)^4 * sum_t size(tP) z^t, from measured
/// dilation counts.
std::vector<Int> ehrhart_numerator(const LatticePolytope3& p, long tmax);

/// Ehrhart polynomial coefficients c0..c3 (L(t) = sum c_i t^i) interpolated
/// from size(tP) at t = 0..3.
std::array<mpq_class, 4> ehrhart_polynomial(const LatticePolytope3& p);

/// Cross-checks hstar(P) against dilation counts for t = 0..tmax (tmax >= 3):
/// the measured numerator must equal h* and vanish past degree 3, and the
/// interpolated polynomial must reproduce every count and have leading
/// coefficient V/6.
bool ehrhart_check(const LatticePolytope3& p, long tmax);

struct EmptyTetrahedron {
  std::array<Point3, 4> vertices;
  Int volume;
};

/// Number of lattice points in conv{a, b, c, d}, scanning its bounding box
/// with barycentric sign tests. Stops counting once `limit` is exceeded.
std::size_t tetrahedron_lattice_point_count(const std::array<Point3, 4>& t,
                                            std::size_t limit = SIZE_MAX);

/// All 4-subsets of P's lattice points spanning an empty tetrahedron, in
/// lexicographic order of the subsets.
std::vector<EmptyTetrahedron> empty_tetrahedra(const LatticePolytope3& p);

struct PartitionCertificate {
  bool holds = false;
  Int index;
  Int volume;
  Int volume_sum;
  std::size_t tetrahedra = 0;
  bool volumes_equal_index = false;
};

/// Checks that every empty tetrahedron has volume equal to the index and that
/// their volumes add up to vol(P); the second condition certifies that they
/// tile P up to measure zero.
PartitionCertificate partition_certificate(const LatticePolytope3& p);
bool verify_partition(const LatticePolytope3& p);

/// First 4-subset (lexicographic) of lattice points with volume 1.
std::optional<EmptyTetrahedron> has_unimodular_tetrahedron(
    const LatticePolytope3& p);

struct HStarLawReport {
  HStarVector hstar;
  Int index;
  bool inequality_applies = false;  ///< index > 1
  bool inequality_holds = true;     ///< h2 >= (q - 1)(1 + h1), when it applies
  std::vector<std::size_t> gaps;    ///< zero positions below the degree
};

HStarLawReport check_hstar_laws(const LatticePolytope3& p);

struct InvariantProfile {
  std::size_t size = 0;
  std::size_t interior = 0;
  Int volume;
  Int index;
  Int width;
  Point3 width_functional;
  HStarVector hstar;
};

InvariantProfile profile(const LatticePolytope3& p);

}  // namespace lattice3
