#pragma once

// Exact geometry of lattice 3-polytopes: convex hull, facets, lattice points,
// normalized volume, projections and collinear chains.

#include "lattice3/intlin.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattice3 {

struct Point3 {
  Int x, y, z;

  Point3() = default;
  Point3(Int x_, Int y_, Int z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Point3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  const Int& operator[](std::size_t i) const { return i == 0 ? x : i == 1 ? y : z; }
  Int& operator[](std::size_t i) { return i == 0 ? x : i == 1 ? y : z; }

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

bool operator==(const Point3& a, const Point3& b);
bool operator!=(const Point3& a, const Point3& b);
/// Lexicographic on (x, y, z).
bool operator<(const Point3& a, const Point3& b);
Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a);
Point3 operator*(const Int& k, const Point3& a);
Int dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);
/// det of the 3x3 matrix with rows a, b, c.
Int det3(const Point3& a, const Point3& b, const Point3& c);
/// Signed volume of (b-a, c-a, d-a).
Int orient(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
/// gcd of the coordinates.
Int content(const Point3& a);
/// a / content(a); a must be nonzero.
Point3 primitive(const Point3& a);
bool is_primitive(const Point3& a);
/// M * p for a 3x3 matrix.
Point3 apply(const IntMatrix& m, const Point3& p);
std::string to_string(const Point3& p);

struct Point2 {
  Int x, y;
};
bool operator==(const Point2& a, const Point2& b);
bool operator<(const Point2& a, const Point2& b);

class DimensionDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-space <normal, p> + offset >= 0 with primitive inward normal.
struct Facet {
  Point3 normal;
  Int offset;

  Int eval(const Point3& p) const { return dot(normal, p) + offset; }
  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// A full-dimensional lattice polytope in R^3 with its lattice points cached.
class LatticePolytope3 {
 public:
  /// Extreme points, lexicographically sorted.
  const std::vector<Point3>& vertices() const { return vertices_; }
  /// Lexicographically sorted by (normal, offset).
  const std::vector<Facet>& facets() const { return facets_; }
  /// All lattice points, lexicographically sorted.
  const std::vector<Point3>& lattice_points() const { return lattice_points_; }
  /// Oriented triangulation of the boundary (outward orientation).
  const std::vector<std::array<Point3, 3>>& boundary() const { return boundary_; }

  std::size_t size() const { return lattice_points_.size(); }
  bool contains(const Point3& p) const;

 private:
  friend LatticePolytope3 hull(std::span<const Point3> pts);
  std::vector<Point3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Point3> lattice_points_;
  std::vector<std::array<Point3, 3>> boundary_;
};

/// Convex hull by incremental insertion with exact orientation tests.
/// Throws DimensionDeficient when the points span less than R^3 and
/// std::invalid_argument on empty input.
LatticePolytope3 hull(std::span<const Point3> pts);
LatticePolytope3 hull(std::initializer_list<Point3> pts);

/// Integer points of the region {p : f.eval(p) >= 0 for all f} inside the
/// box [lo, hi], sorted lexicographically. Scans (x, y) columns and solves
/// each facet inequality for the z-range.
std::vector<Point3> lattice_points_in_region(std::span<const Facet> facets,
                                             const Point3& lo, const Point3& hi);

const std::vector<Point3>& lattice_points(const LatticePolytope3& p);
std::vector<Point3> interior_lattice_points(const LatticePolytope3& p);
std::vector<Point3> boundary_lattice_points(const LatticePolytope3& p);
/// Euclidean volume times 3!.
Int normalized_volume(const LatticePolytope3& p);

/// conv(P cap Z^3 minus {v}); std::nullopt when that hull is not
/// 3-dimensional. Throws std::invalid_argument if v is not a lattice point.
std::optional<LatticePolytope3> remove_lattice_point(const LatticePolytope3& p,
                                                     const Point3& v);

struct PointConfiguration2 {
  std::vector<Point2> points;  ///< sorted, distinct
  std::map<Point2, int, std::less<>> fiber_counts;
};

/// Extends a primitive direction to a unimodular basis and returns the 2x3
/// projection whose kernel is the direction.
IntMatrix projection_along(const Point3& dir);

/// Image of the lattice points under projection_along(dir), with the number
/// of points in each fiber. Throws std::invalid_argument if dir is not
/// primitive.
PointConfiguration2 project_along(const LatticePolytope3& p, const Point3& dir);

struct SpikeDescriptor {
  Point3 direction;           ///< primitive, first nonzero coordinate positive
  std::vector<Point3> chain;  ///< consecutive points along direction
  long length = 0;            ///< chain.size() - 1
};

/// Longest chain of collinear lattice points; ties broken by the smallest
/// (direction, first point).
SpikeDescriptor find_spike(const LatticePolytope3& p);

}  // namespace lattice3
