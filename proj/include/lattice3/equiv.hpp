#pragma once

// Unimodular equivalence of lattice 3-polytopes.

#include "lattice3/geom.hpp"

#include <optional>
#include <random>
#include <vector>

namespace lattice3 {

/// p -> A p + t with A integral and |det A| = 1.
struct AffineUnimodularMap {
  IntMatrix a = IntMatrix::identity(3);
  Point3 t{0, 0, 0};

  static AffineUnimodularMap identity() { return {}; }
  /// Throws std::invalid_argument unless a is 3x3 with |det| = 1.
  static AffineUnimodularMap make(IntMatrix a, Point3 t = {0, 0, 0});

  Point3 operator()(const Point3& p) const { return apply(a, p) + t; }
  /// (this o other)(p) = this(other(p))
  AffineUnimodularMap after(const AffineUnimodularMap& other) const;
  AffineUnimodularMap inverse() const;
};

/// Lex-least frame image of the lattice points; equal for two polytopes iff
/// they are unimodularly equivalent.
struct CanonicalForm {
  std::vector<Point3> points;
  std::size_t size = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.size == b.size && a.points == b.points;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.points < b.points;
  }
};

/// For every vertex v0 and ordered triple of further vertices whose
/// differences d1, d2, d3 are independent, takes the unique unimodular U with
/// U [d1 d2 d3] in left Hermite form and the sorted set {U (p - v0)}. Returns
/// the lexicographically least such set.
CanonicalForm canonical_form(const LatticePolytope3& p);

bool are_isomorphic(const LatticePolytope3& p, const LatticePolytope3& q);

/// A map sending P's lattice points onto Q's, recovered from the two minimal
/// frames; verified by application before it is returned.
std::optional<AffineUnimodularMap> find_isomorphism(const LatticePolytope3& p,
                                                    const LatticePolytope3& q);

/// Hull of the mapped vertices.
LatticePolytope3 apply_map(const AffineUnimodularMap& phi,
                           const LatticePolytope3& p);

/// True if phi maps the lattice points of p exactly onto those of q.
bool maps_onto(const AffineUnimodularMap& phi, const LatticePolytope3& p,
               const LatticePolytope3& q);

/// Random affine unimodular map: a signed permutation composed with `steps`
/// elementary shears of magnitude 1, plus a translation in [-3, 3]^3.
AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng, int steps = 5);

}  // namespace lattice3
