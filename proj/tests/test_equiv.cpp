#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lattice3/catalog.hpp"
#include "lattice3/equiv.hpp"
#include "oracles.hpp"

#include <map>
#include <random>
#include <set>

using namespace lattice3;

namespace {

AffineUnimodularMap linear(std::initializer_list<std::initializer_list<long>> rows,
                           Point3 t = {0, 0, 0}) {
  IntMatrix a(3, 3);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) a(i, j++) = x;
    ++i;
  }
  return AffineUnimodularMap::make(a, t);
}

LatticePolytope3 mk(Tag tag, std::vector<long> params = {}) {
  return make({tag, std::move(params)});
}

}  // namespace

TEST_CASE("affine unimodular maps") {
  const auto phi = linear({{1, 1, 0}, {0, 1, 0}, {0, 0, -1}}, Point3(1, 2, 3));
  CHECK(phi(Point3(1, 1, 1)) == Point3(3, 3, 2));
  const auto back = phi.inverse();
  CHECK(back(phi(Point3(4, -7, 2))) == Point3(4, -7, 2));
  CHECK(phi.after(back)(Point3(5, 5, 5)) == Point3(5, 5, 5));
  CHECK_THROWS_AS(AffineUnimodularMap::make(IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AffineUnimodularMap::make(IntMatrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("redundant parameters give isomorphic polytopes") {
  // F1(a,b) and F1(-b,-a): (x,y,z) -> (y,x,-z).
  const auto swap = linear({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  for (long a = -3; a <= -1; ++a)
    for (long b = 1; b <= 4; ++b) {
      const auto p = mk(Tag::F1, {a, b});
      REQUIRE(maps_onto(swap, p, mk(Tag::F1, {-b, -a})));
      REQUIRE(canonical_form(p) == canonical_form(mk(Tag::F1, {-b, -a})));
    }

  // F2 and F4 are symmetric under (x,y,z) -> (x,y,-x-y-z).
  const auto flip = linear({{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}});
  for (Tag fam : {Tag::F2, Tag::F4})
    for (const CatalogEntry& e : family_members(fam, 9, false)) {
      const auto& ab = e.params;
      if (ab[0] == 0) continue;
      const auto q = mk(fam, {-ab[1], -ab[0]});
      REQUIRE(maps_onto(flip, make(e), q));
    }

  // F3(a,b,k) and F3(k-b,k-a,k): (x,y,z) -> (y,-x,k+y(k-1)-z).
  for (const CatalogEntry& e : family_members(Tag::F3, 9, false)) {
    const long a = e.params[0], b = e.params[1], k = e.params[2];
    if (k == a) continue;
    const auto psi = linear({{0, 1, 0}, {-1, 0, 0}, {0, k - 1, -1}}, Point3(0, 0, k));
    REQUIRE_MESSAGE(maps_onto(psi, make(e), mk(Tag::F3, {k - b, k - a, k})),
                    label(e));
  }
}

TEST_CASE("coincidences between families") {
  CHECK(are_isomorphic(mk(Tag::F2, {0, 2}), mk(Tag::F4, {0, 1})));
  CHECK(are_isomorphic(mk(Tag::F2, {-1, 1}), mk(Tag::F3, {0, 1, 0})));
  const auto m = linear({{-1, 1, -1}, {0, 0, 1}, {1, 0, 0}}, Point3(1, -1, 0));
  CHECK(maps_onto(m, mk(Tag::F3, {0, 2, 1}), mk(Tag::F4, {-1, 1})));
  CHECK(are_isomorphic(mk(Tag::F3, {0, 2, 1}), mk(Tag::F4, {-1, 1})));
}

TEST_CASE("distinct exceptions of size eight") {
  CHECK_FALSE(are_isomorphic(mk(Tag::E821), mk(Tag::E822)));
  CHECK_FALSE(are_isomorphic(mk(Tag::E821), mk(Tag::E823)));
  CHECK_FALSE(are_isomorphic(mk(Tag::E822), mk(Tag::E823)));
  CHECK_FALSE(find_isomorphism(mk(Tag::E821), mk(Tag::E822)));
  CHECK_FALSE(are_isomorphic(mk(Tag::E511), mk(Tag::E512)));
}

TEST_CASE("automorphisms of family members") {
  // Swaps (-1,-1,1) and (3,-1,-1) in F4.
  const auto f4 = linear({{-1, -2, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(f4(Point3(-1, -1, 1)) == Point3(3, -1, -1));
  CHECK(f4(Point3(3, -1, -1)) == Point3(-1, -1, 1));
  for (long b = 1; b <= 4; ++b) {
    const auto p = mk(Tag::F4, {0, b});
    CHECK(apply_map(f4, p).lattice_points() == p.lattice_points());
  }
  for (long k = 0; k <= 3; ++k) {
    const auto g = linear({{0, -1, 0}, {-1, 0, 0}, {-(k - 1), -(k - 1), 1}});
    for (const CatalogEntry& e : family_members(Tag::F3, 8, false))
      if (e.params[2] == k)
        CHECK(apply_map(g, make(e)).lattice_points() == make(e).lattice_points());
  }
}

TEST_CASE("canonical form is stable under random maps") {
  std::mt19937_64 rng(41);
  for (const CatalogEntry& e : catalog_entries(10)) {
    const auto p = make(e);
    const CanonicalForm c = canonical_form(p);
    REQUIRE(c.size == p.size());
    for (int i = 0; i < 100; ++i) {
      const auto q = apply_map(random_unimodular_map(rng, 1 + i % 8), p);
      REQUIRE_MESSAGE(canonical_form(q) == c, label(e));
    }
  }
}

TEST_CASE("recovered isomorphisms are sound") {
  std::mt19937_64 rng(42);
  for (const CatalogEntry& e : catalog_entries(9)) {
    const auto p = make(e);
    for (int i = 0; i < 5; ++i) {
      const auto q = apply_map(random_unimodular_map(rng), p);
      const auto phi = find_isomorphism(p, q);
      REQUIRE(phi);
      REQUIRE(std::abs(static_cast<long>(det(phi->a).get_si())) == 1);
      REQUIRE(maps_onto(*phi, p, q));
      REQUIRE(maps_onto(phi->inverse(), q, p));
    }
  }
}

TEST_CASE("canonical forms separate non-isomorphic polytopes") {
  // Two polytopes with equal canonical forms must differ by a map; two with
  // different h* or index must have different forms.
  const auto entries = catalog_entries(9);
  std::map<CanonicalForm, CatalogEntry> seen;
  for (const CatalogEntry& e : entries) {
    const auto [it, fresh] = seen.emplace(canonical_form(make(e)), e);
    REQUIRE_MESSAGE(fresh, label(e) << " duplicates " << label(it->second));
  }
}

TEST_CASE("no unlisted coincidences among all family tuples") {
  // Every raw parameter tuple of sizes 5..8, grouped by canonical form. Any
  // two tuples in a group must be related by a listed redundancy or
  // coincidence.
  auto key = [](const CatalogEntry& e) {
    CatalogEntry k = e;
    const long a = e.params[0], b = e.params[1];
    switch (e.tag) {
      case Tag::F1:
      case Tag::F2:
      case Tag::F4:
        if (-a > b) k.params = {-b, -a};
        break;
      case Tag::F3: {
        const long kk = e.params[2];
        if (-a > b - kk) k.params = {kk - b, kk - a, kk};
        break;
      }
      default:
        break;
    }
    return k;
  };
  const std::set<std::pair<CatalogEntry, CatalogEntry>> listed = {
      {{Tag::F2, {0, 2}}, {Tag::F4, {0, 1}}},
      {{Tag::F2, {-1, 1}}, {Tag::F3, {0, 1, 0}}},
      {{Tag::F3, {0, 2, 1}}, {Tag::F4, {-1, 1}}},
  };
  for (std::size_t n = 5; n <= 8; ++n) {
    std::map<CanonicalForm, std::set<CatalogEntry>> groups;
    for (Tag fam : kFamilies)
      for (const CatalogEntry& e : family_members(fam, n, false))
        groups[canonical_form(make(e))].insert(key(e));
    for (const auto& [form, members] : groups) {
      if (members.size() == 1) continue;
      REQUIRE(members.size() == 2);
      const std::pair<CatalogEntry, CatalogEntry> pr{*members.begin(),
                                                     *members.rbegin()};
      REQUIRE_MESSAGE(listed.count(pr) == 1,
                      label(pr.first) << " ~ " << label(pr.second));
    }
  }
}

TEST_CASE("apply_map rejects non-unimodular input") {
  AffineUnimodularMap bad;
  bad.a(0, 0) = 2;
  CHECK_THROWS_AS(apply_map(bad, mk(Tag::E55)), std::invalid_argument);
}
