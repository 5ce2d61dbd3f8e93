#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lattice3/catalog.hpp"
#include "lattice3/equiv.hpp"
#include "lattice3/invariants.hpp"
#include "oracles.hpp"

#include <random>

using namespace lattice3;

namespace {

const LatticePolytope3 kUnit =
    hull({Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)});

LatticePolytope3 cube() {
  std::vector<Point3> pts;
  for (long i = 0; i < 8; ++i) pts.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  return hull(pts);
}

HStarVector hv(std::initializer_list<long> xs) {
  std::vector<Int> c;
  for (long x : xs) c.emplace_back(x);
  return make_hstar(c);
}

// Random hulls with at most max_size lattice points.
std::vector<LatticePolytope3> random_polytopes(std::uint64_t seed, int count,
                                               long r, std::size_t max_size = 30) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> c(-r, r);
  std::vector<LatticePolytope3> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Point3> pts;
    for (int k = 0; k < 4 + static_cast<int>(out.size()) % 5; ++k)
      pts.emplace_back(c(rng), c(rng), c(rng));
    try {
      LatticePolytope3 p = hull(pts);
      if (p.size() <= max_size) out.push_back(std::move(p));
    } catch (const DimensionDeficient&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sublattice index of named polytopes") {
  CHECK(sublattice_index(kUnit) == 1);
  CHECK(sublattice_index(make({Tag::T, {1, 2, 1, 1}})) == 2);
  CHECK(sublattice_index(make({Tag::T, {2, 7, 3, 2}})) == 7);
  CHECK(sublattice_index(make({Tag::E55, {}})) == 5);
  CHECK(sublattice_index(make({Tag::E63, {}})) == 3);
  CHECK(sublattice_index(make({Tag::F1, {-2, 3}})) == 3);
  CHECK(sublattice_index(make({Tag::F3, {-1, 3, 2}})) == 2);
  CHECK(sublattice_index(make({Tag::E511, {}})) == 1);
}

TEST_CASE("configuration index of degenerate configurations") {
  // Coplanar points do not span.
  IntMatrix flat{{0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}};
  CHECK(configuration_index(flat) == 0);
  IntMatrix few{{0, 1}, {0, 0}, {0, 0}};
  CHECK(configuration_index(few) == 0);
}

TEST_CASE("index agrees with the gcd of tetrahedron volumes") {
  for (const CatalogEntry& e : catalog_entries(10)) {
    const auto p = make(e);
    REQUIRE(sublattice_index(p) == oracle::index_by_determinants(p.lattice_points()));
    if (e.tag != Tag::T) REQUIRE(sublattice_index(p) == expected_index(e.tag));
    else REQUIRE(sublattice_index(p) == e.params[1]);
  }
  for (const auto& p : random_polytopes(31, 40, 3))
    REQUIRE(sublattice_index(p) == oracle::index_by_determinants(p.lattice_points()));
}

TEST_CASE("index divides the index of every subconfiguration") {
  for (const CatalogEntry& e : catalog_entries(9)) {
    const auto p = make(e);
    const Int q = sublattice_index(p);
    for (const Point3& v : p.vertices()) {
      const auto sub = remove_lattice_point(p, v);
      if (!sub) continue;
      const Int qs = sublattice_index(*sub);
      REQUIRE(qs % q == 0);
      // Deleting a vertex of a non-spanning polytope keeps the index.
      if (q > 1) REQUIRE(qs == q);
    }
  }
}

TEST_CASE("index of a projection divides the index") {
  auto projected_index = [](const LatticePolytope3& p, const Point3& d) {
    const PointConfiguration2 c = project_along(p, d);
    IntMatrix m(2, c.points.size());
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      m(0, j) = c.points[j].x;
      m(1, j) = c.points[j].y;
    }
    return configuration_index(m);
  };
  for (const CatalogEntry& e : catalog_entries(10)) {
    const auto p = make(e);
    const Int q = sublattice_index(p);
    std::vector<Point3> dirs = {Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)};
    dirs.push_back(find_spike(p).direction);
    for (const Point3& d : dirs) {
      const Int q2 = projected_index(p, d);
      REQUIRE(q2 > 0);
      REQUIRE_MESSAGE(q % q2 == 0, label(e));
    }
  }
}

TEST_CASE("lattice width") {
  CHECK(width(kUnit).width == 1);
  CHECK(width(make({Tag::E55, {}})).width == 2);
  CHECK(width(make({Tag::F1, {0, 1}})).width == 2);
  CHECK(width(cube()).width == 1);
  const auto w = width(make({Tag::T, {2, 5, 3, 3}}));
  CHECK(w.width == 1);
  CHECK(w.functional == Point3(0, 0, 1));
}

TEST_CASE("width agrees with exhaustive functional search") {
  for (const CatalogEntry& e : catalog_entries(9)) {
    const auto p = make(e);
    const WidthResult w = width(p);
    REQUIRE(w.width == oracle::width_by_search(p.vertices(), 4));
    REQUIRE(is_primitive(w.functional));
    REQUIRE(width_along(p, w.functional) == w.width);
    if (e.tag == Tag::T) REQUIRE(w.width == 1);
    if (is_family(e.tag) || is_exception(e.tag)) REQUIRE(w.width >= 2);
  }
  for (const auto& p : random_polytopes(32, 40, 4))
    REQUIRE(width(p).width == oracle::width_by_search(p.vertices(), 6));
}

TEST_CASE("width functionals") {
  const auto fs = width_functionals(cube());
  CHECK(fs.size() == 3);
  for (const Point3& f : width_functionals(make({Tag::E823, {}})))
    CHECK(width_along(make({Tag::E823, {}}), f) == 3);
}

TEST_CASE("h* vectors of named polytopes") {
  CHECK(hstar(kUnit) == hv({1}));
  CHECK(to_string(hstar(kUnit)) == "(1)");
  CHECK(hstar(make({Tag::E55, {}})) == hv({1, 1, 17, 1}));
  CHECK(hstar(make({Tag::F4, {0, 3}})) == hv({1, 4, 17, 2}));
  CHECK(hstar(make({Tag::T, {1, 2, 1, 1}})) == hv({1, 0, 1}));
  CHECK(to_string(hstar(make({Tag::E72, {}}))) == "(1, 3, 10)");
  CHECK(hstar(cube()) == hv({1, 4, 1}));
}

TEST_CASE("h* agrees with dilation counting") {
  for (const CatalogEntry& e : catalog_entries(8)) {
    const auto p = make(e);
    const HStarVector h = hstar(p);
    REQUIRE(h.coefficients == oracle::hstar_by_counting(p.vertices()));
    Int sum = 0;
    for (const Int& c : h.coefficients) sum += c;
    REQUIRE(sum == normalized_volume(p));
    REQUIRE(h[1] == Int(static_cast<long>(p.size())) - 4);
    REQUIRE(h[3] == static_cast<long>(interior_lattice_points(p).size()));
  }
  for (const auto& p : random_polytopes(33, 25, 2))
    REQUIRE(hstar(p).coefficients == oracle::hstar_by_counting(p.vertices()));
}

TEST_CASE("Ehrhart cross-check") {
  CHECK(ehrhart_check(kUnit, 4));
  CHECK(ehrhart_check(make({Tag::E823, {}}), 5));
  CHECK_THROWS_AS(ehrhart_check(kUnit, 2), std::invalid_argument);
  const auto poly = ehrhart_polynomial(make({Tag::E55, {}}));
  CHECK(poly[3] == mpq_class(10, 3));
  CHECK(poly[0] == 1);
  const auto num = ehrhart_numerator(make({Tag::E55, {}}), 5);
  CHECK(num == std::vector<Int>{1, 1, 17, 1, 0, 0});
  CHECK(dilate_size(kUnit, 3) == 20);
}

TEST_CASE("empty tetrahedra") {
  const auto e511 = empty_tetrahedra(make({Tag::E511, {}}));
  std::vector<Int> v;
  for (const auto& t : e511) v.push_back(t.volume);
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Int>{2, 3, 5, 7});

  v.clear();
  for (const auto& t : empty_tetrahedra(make({Tag::E512, {}})))
    v.push_back(t.volume);
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Int>{3, 4, 5, 7});

  for (const CatalogEntry& e : catalog_entries(8)) {
    const auto p = make(e);
    std::vector<Int> got;
    for (const auto& t : empty_tetrahedra(p)) got.push_back(t.volume);
    std::sort(got.begin(), got.end());
    REQUIRE(got == oracle::empty_tetrahedra_volumes(p.lattice_points()));
  }
}

TEST_CASE("tetrahedron point count with a limit") {
  const std::array<Point3, 4> t{Point3(0, 0, 0), Point3(4, 0, 0), Point3(0, 4, 0),
                                Point3(0, 0, 4)};
  CHECK(tetrahedron_lattice_point_count(t) == 35);
  CHECK(tetrahedron_lattice_point_count(t, 5) <= 6);
}

TEST_CASE("partition certificate") {
  for (const CatalogEntry& e : catalog_entries(9)) {
    if (expected_index(e.tag) == 1) continue;
    const auto c = partition_certificate(make(e));
    REQUIRE_MESSAGE(c.holds, label(e));
    REQUIRE(c.volume_sum == c.volume);
    REQUIRE(c.volumes_equal_index);
  }
  // The cube contains an empty tetrahedron of volume 2, although it spans.
  const auto c = partition_certificate(cube());
  CHECK(c.index == 1);
  CHECK_FALSE(c.volumes_equal_index);
  CHECK_FALSE(verify_partition(cube()));
  CHECK_FALSE(partition_certificate(make({Tag::E511, {}})).holds);
}

TEST_CASE("unimodular tetrahedra") {
  CHECK(has_unimodular_tetrahedron(kUnit));
  CHECK(has_unimodular_tetrahedron(cube()));
  CHECK_FALSE(has_unimodular_tetrahedron(make({Tag::E511, {}})));
  CHECK_FALSE(has_unimodular_tetrahedron(make({Tag::E512, {}})));
  CHECK_FALSE(has_unimodular_tetrahedron(make({Tag::F2, {-2, 3}})));
  const auto w = has_unimodular_tetrahedron(cube());
  CHECK(w->volume == 1);
}

TEST_CASE("h* inequality and gaps for non-spanning polytopes") {
  for (const CatalogEntry& e : catalog_entries(10)) {
    if (expected_index(e.tag) == 1) continue;
    const auto p = make(e);
    const HStarLawReport r = check_hstar_laws(p);
    REQUIRE(r.inequality_applies);
    REQUIRE(r.inequality_holds);
    REQUIRE(r.gaps.empty() == (p.size() != 4));
  }
  const auto t = check_hstar_laws(make({Tag::T, {2, 5, 1, 1}}));
  CHECK(t.gaps == std::vector<std::size_t>{1});
  CHECK_FALSE(check_hstar_laws(cube()).inequality_applies);
}

TEST_CASE("profile is invariant under unimodular maps") {
  std::mt19937_64 rng(34);
  for (const CatalogEntry& e : catalog_entries(10)) {
    const auto p = make(e);
    const InvariantProfile a = profile(p);
    REQUIRE(a.hstar.coefficients.front() == 1);
    REQUIRE(a.volume % a.index == 0);
    for (int i = 0; i < 50; ++i) {
      const InvariantProfile b = profile(apply_map(random_unimodular_map(rng), p));
      REQUIRE(b.size == a.size);
      REQUIRE(b.interior == a.interior);
      REQUIRE(b.volume == a.volume);
      REQUIRE(b.index == a.index);
      REQUIRE(b.width == a.width);
      REQUIRE(b.hstar == a.hstar);
    }
  }
}
