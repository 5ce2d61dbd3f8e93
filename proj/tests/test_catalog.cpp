#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lattice3/catalog.hpp"
#include "lattice3/invariants.hpp"
#include "oracles.hpp"

#include <map>

using namespace lattice3;

namespace {

std::map<long, long> index_counts(std::size_t n) {
  std::map<long, long> out;
  for (const CatalogItem& it : enumerate_nonspanning(n))
    ++out[sublattice_index(make(it.entry)).get_si()];
  return out;
}

}  // namespace

TEST_CASE("tag names round trip") {
  for (Tag t : kAllTags) CHECK(parse_tag(tag_name(t)) == t);
  CHECK_FALSE(parse_tag("F5"));
  CHECK(label({Tag::T, {1, 2, 1, 1}}) == "T(1,2,1,1)");
  CHECK(label({Tag::F3, {0, 2, 1}}) == "F3(0,2,1)");
  CHECK(label({Tag::E821, {}}) == "E(8,2)^1");
  CHECK(label({Tag::E55, {}}) == "E(5,5)");
  CHECK(param_count(Tag::T) == 4);
  CHECK(param_count(Tag::F3) == 3);
  CHECK(param_count(Tag::E72) == 0);
}

TEST_CASE("named examples") {
  const auto t = make({Tag::T, {1, 2, 1, 1}});
  CHECK(t.size() == 4);
  CHECK(sublattice_index(t) == 2);
  CHECK(width(t).width == 1);

  const auto e = make({Tag::E55, {}});
  CHECK(e.size() == 5);
  CHECK(sublattice_index(e) == 5);
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(make({Tag::F2, {0, 1}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::F3, {0, 1, 1}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::F1, {1, 2}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::F1, {-1, 0}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::F3, {0, 2, 3}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::T, {2, 4, 1, 1}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::T, {3, 2, 1, 1}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::T, {1, 2, 0, 1}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::F1, {0}}), ParamDomainError);
  CHECK_THROWS_AS(make({Tag::E55, {1}}), ParamDomainError);
  CHECK_NOTHROW(make({Tag::F2, {-1, 1}}));
  CHECK_NOTHROW(make({Tag::F3, {0, 1, 0}}));
}

TEST_CASE("size bookkeeping") {
  for (long a = -3; a <= 0; ++a)
    for (long b = 1; b <= 4; ++b) {
      CHECK(make({Tag::F1, {a, b}}).size() == static_cast<std::size_t>(b - a + 4));
      if (a != 0 || b != 1)
        CHECK(make({Tag::F2, {a, b}}).size() == static_cast<std::size_t>(b - a + 4));
      CHECK(make({Tag::F4, {a, b}}).size() == static_cast<std::size_t>(b - a + 5));
      for (long k = 0; k <= b; ++k)
        if (a != 0 || b != 1 || k != 1)
          CHECK(make({Tag::F3, {a, b, k}}).size() ==
                static_cast<std::size_t>(b - a + 5));
    }
  for (long q = 2; q <= 6; ++q)
    for (long p = 0; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
          CHECK(make({Tag::T, {p, q, a, b}}).size() ==
                static_cast<std::size_t>(a + b + 2));
    }
}

TEST_CASE("family members have width at least two and the family index") {
  for (std::size_t n = 5; n <= 12; ++n)
    for (Tag fam : kFamilies)
      for (const CatalogEntry& e : family_members(fam, n, false)) {
        const auto p = make(e);
        REQUIRE(p.size() == n);
        REQUIRE_MESSAGE(width(p).width >= 2, label(e));
        REQUIRE(sublattice_index(p) == (fam == Tag::F1 ? 3 : 2));
      }
}

TEST_CASE("width-one entries have width one and index q") {
  for (long q = 2; q <= 7; ++q)
    for (std::size_t n = 4; n <= 8; ++n)
      for (const CatalogItem& it : enumerate_width_one(n, q)) {
        const auto p = make(it.entry);
        REQUIRE(p.size() == n);
        REQUIRE(width(p).width == 1);
        REQUIRE(sublattice_index(p) == q);
        REQUIRE(it.entry.params[2] >= it.entry.params[3]);
      }
}

TEST_CASE("width-one enumeration keeps one label per class") {
  for (long q = 2; q <= 5; ++q)
    for (std::size_t n = 4; n <= 8; ++n) {
      const auto items = enumerate_width_one(n, q);
      for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
          REQUIRE_FALSE(items[i].form == items[j].form);
    }
  // Empty tetrahedra of volume 5 fall into two classes, p = +-1 and p = +-2.
  CHECK(enumerate_width_one(4, 5).size() == 2);
}

TEST_CASE("enumerate_nonspanning small sizes") {
  const auto five = enumerate_nonspanning(5);
  REQUIRE(five.size() == 2);
  CHECK(five[0].entry == CatalogEntry{Tag::F1, {0, 1}});
  CHECK(five[1].entry == CatalogEntry{Tag::E55, {}});
  CHECK(index_counts(5) == std::map<long, long>{{3, 1}, {5, 1}});
  CHECK(index_counts(8) == std::map<long, long>{{2, 14}, {3, 3}});
  CHECK(index_counts(11) == std::map<long, long>{{2, 24}, {3, 4}});

  long exceptions = 0;
  for (const CatalogItem& it : enumerate_nonspanning(8))
    exceptions += is_exception(it.entry.tag);
  CHECK(exceptions == 3);
}

TEST_CASE("enumeration against reference counts") {
  const long idx2[] = {0, 2, 8, 14, 15, 19, 24};
  const long idx3[] = {1, 3, 2, 3, 3, 4, 4};
  for (std::size_t n = 5; n <= 11; ++n) {
    auto c = index_counts(n);
    CHECK(c[2] == idx2[n - 5]);
    CHECK(c[3] == idx3[n - 5]);
    CHECK(c[5] == (n == 5 ? 1 : 0));
  }
}

TEST_CASE("closed form") {
  CHECK(count_closed_form(9, 2) == 15);
  CHECK(count_closed_form(10, 3) == 4);
  CHECK(count_closed_form(9, 5) == 0);
  CHECK(count_closed_form(9, 4) == 0);
  CHECK_THROWS_AS(count_closed_form(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_closed_form(9, 1), std::invalid_argument);
  for (std::size_t n = 9; n <= 14; ++n) {
    const auto c = index_counts(n);
    CHECK(c.at(2) == count_closed_form(static_cast<long>(n), 2));
    CHECK(c.at(3) == count_closed_form(static_cast<long>(n), 3));
    CHECK(c.size() == 2);
  }
}

TEST_CASE("family table") {
  const auto rows = family_counts_table(11);
  REQUIRE(rows.size() == 7);
  const long f1[] = {1, 2, 2, 3, 3, 4, 4};
  const long f2[] = {0, 2, 2, 3, 3, 4, 4};
  const long f3[] = {0, 1, 4, 6, 9, 12, 16};
  const long f4[] = {0, 1, 2, 2, 3, 3, 4};
  const long fam2[] = {0, 2, 7, 11, 15, 19, 24};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FamilyCountRow& r = rows[i];
    CHECK(r.n == i + 5);
    CHECK(r.enumerated.at(Tag::F1) == f1[i]);
    CHECK(r.enumerated.at(Tag::F2) == f2[i]);
    CHECK(r.enumerated.at(Tag::F3) == f3[i]);
    CHECK(r.enumerated.at(Tag::F4) == f4[i]);
    CHECK(r.index2_families == fam2[i]);
    CHECK(r.index3_families == f1[i]);
    if (r.n >= 9) {
      for (Tag fam : kFamilies) CHECK(r.enumerated.at(fam) == r.formula.at(fam));
      CHECK(r.index2_families == r.index2_formula);
    }
  }
  // Starred cells: the formula counts a width-one candidate.
  CHECK(rows[0].formula.at(Tag::F2) == 1);
  CHECK(rows[1].formula.at(Tag::F3) == 2);
  // Size 7: one class lies in two families.
  CHECK(rows[2].index2_families < f2[2] + f3[2] + f4[2]);
  CHECK(rows[2].index2_total == 8);
}

TEST_CASE("dim4 example") {
  const Dim4Report r = dim4_example();
  std::vector<Int> m = r.minors;
  std::sort(m.rbegin(), m.rend());
  CHECK(m == std::vector<Int>{4, 2, 2, 2});
  CHECK(r.index == 2);
  CHECK(r.minors_gcd == 2);
  CHECK(r.minors_gcd == r.index);
}

TEST_CASE("tabulated h* matches the computed h*") {
  for (const CatalogEntry& e : catalog_entries(10)) {
    const auto tab = tabulated_hstar(e);
    if (e.tag == Tag::E511 || e.tag == Tag::E512) {
      CHECK_FALSE(tab);
      continue;
    }
    REQUIRE(tab);
    std::vector<Int> want(tab->begin(), tab->end());
    REQUIRE_MESSAGE(hstar(make(e)).coefficients == want, label(e));
  }
}

TEST_CASE("catalog entries are valid and distinct") {
  const auto entries = catalog_entries(9);
  for (const CatalogEntry& e : entries) {
    CHECK_NOTHROW(validate(e));
    CHECK(make(e).size() == expected_size(e));
  }
  for (std::size_t i = 1; i < entries.size(); ++i)
    CHECK_FALSE(entries[i] == entries[i - 1]);
}
