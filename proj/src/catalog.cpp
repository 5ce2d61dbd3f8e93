#include "lattice3/catalog.hpp"

#include "lattice3/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lattice3 {

namespace {

struct TagInfo {
  Tag tag;
  const char* name;
  const char* label;
  std::size_t params;
  long index;
};

constexpr TagInfo kInfo[] = {
    {Tag::T, "T", "T", 4, 0},
    {Tag::F1, "F1", "F1", 2, 3},
    {Tag::F2, "F2", "F2", 2, 2},
    {Tag::F3, "F3", "F3", 3, 2},
    {Tag::F4, "F4", "F4", 2, 2},
    {Tag::E55, "E55", "E(5,5)", 0, 5},
    {Tag::E63, "E63", "E(6,3)", 0, 3},
    {Tag::E72, "E72", "E(7,2)", 0, 2},
    {Tag::E821, "E821", "E(8,2)^1", 0, 2},
    {Tag::E822, "E822", "E(8,2)^2", 0, 2},
    {Tag::E823, "E823", "E(8,2)^3", 0, 2},
    {Tag::E511, "E511", "E(5,1)^1", 0, 1},
    {Tag::E512, "E512", "E(5,1)^2", 0, 1},
};

const TagInfo& info(Tag tag) {
  for (const auto& i : kInfo)
    if (i.tag == tag) return i;
  throw std::logic_error("unknown tag");
}

std::vector<Point3> pts(std::initializer_list<std::array<long, 3>> xs) {
  std::vector<Point3> out;
  for (const auto& x : xs) out.emplace_back(x[0], x[1], x[2]);
  return out;
}

const std::vector<Point3>& base_triangle() {
  static const std::vector<Point3> b = pts({{-1, -1, 0}, {2, 0, 0}, {1, 2, 0}});
  return b;
}

std::vector<Point3> with_base(std::initializer_list<std::array<long, 3>> xs) {
  std::vector<Point3> out = base_triangle();
  for (const auto& p : pts(xs)) out.push_back(p);
  return out;
}

}  // namespace

std::string tag_name(Tag tag) { return info(tag).name; }

std::optional<Tag> parse_tag(std::string_view name) {
  for (const auto& i : kInfo)
    if (name == i.name) return i.tag;
  return std::nullopt;
}

bool is_family(Tag tag) {
  return tag == Tag::F1 || tag == Tag::F2 || tag == Tag::F3 || tag == Tag::F4;
}

bool is_exception(Tag tag) {
  return std::find(std::begin(kExceptions), std::end(kExceptions), tag) !=
         std::end(kExceptions);
}

std::size_t param_count(Tag tag) { return info(tag).params; }

long expected_index(Tag tag) { return info(tag).index; }

std::string label(const CatalogEntry& e) {
  std::string s = info(e.tag).label;
  if (e.params.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < e.params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.params[i]);
  }
  return s + ')';
}

void validate(const CatalogEntry& e) {
  const auto fail = [&](const std::string& why) {
    throw ParamDomainError(label(e) + ": " + why);
  };
  if (e.params.size() != param_count(e.tag))
    fail("expected " + std::to_string(param_count(e.tag)) + " parameters");
  const auto& v = e.params;
  switch (e.tag) {
    case Tag::T:
      if (!(0 <= v[0] && v[0] < v[1])) fail("need 0 <= p < q");
      if (std::gcd(v[0], v[1]) != 1) fail("need gcd(p, q) = 1");
      if (v[2] < 1 || v[3] < 1) fail("need a, b >= 1");
      return;
    case Tag::F1:
    case Tag::F2:
    case Tag::F3:
    case Tag::F4:
      if (!(v[0] <= 0 && v[1] > 0)) fail("need a <= 0 < b");
      if (e.tag == Tag::F2 && v[0] == 0 && v[1] == 1) fail("F2(0,1) has width one");
      if (e.tag == Tag::F3) {
        if (v[2] < 0 || v[2] > v[1]) fail("need 0 <= k <= b");
        if (v[0] == 0 && v[1] == 1 && v[2] == 1) fail("F3(0,1,1) has width one");
      }
      return;
    default:
      return;
  }
}

std::vector<Point3> generators(const CatalogEntry& e) {
  validate(e);
  const auto& v = e.params;
  std::vector<Point3> out;
  const auto spike = [&] {
    out.emplace_back(0, 0, v[0]);
    out.emplace_back(0, 0, v[1]);
  };
  switch (e.tag) {
    case Tag::T:
      return {Point3(0, 0, 0), Point3(v[2], 0, 0), Point3(0, 0, 1),
              Point3(v[3] * v[0], v[3] * v[1], 1)};
    case Tag::F1:
      spike();
      for (const auto& p : pts({{-1, -1, 0}, {2, -1, 1}, {-1, 2, -1}}))
        out.push_back(p);
      return out;
    case Tag::F2:
    case Tag::F3:
    case Tag::F4:
      spike();
      for (const auto& p : pts({{-1, -1, 1}, {1, -1, 0}, {-1, 1, 0}}))
        out.push_back(p);
      if (e.tag == Tag::F3) out.emplace_back(1, 1, 2 * v[2] - 1);
      if (e.tag == Tag::F4) out.emplace_back(3, -1, -1);
      return out;
    case Tag::E55:
      return pts({{0, -2, 1}, {1, 0, -1}, {1, 1, 1}, {-2, 1, -1}});
    case Tag::E63:
      return pts({{1, 0, 0}, {-1, -1, 0}, {1, 2, 3}, {-1, 1, -3}});
    case Tag::E72:
      return with_base({{0, -1, 2}});
    case Tag::E821:
      return with_base({{0, -1, 2}, {0, 1, -2}});
    case Tag::E822:
      return with_base({{0, -1, 2}, {-2, -1, -2}});
    case Tag::E823:
      return pts({{0, -1, -1}, {2, 0, 2}, {1, 2, -1}, {-1, 1, 2}});
    case Tag::E511:
      return pts({{1, 0, 0}, {0, 0, 1}, {2, 7, 1}, {-1, -2, -1}});
    case Tag::E512:
      return pts({{1, 0, 0}, {0, 0, 1}, {3, 7, 1}, {-2, -3, -1}});
  }
  throw std::logic_error("unknown tag");
}

LatticePolytope3 make(const CatalogEntry& e) { return hull(generators(e)); }

std::size_t expected_size(const CatalogEntry& e) {
  validate(e);
  const auto& v = e.params;
  switch (e.tag) {
    case Tag::T:
      return static_cast<std::size_t>(v[2] + v[3] + 2);
    case Tag::F1:
    case Tag::F2:
      return static_cast<std::size_t>(v[1] - v[0] + 4);
    case Tag::F3:
    case Tag::F4:
      return static_cast<std::size_t>(v[1] - v[0] + 5);
    default:
      return make(e).size();
  }
}

std::vector<CatalogEntry> family_members(Tag family, std::size_t n,
                                         bool normalized) {
  if (!is_family(family))
    throw std::invalid_argument("family_members: not a family tag");
  std::vector<CatalogEntry> out;
  const long extra = (family == Tag::F1 || family == Tag::F2) ? 4 : 5;
  const long span = static_cast<long>(n) - extra;  // b - a
  if (span < 1) return out;
  // a runs from 0 downwards so that normalized members come first.
  for (long a = 0; a > -span; --a) {
    const long b = span + a;
    if (family == Tag::F3) {
      for (long k = 0; k <= b; ++k) {
        if (normalized && -a > b - k) continue;
        if (a == 0 && b == 1 && k == 1) continue;
        out.push_back({family, {a, b, k}});
      }
    } else {
      if (normalized && -a > b) continue;
      if (family == Tag::F2 && a == 0 && b == 1) continue;
      out.push_back({family, {a, b}});
    }
  }
  return out;
}

std::vector<CatalogItem> enumerate_nonspanning(std::size_t n) {
  std::vector<CatalogItem> out;
  std::set<CanonicalForm> seen;
  const auto offer = [&](const CatalogEntry& e, const LatticePolytope3& p) {
    CanonicalForm f = canonical_form(p);
    if (seen.insert(f).second) out.push_back({e, std::move(f)});
  };
  for (Tag fam : kFamilies)
    for (const auto& e : family_members(fam, n)) offer(e, make(e));
  for (Tag t : kExceptions) {
    const CatalogEntry e{t, {}};
    const LatticePolytope3 p = make(e);
    if (p.size() == n) offer(e, p);
  }
  return out;
}

std::vector<CatalogItem> enumerate_width_one(std::size_t n, long q) {
  if (q < 2) throw std::invalid_argument("enumerate_width_one: need q >= 2");
  std::vector<CatalogItem> out;
  std::set<CanonicalForm> seen;
  const long total = static_cast<long>(n) - 2;  // a + b
  for (long a = total - 1; a >= 1 && a >= total - a; --a) {
    const long b = total - a;
    for (long p = q - 1; p >= 0; --p) {
      if (std::gcd(p, q) != 1) continue;
      CatalogEntry e{Tag::T, {p, q, a, b}};
      CanonicalForm f = canonical_form(make(e));
      if (seen.insert(f).second) out.push_back({std::move(e), std::move(f)});
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_entries(std::size_t nmax,
                                          const std::vector<long>& qs) {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 5; n <= nmax; ++n)
    for (auto& item : enumerate_nonspanning(n)) out.push_back(item.entry);
  for (long q : qs)
    for (std::size_t n = 4; n <= nmax; ++n)
      for (auto& item : enumerate_width_one(n, q)) out.push_back(item.entry);
  out.push_back({Tag::E511, {}});
  out.push_back({Tag::E512, {}});
  return out;
}

long count_closed_form(long n, long q) {
  if (n < 9) throw std::invalid_argument("closed form holds for sizes >= 9");
  if (q < 2) throw std::invalid_argument("index must be at least 2");
  if (q == 2) return (n - 3) * (n + 1) / 4;
  if (q == 3) return (n - 3 + 1) / 2;
  return 0;
}

long family_formula(Tag family, long n) {
  switch (family) {
    case Tag::F1:
    case Tag::F2:
      return (n - 3 + 1) / 2;
    case Tag::F3:
      return (n - 3) * (n - 3) / 4;
    case Tag::F4:
      return (n - 3) / 2;
    default:
      throw std::invalid_argument("family_formula: not a family tag");
  }
}

std::vector<FamilyCountRow> family_counts_table(std::size_t nmax) {
  std::vector<FamilyCountRow> rows;
  for (std::size_t n = 5; n <= nmax; ++n) {
    FamilyCountRow row;
    row.n = n;
    const long ln = static_cast<long>(n);
    std::set<CanonicalForm> index2, index3;
    for (Tag fam : kFamilies) {
      std::set<CanonicalForm> mine;
      for (const auto& e : family_members(fam, n, false))
        mine.insert(canonical_form(make(e)));
      row.enumerated[fam] = static_cast<long>(mine.size());
      row.formula[fam] = family_formula(fam, ln);
      (fam == Tag::F1 ? index3 : index2).insert(mine.begin(), mine.end());
    }
    row.index2_families = static_cast<long>(index2.size());
    row.index3_families = static_cast<long>(index3.size());
    row.index2_formula = (ln - 3) * (ln + 1) / 4;
    row.index3_formula = (ln - 3 + 1) / 2;
    for (const auto& item : enumerate_nonspanning(n)) {
      switch (expected_index(item.entry.tag)) {
        case 2: ++row.index2_total; break;
        case 3: ++row.index3_total; break;
        case 5: ++row.index5_total; break;
        default: break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::vector<long>> tabulated_hstar(const CatalogEntry& e) {
  validate(e);
  const auto& v = e.params;
  std::vector<long> h;
  const long n = static_cast<long>(expected_size(e));
  switch (e.tag) {
    case Tag::T:
      h = {1, v[2] + v[3] - 2, v[2] * v[3] * v[1] - v[2] - v[3] + 1, 0};
      break;
    case Tag::F1: h = {1, n - 4, 7 * n - 28, n - 5}; break;
    case Tag::F2: h = {1, n - 4, 3 * n - 13, 0}; break;
    case Tag::F3:
    case Tag::F4: h = {1, n - 4, 6 * n - 31, n - 6}; break;
    case Tag::E55: h = {1, 1, 17, 1}; break;
    case Tag::E63: h = {1, 2, 19, 2}; break;
    case Tag::E72: h = {1, 3, 10, 0}; break;
    case Tag::E821:
    case Tag::E822: h = {1, 4, 20, 3}; break;
    case Tag::E823: h = {1, 4, 21, 4}; break;
    case Tag::E511:
    case Tag::E512: return std::nullopt;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

Dim4Report dim4_example() {
  const IntMatrix vertices{{1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {-2, -1, -1, 0},
                           {1, 1, 1, 2}};
  Dim4Report r;
  // With the origin as base point, each empty simplex is the origin plus four
  // of the vertices, so its volume is a maximal minor of the vertex matrix.
  for (std::size_t skip = 0; skip < 5; ++skip) {
    IntMatrix m(4, 4);
    for (std::size_t i = 0, row = 0; i < 5; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < 4; ++j) m(row, j) = vertices(i, j);
      ++row;
    }
    const Int d = abs(det(m));
    if (d != 0) r.minors.push_back(d);
  }
  std::sort(r.minors.rbegin(), r.minors.rend());
  r.minors_gcd = gcd_all(r.minors);
  // Columns are the differences of the five vertices from the origin, which
  // is the sixth lattice point.
  const SnfResult s = snf(vertices.transposed());
  r.index = 1;
  for (const Int& d : s.divisors()) {
    r.elementary_divisors.push_back(d);
    r.index *= d;
  }
  return r;
}

}  // namespace lattice3
