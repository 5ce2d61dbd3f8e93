#pragma once

// Generators for the named non-spanning polytopes, per-size enumeration and
// the closed-form counts.

#include "lattice3/equiv.hpp"
#include "lattice3/geom.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lattice3 {

enum class Tag { T, F1, F2, F3, F4, E55, E63, E72, E821, E822, E823, E511, E512 };

inline constexpr Tag kAllTags[] = {Tag::T,    Tag::F1,   Tag::F2,   Tag::F3,
                                   Tag::F4,   Tag::E55,  Tag::E63,  Tag::E72,
                                   Tag::E821, Tag::E822, Tag::E823, Tag::E511,
                                   Tag::E512};

/// The six exceptions of width > 1, smallest size first.
inline constexpr Tag kExceptions[] = {Tag::E55,  Tag::E63,  Tag::E72,
                                      Tag::E821, Tag::E822, Tag::E823};

inline constexpr Tag kFamilies[] = {Tag::F1, Tag::F2, Tag::F3, Tag::F4};

class ParamDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// T: (p, q, a, b). F1, F2, F4: (a, b). F3: (a, b, k). Named polytopes: ().
struct CatalogEntry {
  Tag tag = Tag::T;
  std::vector<long> params;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
  friend auto operator<=>(const CatalogEntry&, const CatalogEntry&) = default;
};

/// "T", "F1", ..., "E821", "E511": the spelling accepted on the command line.
std::string tag_name(Tag tag);
std::optional<Tag> parse_tag(std::string_view name);
bool is_family(Tag tag);
bool is_exception(Tag tag);
/// Human label: "T(1,2,1,1)", "F3(0,2,1)", "E(5,5)", "E(8,2)^1", "E(5,1)^2".
std::string label(const CatalogEntry& e);
/// Number of parameters the tag takes.
std::size_t param_count(Tag tag);

/// Throws ParamDomainError when the parameters are outside the domain of the
/// tag, including F2(0,1) and F3(0,1,1), which have width one.
void validate(const CatalogEntry& e);

/// Generator points whose hull is the entry.
std::vector<Point3> generators(const CatalogEntry& e);
LatticePolytope3 make(const CatalogEntry& e);

/// Index of every member of the family (or of the named polytope).
long expected_index(Tag tag);

/// Size predicted by the parameters: a+b+2 for T, b-a+4 for F1/F2, b-a+5 for
/// F3/F4; measured for named polytopes.
std::size_t expected_size(const CatalogEntry& e);

/// Every parameter tuple of the family with the given size. With
/// `normalized`, only those with -a <= b (and -a <= b-k for F3).
std::vector<CatalogEntry> family_members(Tag family, std::size_t n,
                                         bool normalized = true);

struct CatalogItem {
  CatalogEntry entry;
  CanonicalForm form;
};

/// Non-spanning polytopes of width > 1 and size n: family members followed
/// by the exceptions of that size, one per isomorphism class. The label kept
/// for a class is the first in the order F1 < F2 < F3 < F4 < exceptions.
std::vector<CatalogItem> enumerate_nonspanning(std::size_t n);

/// Width-one T_{p,q}(a,b) of size n and the given q > 1, with a >= b, one per
/// isomorphism class. The kept label maximizes a, then p.
std::vector<CatalogItem> enumerate_width_one(std::size_t n, long q);

/// Test catalog: every non-spanning class of width > 1 with size in [5, nmax],
/// the width-one classes of size in [4, nmax] for each q in `qs`, and the two
/// spanning tetrahedra without unimodular tetrahedra.
std::vector<CatalogEntry> catalog_entries(std::size_t nmax,
                                          const std::vector<long>& qs = {2, 3,
                                                                         4, 5});

/// Number of non-spanning classes of width > 1, size n >= 9 and index q >= 2.
/// Throws std::invalid_argument for n < 9 or q < 2.
long count_closed_form(long n, long q);

/// Closed-form number of classes within one family at size n.
long family_formula(Tag family, long n);

struct FamilyCountRow {
  std::size_t n = 0;
  std::map<Tag, long> enumerated;  ///< classes within each family
  std::map<Tag, long> formula;
  long index2_families = 0;  ///< classes in F2 u F3 u F4
  long index3_families = 0;
  long index2_formula = 0;   ///< floor((n-3)(n+1)/4)
  long index3_formula = 0;   ///< ceil((n-3)/2)
  /// Width > 1 classes of index 2, 3, 5 including exceptions.
  long index2_total = 0;
  long index3_total = 0;
  long index5_total = 0;
};

/// Per-family counts by enumeration of every parameter tuple followed by
/// deduplication, alongside the formulas, for sizes 5..nmax.
std::vector<FamilyCountRow> family_counts_table(std::size_t nmax);

/// Tabulated h*-vector of a non-spanning entry (trailing zeros trimmed);
/// nullopt for the spanning tetrahedra.
std::optional<std::vector<long>> tabulated_hstar(const CatalogEntry& e);

struct Dim4Report {
  std::vector<Int> minors;  ///< nonzero |4x4 minors| of the vertex matrix
  std::vector<Int> elementary_divisors;
  Int index;       ///< product of the elementary divisors
  Int minors_gcd;
};

/// The 4-simplex with six lattice points whose empty simplices have unequal
/// volumes.
Dim4Report dim4_example();

}  // namespace lattice3
