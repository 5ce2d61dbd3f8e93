#pragma once

// Classification of lattice 3-polytopes: spanning, width one, member of an
// infinite family, or one of the finitely many exceptions.

#include "lattice3/catalog.hpp"
#include "lattice3/equiv.hpp"
#include "lattice3/invariants.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lattice3 {

class NotTwoSegments : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Spanning {
  std::optional<EmptyTetrahedron> witness;  ///< a unimodular tetrahedron
  std::optional<Tag> e51_match;             ///< E511 or E512 when no witness
};

struct WidthOne {
  long p = 0, q = 0, a = 0, b = 0;
  CatalogEntry entry() const { return {Tag::T, {p, q, a, b}}; }
};

struct FamilyMember {
  CatalogEntry entry;
  AffineUnimodularMap isomorphism;  ///< sends make(entry) onto the input
};

struct ExceptionMatch {
  Tag name;
  AffineUnimodularMap isomorphism;  ///< sends make({name}) onto the input
};

/// Input that fits none of the cases. Never expected: it would be either a
/// bug or a counterexample to the classification.
struct ContradictsClassification {
  std::string reason;
};

using Verdict = std::variant<Spanning, WidthOne, FamilyMember, ExceptionMatch,
                             ContradictsClassification>;

struct ClassificationResult {
  Verdict verdict;
  InvariantProfile profile;
};

/// Label of the catalog entry a verdict resolves to; empty for spanning
/// polytopes with a unimodular tetrahedron and for contradictions.
std::optional<CatalogEntry> verdict_entry(const Verdict& v);
std::string describe(const Verdict& v);

/// Width-one parameters (p, q, a, b) with a >= b and 0 <= p < q. The two
/// lattice planes of a width-one functional each hold a segment; every way of
/// sending them to the reference position is tried and the representative
/// with the largest a, then the largest p, is returned.
///
/// Throws std::invalid_argument unless width(P) = 1 and the index is > 1, and
/// NotTwoSegments if a layer is not collinear.
WidthOne extract_width1_params(const LatticePolytope3& p);

/// Classifier with a per-size cache of the width > 1 candidate list.
/// Thread-safe.
class Classifier {
 public:
  ClassificationResult classify(const LatticePolytope3& p);
  ClassificationResult classify(const LatticePolytope3& p,
                                const InvariantProfile& profile);
  /// The cached enumerate_nonspanning(n).
  const std::vector<CatalogItem>& candidates(std::size_t n);

 private:
  std::mutex mu_;
  std::map<std::size_t, std::vector<CatalogItem>> cache_;
};

/// Uses a process-wide Classifier.
ClassificationResult classify(const LatticePolytope3& p);

/// Adds one lattice point near P so that the hull becomes spanning. Offsets
/// from the first vertex are tried in lexicographic order within [-r, r]^3.
std::optional<LatticePolytope3> spanning_extension(const LatticePolytope3& p,
                                                   long r = 2);

struct SuiteFailure {
  std::string entry;
  std::string what;
};

struct ClassificationSuiteReport {
  std::size_t entries = 0;
  std::size_t classifications = 0;
  std::size_t contradictions = 0;
  std::size_t partitions_checked = 0;
  std::size_t spanning_checked = 0;
  /// Width > 1 non-spanning classes per (size, index).
  std::map<std::size_t, std::map<long, long>> counts;
  std::map<Tag, long> exception_occurrences;
  std::vector<SuiteFailure> failures;

  bool ok() const { return failures.empty() && contradictions == 0; }
};

/// For every catalog entry up to size nmax: classify `scrambles` random
/// unimodular images and compare with the entry label, certify the empty
/// tetrahedra partition of non-spanning entries, and check that a spanning
/// extension carries a unimodular tetrahedron.
ClassificationSuiteReport verify_classification_suite(std::size_t nmax,
                                                      int scrambles = 1,
                                                      std::uint64_t seed = 1);

}  // namespace lattice3
