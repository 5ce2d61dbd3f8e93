#pragma once

// JSON documents, reports and verification suites behind the command line.

#include "lattice3/catalog.hpp"
#include "lattice3/classify.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lattice3 {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"name": optional string, "vertices": [[x, y, z], ...]}
struct PolytopeDocument {
  std::optional<std::string> name;
  std::vector<Point3> vertices;
};

/// Throws ParseError on malformed JSON, non-integer coordinates, or fewer
/// than four distinct vertices.
PolytopeDocument parse_document(std::string_view text);
PolytopeDocument read_document(const std::string& path);
std::string render_document(const PolytopeDocument& doc);

/// Generator points of a catalog entry, sorted; their hull is the entry.
PolytopeDocument generate_document(const CatalogEntry& e);

struct ReportOptions {
  bool json = false;
  bool timing = false;
};

std::string analyze_report(const PolytopeDocument& doc,
                           const ReportOptions& opt = {});

/// Also returns the verdict so callers can pick an exit status.
std::string classify_report(const PolytopeDocument& doc, Verdict& verdict,
                            const ReportOptions& opt = {});

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool ok() const;
};

inline constexpr std::string_view kSuites[] = {
    "tables", "partition", "spanning", "hstar", "dim4", "classification"};

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view suite, std::size_t nmax);
std::string render_suite(const SuiteReport& r, bool json);

}  // namespace lattice3
