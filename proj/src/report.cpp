#include "lattice3/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lattice3 {

using nlohmann::json;

namespace {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const Point3& p) {
  return json::array({to_json(p.x), to_json(p.y), to_json(p.z)});
}

json to_json(const HStarVector& h) {
  json out = json::array();
  for (const Int& c : h.coefficients) out.push_back(to_json(c));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Int coordinate(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
    return Int(std::to_string(v.get<std::int64_t>()));
  }
  throw ParseError("coordinates must be integers, got " + v.dump());
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// Empty-tetrahedron volumes as (volume, count) pairs.
std::map<Int, long> volume_multiset(const std::vector<EmptyTetrahedron>& ts) {
  std::map<Int, long> m;
  for (const auto& t : ts) ++m[t.volume];
  return m;
}

std::string render_multiset(const std::map<Int, long>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, c] : m) {
    os << (first ? "" : ", ") << v << " x" << c;
    first = false;
  }
  os << '}';
  return os.str();
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ')';
  return os.str();
}

LatticePolytope3 polytope_of(const PolytopeDocument& doc) {
  return hull(doc.vertices);
}

json profile_json(const InvariantProfile& p) {
  return {{"size", p.size},
          {"interior", p.interior},
          {"volume", to_json(p.volume)},
          {"index", to_json(p.index)},
          {"width", to_json(p.width)},
          {"width_functional", to_json(p.width_functional)},
          {"hstar", to_json(p.hstar)}};
}

void profile_text(std::ostream& os, const InvariantProfile& p) {
  os << "size: " << p.size << '\n'
     << "interior points: " << p.interior << '\n'
     << "normalized volume: " << p.volume << '\n'
     << "sublattice index: " << p.index << '\n'
     << "width: " << p.width << " along " << to_string(p.width_functional)
     << '\n'
     << "h*: " << to_string(p.hstar) << '\n';
}

json map_json(const AffineUnimodularMap& phi) {
  return {{"matrix", to_json(phi.a)}, {"translation", to_json(phi.t)}};
}

json verdict_json(const Verdict& v) {
  json out{{"summary", describe(v)}};
  if (const auto* s = std::get_if<Spanning>(&v)) {
    out["kind"] = "spanning";
    if (s->witness) {
      json w = json::array();
      for (const auto& x : s->witness->vertices) w.push_back(to_json(x));
      out["unimodular_tetrahedron"] = w;
    }
    if (s->e51_match) out["match"] = label({*s->e51_match, {}});
  } else if (const auto* w = std::get_if<WidthOne>(&v)) {
    out["kind"] = "width_one";
    out["label"] = label(w->entry());
    out["params"] = {{"p", w->p}, {"q", w->q}, {"a", w->a}, {"b", w->b}};
  } else if (const auto* f = std::get_if<FamilyMember>(&v)) {
    out["kind"] = "family";
    out["label"] = label(f->entry);
    out["tag"] = tag_name(f->entry.tag);
    out["params"] = f->entry.params;
    out["isomorphism"] = map_json(f->isomorphism);
  } else if (const auto* e = std::get_if<ExceptionMatch>(&v)) {
    out["kind"] = "exception";
    out["label"] = label({e->name, {}});
    out["tag"] = tag_name(e->name);
    out["isomorphism"] = map_json(e->isomorphism);
  } else {
    out["kind"] = "contradicts_classification";
    out["reason"] = std::get<ContradictsClassification>(v).reason;
  }
  return out;
}

void map_text(std::ostream& os, const AffineUnimodularMap& phi) {
  os << "isomorphism: x -> " << phi.a << " x + " << to_string(phi.t) << '\n';
}

json input_json(const PolytopeDocument& doc) {
  json in{{"vertices", json::array()}};
  if (doc.name) in["name"] = *doc.name;
  for (const auto& v : doc.vertices) in["vertices"].push_back(to_json(v));
  return in;
}

}  // namespace

PolytopeDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  PolytopeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("document needs a \"vertices\" array");
  std::set<Point3> seen;
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3)
      throw ParseError("each vertex must be an array of three integers");
    Point3 p{coordinate(v[0]), coordinate(v[1]), coordinate(v[2])};
    if (seen.insert(p).second) doc.vertices.push_back(std::move(p));
  }
  if (doc.vertices.size() < 4)
    throw ParseError("need at least four distinct vertices");
  return doc;
}

PolytopeDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string render_document(const PolytopeDocument& doc) {
  // One vertex per line.
  std::ostringstream os;
  os << "{\n";
  if (doc.name) os << "  \"name\": " << json(*doc.name).dump() << ",\n";
  os << "  \"vertices\": [\n";
  for (std::size_t i = 0; i < doc.vertices.size(); ++i)
    os << "    " << to_json(doc.vertices[i]).dump()
       << (i + 1 < doc.vertices.size() ? ",\n" : "\n");
  os << "  ]\n}\n";
  return os.str();
}

PolytopeDocument generate_document(const CatalogEntry& e) {
  validate(e);
  std::vector<Point3> pts = generators(e);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return {label(e), std::move(pts)};
}

std::string analyze_report(const PolytopeDocument& doc,
                           const ReportOptions& opt) {
  const auto t0 = Clock::now();
  const LatticePolytope3 p = polytope_of(doc);
  const InvariantProfile prof = profile(p);
  const auto tets = empty_tetrahedra(p);
  const PartitionCertificate cert = partition_certificate(p);
  const double elapsed = ms_since(t0);

  if (opt.json) {
    json out{{"input", input_json(doc)}, {"profile", profile_json(prof)}};
    json vols = json::object();
    for (const auto& [v, c] : volume_multiset(tets)) vols[v.get_str()] = c;
    out["empty_tetrahedra"] = {{"count", tets.size()}, {"volumes", vols}};
    out["partition"] = {{"volumes_equal_index", cert.volumes_equal_index},
                        {"volume_sum", to_json(cert.volume_sum)},
                        {"holds", cert.holds}};
    if (opt.timing) out["timing_ms"] = elapsed;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (doc.name) os << "name: " << *doc.name << '\n';
  os << "vertices: " << p.vertices().size() << '\n';
  profile_text(os, prof);
  os << "empty tetrahedra: " << tets.size() << " with volumes "
     << render_multiset(volume_multiset(tets)) << '\n'
     << "partition into volume-index tetrahedra: "
     << (cert.holds ? "yes" : "no") << " (volume sum " << cert.volume_sum
     << ")\n";
  if (opt.timing) os << "time: " << elapsed << " ms\n";
  return os.str();
}

std::string classify_report(const PolytopeDocument& doc, Verdict& verdict,
                            const ReportOptions& opt) {
  const auto t0 = Clock::now();
  const LatticePolytope3 p = polytope_of(doc);
  const ClassificationResult r = classify(p);
  const double elapsed = ms_since(t0);
  verdict = r.verdict;

  if (opt.json) {
    json out{{"input", input_json(doc)},
             {"profile", profile_json(r.profile)},
             {"verdict", verdict_json(r.verdict)}};
    if (opt.timing) out["timing_ms"] = elapsed;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (doc.name) os << "name: " << *doc.name << '\n';
  profile_text(os, r.profile);
  os << "verdict: " << describe(r.verdict) << '\n';
  if (const auto* f = std::get_if<FamilyMember>(&r.verdict))
    map_text(os, f->isomorphism);
  if (const auto* e = std::get_if<ExceptionMatch>(&r.verdict))
    map_text(os, e->isomorphism);
  if (opt.timing) os << "time: " << elapsed << " ms\n";
  return os.str();
}

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.pass; });
}

namespace {

void add(SuiteReport& r, std::string name, const std::string& expected,
         const std::string& actual) {
  r.checks.push_back({std::move(name), expected == actual, expected, actual});
}

void add_bool(SuiteReport& r, std::string name, bool ok,
              const std::string& detail = "") {
  r.checks.push_back({std::move(name), ok, "true", ok ? "true" : detail});
}

// Known counts of width > 1 classes for sizes 5..11.
constexpr long kIndex2[] = {0, 2, 8, 14, 15, 19, 24};
constexpr long kIndex3[] = {1, 3, 2, 3, 3, 4, 4};
constexpr long kIndex5[] = {1, 0, 0, 0, 0, 0, 0};
// Per-family class counts for sizes 5..11.
const std::map<Tag, std::vector<long>> kFamilyTable = {
    {Tag::F1, {1, 2, 2, 3, 3, 4, 4}},
    {Tag::F2, {0, 2, 2, 3, 3, 4, 4}},
    {Tag::F3, {0, 1, 4, 6, 9, 12, 16}},
    {Tag::F4, {0, 1, 2, 2, 3, 3, 4}},
};
constexpr long kFamilyIndex2[] = {0, 2, 7, 11, 15, 19, 24};

void suite_tables(SuiteReport& r, std::size_t nmax) {
  for (const FamilyCountRow& row : family_counts_table(nmax)) {
    const long n = static_cast<long>(row.n);
    const std::string at = " n=" + std::to_string(n);
    const bool known = n <= 11;
    const std::size_t i = row.n - 5;
    add(r, "index 2 classes" + at,
        std::to_string(known ? kIndex2[i] : count_closed_form(n, 2)),
        std::to_string(row.index2_total));
    add(r, "index 3 classes" + at,
        std::to_string(known ? kIndex3[i] : count_closed_form(n, 3)),
        std::to_string(row.index3_total));
    add(r, "index 5 classes" + at,
        std::to_string(known ? kIndex5[i] : 0),
        std::to_string(row.index5_total));
    for (Tag fam : kFamilies) {
      const long expected =
          known ? kFamilyTable.at(fam)[i] : family_formula(fam, n);
      add(r, tag_name(fam) + " classes" + at, std::to_string(expected),
          std::to_string(row.enumerated.at(fam)));
    }
    add(r, "family index 2 classes" + at,
        std::to_string(known ? kFamilyIndex2[i] : row.index2_formula),
        std::to_string(row.index2_families));
    if (n >= 9) {
      add(r, "closed form index 2" + at, std::to_string(count_closed_form(n, 2)),
          std::to_string(row.index2_families));
      add(r, "closed form index 3" + at, std::to_string(count_closed_form(n, 3)),
          std::to_string(row.index3_families));
    }
  }
}

std::vector<CatalogEntry> nonspanning_entries(std::size_t nmax) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries(nmax))
    if (expected_index(e.tag) != 1) out.push_back(e);
  return out;
}

void suite_partition(SuiteReport& r, std::size_t nmax) {
  for (const auto& e : nonspanning_entries(nmax)) {
    const PartitionCertificate c = partition_certificate(make(e));
    std::ostringstream actual;
    actual << "index " << c.index << ", volume " << c.volume
           << ", empty volume sum " << c.volume_sum
           << (c.volumes_equal_index ? ", all volumes = index"
                                     : ", some volume != index");
    r.checks.push_back({"partition " + label(e), c.holds,
                        "all volumes = index, sum = volume", actual.str()});
  }
}

void suite_spanning(SuiteReport& r, std::size_t nmax) {
  const std::pair<Tag, std::vector<long>> pair[] = {
      {Tag::E511, {2, 3, 5, 7}}, {Tag::E512, {3, 4, 5, 7}}};
  for (const auto& [tag, vols] : pair) {
    const LatticePolytope3 p = make({tag, {}});
    const std::string name = label({tag, {}});
    add(r, name + " index", "1", sublattice_index(p).get_str());
    add_bool(r, name + " has no unimodular tetrahedron",
             !has_unimodular_tetrahedron(p), "found one");
    std::vector<long> got;
    for (const auto& t : empty_tetrahedra(p)) got.push_back(t.volume.get_si());
    std::sort(got.begin(), got.end());
    add(r, name + " empty tetrahedra volumes", join(vols), join(got));
  }
  Classifier classifier;
  for (const auto& e : nonspanning_entries(nmax)) {
    const auto ext = spanning_extension(make(e));
    if (!ext) {
      add_bool(r, "spanning extension of " + label(e), false, "none found");
      continue;
    }
    const ClassificationResult c = classifier.classify(*ext);
    const auto* s = std::get_if<Spanning>(&c.verdict);
    add_bool(r, "spanning extension of " + label(e) + " has a witness",
             s && (s->witness || s->e51_match), describe(c.verdict));
  }
}

void suite_hstar(SuiteReport& r, std::size_t nmax) {
  for (const auto& e : nonspanning_entries(nmax)) {
    const LatticePolytope3 p = make(e);
    const std::string name = label(e);
    const std::vector<long> table = *tabulated_hstar(e);
    const std::vector<Int> expected(table.begin(), table.end());
    const HStarLawReport law = check_hstar_laws(p);
    add(r, name + " h*", to_string(make_hstar(expected)), to_string(law.hstar));
    add_bool(r, name + " Ehrhart dilations t<=4", ehrhart_check(p, 4),
             "dilation counts disagree");
    add_bool(r, name + " h2 >= (q-1)(1+h1)",
             law.inequality_applies && law.inequality_holds, "violated");
    const bool empty_tetra = p.size() == 4;
    add(r, name + " has gaps", empty_tetra ? "yes" : "no",
        law.gaps.empty() ? "no" : "yes");
  }
}

void suite_dim4(SuiteReport& r) {
  const Dim4Report d = dim4_example();
  add(r, "nonzero maximal minors", "(4, 2, 2, 2)", join(d.minors));
  add(r, "index from elementary divisors", "2", d.index.get_str());
  add(r, "gcd of minors equals index", d.index.get_str(), d.minors_gcd.get_str());
}

void suite_classification(SuiteReport& r, std::size_t nmax) {
  const ClassificationSuiteReport rep = verify_classification_suite(nmax, 1, 1);
  add(r, "contradictions", "0", std::to_string(rep.contradictions));
  add(r, "failures", "0", std::to_string(rep.failures.size()));
  for (const auto& f : rep.failures)
    add_bool(r, f.entry, false, f.what);
  for (Tag t : kExceptions) {
    const auto it = rep.exception_occurrences.find(t);
    const long seen = it == rep.exception_occurrences.end() ? 0 : it->second;
    if (make({t, {}}).size() <= nmax)
      add(r, label({t, {}}) + " occurrences", "1", std::to_string(seen));
  }
}

}  // namespace

SuiteReport run_suite(std::string_view suite, std::size_t nmax) {
  SuiteReport r{std::string(suite), {}};
  if (suite == "tables") {
    if (nmax < 5) throw std::invalid_argument("tables needs nmax >= 5");
    suite_tables(r, nmax);
  } else if (suite == "partition") {
    suite_partition(r, nmax);
  } else if (suite == "spanning") {
    suite_spanning(r, nmax);
  } else if (suite == "hstar") {
    suite_hstar(r, nmax);
  } else if (suite == "dim4") {
    suite_dim4(r);
  } else if (suite == "classification") {
    suite_classification(r, nmax);
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  return r;
}

std::string render_suite(const SuiteReport& r, bool as_json) {
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += !c.pass;
  if (as_json) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"expected", c.expected},
                        {"actual", c.actual}});
    json out{{"suite", r.suite},
             {"checks", checks},
             {"failed", failed},
             {"ok", failed == 0}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.pass)
      os << ": " << c.actual << '\n';
    else
      os << ": expected " << c.expected << ", got " << c.actual << '\n';
  }
  os << r.suite << ": " << r.checks.size() - failed << "/" << r.checks.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace lattice3
