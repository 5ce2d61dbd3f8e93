#include "lattice3/classify.hpp"

#include <random>
#include <sstream>

namespace lattice3 {

std::optional<CatalogEntry> verdict_entry(const Verdict& v) {
  if (const auto* s = std::get_if<Spanning>(&v)) {
    if (s->e51_match) return CatalogEntry{*s->e51_match, {}};
    return std::nullopt;
  }
  if (const auto* w = std::get_if<WidthOne>(&v)) return w->entry();
  if (const auto* f = std::get_if<FamilyMember>(&v)) return f->entry;
  if (const auto* e = std::get_if<ExceptionMatch>(&v))
    return CatalogEntry{e->name, {}};
  return std::nullopt;
}

std::string describe(const Verdict& v) {
  if (const auto* s = std::get_if<Spanning>(&v)) {
    if (s->witness) {
      std::string out = "spanning, unimodular tetrahedron";
      for (const auto& x : s->witness->vertices) out += " " + to_string(x);
      return out;
    }
    if (s->e51_match)
      return "spanning without unimodular tetrahedron: " +
             label({*s->e51_match, {}});
    return "spanning";
  }
  if (const auto* w = std::get_if<WidthOne>(&v))
    return "width one " + label(w->entry());
  if (const auto* f = std::get_if<FamilyMember>(&v))
    return "family " + label(f->entry);
  if (const auto* e = std::get_if<ExceptionMatch>(&v))
    return "exception " + label({e->name, {}});
  return "contradicts classification: " +
         std::get<ContradictsClassification>(v).reason;
}

namespace {

struct Segment {
  Point3 ends[2];
  Int length;
};

Segment layer_segment(std::vector<Point3> layer) {
  if (layer.size() < 2)
    throw NotTwoSegments("a lattice plane of the width functional holds a "
                         "single point");
  std::sort(layer.begin(), layer.end());
  const Point3 d = layer.back() - layer.front();
  for (const Point3& x : layer)
    if (!cross(x - layer.front(), d).is_zero())
      throw NotTwoSegments("a lattice plane of the width functional holds "
                           "non-collinear points");
  return {{layer.front(), layer.back()}, content(d)};
}

// Some x with <c, x> = 1; c must be primitive.
Point3 dual_unit(const Point3& c) {
  const ExtendedGcd g1 = ext_gcd(c.x, c.y);
  const ExtendedGcd g2 = ext_gcd(g1.g, c.z);
  if (g2.g != 1) throw std::logic_error("dual_unit: vector is not primitive");
  return {g2.s * g1.s, g2.s * g1.t, g2.t};
}

}  // namespace

WidthOne extract_width1_params(const LatticePolytope3& p) {
  if (sublattice_index(p) <= 1)
    throw std::invalid_argument("extract_width1_params: polytope is spanning");
  const WidthResult w = width(p);
  if (w.width != 1)
    throw std::invalid_argument("extract_width1_params: width is not one");
  const Point3& f = w.functional;
  Int lo = dot(f, p.vertices().front());
  for (const Point3& v : p.vertices()) lo = std::min(lo, Int(dot(f, v)));
  std::vector<Point3> layer[2];
  for (const Point3& x : p.lattice_points())
    layer[dot(f, x) == lo ? 0 : 1].push_back(x);
  const Segment seg[2] = {layer_segment(layer[0]), layer_segment(layer[1])};

  std::optional<WidthOne> best;
  for (int bottom = 0; bottom < 2; ++bottom) {
    const Segment& low = seg[bottom];
    const Segment& high = seg[1 - bottom];
    for (int o = 0; o < 2; ++o) {
      const Point3& origin = low.ends[o];
      const Point3 u = primitive(low.ends[1 - o] - origin);
      for (int s = 0; s < 2; ++s) {
        const Point3& start = high.ends[s];
        const Point3 dir = primitive(high.ends[1 - s] - start);
        const Point3 t = start - origin;
        // (u, x, t) is a lattice basis; dir = alpha u + beta x.
        const Point3 x = dual_unit(cross(t, u));
        const Int beta = det3(u, dir, t);
        const Int alpha = det3(dir, x, t);
        const Int q = abs(beta);
        Int r = alpha % q;
        if (r < 0) r += q;
        WidthOne cand{r.get_si(), q.get_si(), low.length.get_si(),
                      high.length.get_si()};
        if (!best || std::tie(cand.a, cand.p) > std::tie(best->a, best->p))
          best = cand;
      }
    }
  }
  if (!are_isomorphic(make(best->entry()), p))
    throw std::logic_error("extract_width1_params: " + label(best->entry()) +
                           " does not reproduce the input");
  return *best;
}

const std::vector<CatalogItem>& Classifier::candidates(std::size_t n) {
  std::lock_guard lock(mu_);
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, enumerate_nonspanning(n)).first;
  return it->second;
}

ClassificationResult Classifier::classify(const LatticePolytope3& p) {
  return classify(p, profile(p));
}

ClassificationResult Classifier::classify(const LatticePolytope3& p,
                                          const InvariantProfile& prof) {
  ClassificationResult r{ContradictsClassification{}, prof};
  if (prof.index == 1) {
    Spanning s;
    s.witness = has_unimodular_tetrahedron(p);
    if (!s.witness) {
      for (Tag t : {Tag::E511, Tag::E512})
        if (find_isomorphism(make({t, {}}), p)) s.e51_match = t;
      if (!s.e51_match) {
        r.verdict = ContradictsClassification{
            "spanning, no unimodular tetrahedron, and not isomorphic to "
            "E(5,1)^1 or E(5,1)^2"};
        return r;
      }
    }
    r.verdict = s;
    return r;
  }
  if (prof.width == 1) {
    try {
      r.verdict = extract_width1_params(p);
    } catch (const NotTwoSegments& e) {
      r.verdict = ContradictsClassification{
          std::string("width one and index > 1 but ") + e.what()};
    }
    return r;
  }
  const CanonicalForm form = canonical_form(p);
  for (const CatalogItem& item : candidates(p.size())) {
    if (!(item.form == form)) continue;
    auto phi = find_isomorphism(make(item.entry), p);
    if (!phi) throw std::logic_error("canonical forms agree without a map");
    if (is_family(item.entry.tag))
      r.verdict = FamilyMember{item.entry, *phi};
    else
      r.verdict = ExceptionMatch{item.entry.tag, *phi};
    return r;
  }
  std::ostringstream why;
  why << "width " << prof.width << " and index " << prof.index
      << ", but no family member or exception of size " << p.size()
      << " matches";
  r.verdict = ContradictsClassification{why.str()};
  return r;
}

ClassificationResult classify(const LatticePolytope3& p) {
  static Classifier shared;
  return shared.classify(p);
}

std::optional<LatticePolytope3> spanning_extension(const LatticePolytope3& p,
                                                   long r) {
  const Point3& v0 = p.vertices().front();
  std::vector<Point3> pts = p.vertices();
  pts.push_back(v0);
  for (long dx = -r; dx <= r; ++dx)
    for (long dy = -r; dy <= r; ++dy)
      for (long dz = -r; dz <= r; ++dz) {
        const Point3 x = v0 + Point3(dx, dy, dz);
        if (p.contains(x)) continue;
        pts.back() = x;
        LatticePolytope3 q = hull(pts);
        if (sublattice_index(q) == 1) return q;
      }
  return std::nullopt;
}

ClassificationSuiteReport verify_classification_suite(std::size_t nmax,
                                                      int scrambles,
                                                      std::uint64_t seed) {
  ClassificationSuiteReport rep;
  Classifier classifier;
  std::mt19937_64 rng(seed);
  for (const CatalogEntry& e : catalog_entries(nmax)) {
    ++rep.entries;
    const std::string name = label(e);
    const LatticePolytope3 p = make(e);
    const bool spanning = expected_index(e.tag) == 1;

    for (int s = 0; s < scrambles; ++s) {
      const LatticePolytope3 q = apply_map(random_unimodular_map(rng), p);
      const ClassificationResult r = classifier.classify(q);
      ++rep.classifications;
      if (std::holds_alternative<ContradictsClassification>(r.verdict))
        ++rep.contradictions;
      const auto got = verdict_entry(r.verdict);
      if (!got || *got != e)
        rep.failures.push_back({name, "classified as " + describe(r.verdict)});
    }

    if (!spanning) {
      const PartitionCertificate c = partition_certificate(p);
      ++rep.partitions_checked;
      if (!c.holds)
        rep.failures.push_back({name, "empty tetrahedra do not certify a "
                                      "partition into volume-index pieces"});
      if (e.tag != Tag::T) {
        ++rep.counts[p.size()][expected_index(e.tag)];
        if (is_exception(e.tag)) ++rep.exception_occurrences[e.tag];
      }
      const auto ext = spanning_extension(p);
      ++rep.spanning_checked;
      if (!ext) {
        rep.failures.push_back({name, "no spanning extension found"});
        continue;
      }
      const ClassificationResult r = classifier.classify(*ext);
      const auto* sp = std::get_if<Spanning>(&r.verdict);
      if (!sp || !(sp->witness || sp->e51_match))
        rep.failures.push_back(
            {name, "spanning extension classified as " + describe(r.verdict)});
    }
  }
  return rep;
}

}  // namespace lattice3
