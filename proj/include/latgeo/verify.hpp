// Desk-scale verification of the classification's concrete claims.  Each
// check re-derives one statement by bounded enumeration and reports PASS,
// FAIL, or REPORT; REPORT marks a line whose published value is a target
// with a documented escape hatch (the computed result is printed in full)
// or a reduced-scale rerun that cannot settle the full claim.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latgeo/classify.hpp"
#include "latgeo/search.hpp"

namespace latgeo {

enum class ClaimStatus { Pass, Fail, Report };

[[nodiscard]] inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Report: return "REPORT";
  }
  throw InternalError("unknown claim status");
}

struct ClaimResult {
  int id = 0;
  std::string label;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;  // reduced bounds; lines that cannot settle a claim at
                      // reduced scale are marked REPORT instead of PASS
  int jobs = 1;
  long long box_limit = 100'000'000;
};

namespace detail {

[[nodiscard]] inline SearchOptions engine_options(const VerifyOptions& v,
                                                  bool find_containers = false) {
  SearchOptions s;
  s.jobs = v.jobs;
  s.box_limit = v.box_limit;
  s.classify.box_limit = v.box_limit;
  s.classify.find_containers = find_containers;
  return s;
}

/// Fixed-seed random lattice polygon with vertices in [-10,10]^2.
[[nodiscard]] inline Polytope random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(-10, 10);
  std::uniform_int_distribution<int> count(3, 8);
  for (;;) {
    std::vector<Vec> pts;
    int m = count(rng);
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pts.push_back(Vec{coord(rng), coord(rng)});
    Polytope p = hull(pts);
    if (p.affine_dim() == 2) return p;
  }
}

/// Random affine lattice symmetry with a small linear part: a few unit
/// shears, a row permutation, sign flips, and a translation in [-3,3]^dim.
/// Small entries keep the mapped polytopes inside enumeration guards.
[[nodiscard]] inline UnimodularAffineMap random_unimodular_map(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<long long> shift(-3, 3);

  Mat m = Mat::identity(dim);
  for (int step = 0; step < 3; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c = sign(rng) ? 1 : -1;
    for (int col = 0; col < dim; ++col) m.at(i, col) = m.at(i, col) + c * m.at(j, col);
  }
  for (int i = dim - 1; i > 0; --i) {
    int j = pick(rng) % (i + 1);
    if (i != j)
      for (int col = 0; col < dim; ++col) std::swap(m.at(i, col), m.at(j, col));
  }
  for (int i = 0; i < dim; ++i)
    if (sign(rng))
      for (int col = 0; col < dim; ++col) m.at(i, col) = -m.at(i, col);

  Vec t(dim);
  for (int i = 0; i < dim; ++i) t[i] = shift(rng);
  return {std::move(m), t};
}

[[nodiscard]] inline Polytope apply_map(const UnimodularAffineMap& f, const Polytope& p) {
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) pts.push_back(f(v));
  return hull(std::move(pts));
}

[[nodiscard]] inline bool coords_within(const Polytope& p, long long bound) {
  for (const Vec& v : p.vertices())
    for (int c = 0; c < v.dim(); ++c)
      if (v[c] < -bound || v[c] > bound) return false;
  return true;
}

/// All primitive, lexicographically positive dual vectors with coordinates
/// in [-range, range]^3, for the brute-force width oracle.
[[nodiscard]] inline std::vector<Vec> primitive_duals_3d(long long range) {
  std::vector<Vec> out;
  for (long long a = -range; a <= range; ++a)
    for (long long b = -range; b <= range; ++b)
      for (long long c = -range; c <= range; ++c) {
        Vec y{a, b, c};
        if (!lex_positive(y) || !is_primitive(y)) continue;
        out.push_back(y);
      }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The eleven claims

/// 1. The area identity Vol = points + interior - 2 holds on random polygons.
[[nodiscard]] inline ClaimResult claim_pick_identity(
    [[maybe_unused]] const VerifyOptions& opts = {}) {
  ClaimResult r{1, "area identity on random lattice polygons", ClaimStatus::Pass, ""};
  std::mt19937_64 rng(0x5eed01);
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    Polytope p = detail::random_polygon(rng);
    if (!pick_identity_holds(p)) {
      r.status = ClaimStatus::Fail;
      std::ostringstream os;
      os << "identity fails at trial " << i << " with vertices";
      for (const Vec& v : p.vertices()) os << " (" << v[0].value() << "," << v[1].value() << ")";
      r.detail = os.str();
      return r;
    }
  }
  r.detail = "verified on " + std::to_string(trials) + " random polygons in [-10,10]^2";
  return r;
}

/// 2. Exactly four polygon classes of volume <= 4 have an interior point,
///    each with exactly one, and they match the four reference polygons.
[[nodiscard]] inline ClaimResult claim_minimal_interior_polygons(const VerifyOptions& opts = {}) {
  ClaimResult r{2, "four smallest polygons with an interior point", ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);

  std::set<CanonicalForm> with_interior;
  long long wrong_count = 0;
  for (const Polytope& p : enumerate_polygons(4, so)) {
    LatticePointSet pts = lattice_points(p, opts.box_limit);
    if (pts.relative_interior == 0) continue;
    if (pts.relative_interior != 1) ++wrong_count;
    with_interior.insert(canonical_form(p));
  }
  std::set<CanonicalForm> expected;
  for (const Polytope& p : smallest_interior_point_polygons()) expected.insert(canonical_form(p));

  if (with_interior == expected && wrong_count == 0) {
    r.detail = "volume <= 4 yields exactly 4 classes, each with interior count 1";
  } else {
    r.status = ClaimStatus::Fail;
    r.detail = "found " + std::to_string(with_interior.size()) +
               " classes with interior points (expected the 4 reference polygons); " +
               std::to_string(wrong_count) + " with interior count != 1";
  }
  return r;
}

/// 3. Every catalog member has no interior points, width >= 2, no projection
///    onto the doubled triangle, and therefore classifies Exceptional.
[[nodiscard]] inline ClaimResult claim_catalog_exceptional(const VerifyOptions& opts = {}) {
  ClaimResult r{3, "catalog members classify exceptional", ClaimStatus::Pass, ""};
  ClassifyOptions co;
  co.box_limit = opts.box_limit;
  co.find_containers = true;

  std::ostringstream os;
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    Classification c = classify_3d(catalog()[i], co);
    bool self_contained =
        std::find(c.containers.begin(), c.containers.end(), static_cast<int>(i) + 1) !=
        c.containers.end();
    if (c.tag != Tag3::Exceptional || c.interior_points != 0 || c.width < 2 || !self_contained) {
      r.status = ClaimStatus::Fail;
      os << (os.str().empty() ? "" : "; ") << "member " << i + 1 << ": tag=" << to_string(c.tag)
         << " interior=" << c.interior_points << " width=" << c.width.value();
    }
  }
  r.detail = r.status == ClaimStatus::Pass
                 ? "all 9 members: interior 0, width >= 2, no projection, self-embedding found"
                 : os.str();
  return r;
}

/// 4. Every vertex-only simplex class of volume <= 20 has width exactly 1,
///    and every corpus member whose lattice points are all vertices has at
///    most 8 of them.
[[nodiscard]] inline ClaimResult claim_flat_empty_simplices(const VerifyOptions& opts = {}) {
  ClaimResult r{4, "vertex-only simplices are flat; vertex-only corpus bound",
                ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);
  const Int vol_max = opts.fast ? 10 : 20;
  const long long budget = opts.fast ? 8 : 10;

  std::vector<CensusRecord> empties = enumerate_simplices(
      vol_max, [&](const Polytope& p) { return is_empty_polytope(p, opts.box_limit); }, so);
  long long wide = 0;
  for (const CensusRecord& rec : empties)
    if (lattice_width(rec.rep, opts.box_limit).width != 1) ++wide;

  std::vector<CensusRecord> corpus = hollow_census(budget, so);
  long long vertex_only = 0, oversized = 0, max_points = 0;
  for (const CensusRecord& rec : corpus) {
    if (rec.form.total_points != rec.form.vertex_count) continue;
    ++vertex_only;
    max_points = std::max(max_points, rec.form.total_points);
    if (rec.form.total_points > 8) ++oversized;
  }

  std::ostringstream os;
  os << empties.size() << " vertex-only simplex classes with volume <= " << vol_max.value()
     << (wide == 0 ? ", all of width 1" : ", " + std::to_string(wide) + " of width >= 2") << "; "
     << vertex_only << " vertex-only classes in the budget-" << budget
     << " corpus, largest point count " << max_points;
  r.detail = os.str();
  if (wide != 0 || oversized != 0) r.status = ClaimStatus::Fail;
  return r;
}

/// 5. Every white simplex class of volume <= 12 that is not flat is
///    equivalent to the doubled unit tetrahedron.
[[nodiscard]] inline ClaimResult claim_white_simplices(const VerifyOptions& opts = {}) {
  ClaimResult r{5, "white non-flat simplices match the doubled tetrahedron", ClaimStatus::Pass,
                ""};
  SearchOptions so = detail::engine_options(opts);
  const Int vol_max = opts.fast ? 10 : 12;

  const CanonicalForm doubled =
      canonical_form(dilate(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2));
  long long white_wide = 0, mismatched = 0;
  for (const CensusRecord& rec : enumerate_simplices(vol_max, {}, so)) {
    if (!is_white(rec.rep)) continue;
    if (lattice_width(rec.rep, opts.box_limit).width < 2) continue;
    ++white_wide;
    if (rec.form != doubled) ++mismatched;
  }
  std::ostringstream os;
  os << white_wide << " white non-flat simplex class" << (white_wide == 1 ? "" : "es")
     << " with volume <= " << vol_max.value() << "; " << mismatched
     << " differ from the doubled tetrahedron";
  r.detail = os.str();
  if (mismatched != 0 || white_wide == 0) r.status = ClaimStatus::Fail;
  return r;
}

/// 6. The union of exceptional simplex classes inside the six simplex
///    catalog members has 21 classes.  Escape hatch: on mismatch the full
///    list is printed and the line is marked REPORT.
[[nodiscard]] inline ClaimResult claim_exceptional_simplex_census(const VerifyOptions& opts = {}) {
  ClaimResult r{6, "exceptional simplex census inside the six simplex containers",
                ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);
  const std::size_t containers = opts.fast ? 2 : 6;

  std::map<CanonicalForm, Polytope> exceptional;
  for (std::size_t i = 0; i < containers; ++i)
    for (CensusRecord& rec : subpolytope_census(catalog()[i], so))
      if (rec.form.vertex_count == 4 && rec.cls.tag == Tag3::Exceptional)
        exceptional.emplace(std::move(rec.form), std::move(rec.rep));

  if (opts.fast) {
    // Reduced corpus: two containers cannot settle the full count; the
    // frozen regression value for this subset is 9.
    const std::size_t frozen = 9;
    if (exceptional.size() == frozen) {
      r.status = ClaimStatus::Report;
      r.detail = "fast mode covers 2 of 6 containers: 9 classes (matches the recorded value); "
                 "run the full mode for the complete census";
    } else {
      r.status = ClaimStatus::Fail;
      r.detail = "fast-mode census changed: " + std::to_string(exceptional.size()) +
                 " classes over 2 containers, previously 9";
    }
    return r;
  }

  if (exceptional.size() == 21) {
    r.detail = "union over the six containers has exactly 21 classes";
    return r;
  }
  r.status = ClaimStatus::Report;
  std::ostringstream os;
  os << "union has " << exceptional.size() << " classes, target 21; full list:";
  for (const auto& [form, rep] : exceptional) {
    os << "\n    volume " << form.volume.value() << ", " << form.total_points << " points:";
    for (const Vec& v : rep.vertices())
      os << " (" << v[0].value() << "," << v[1].value() << "," << v[2].value() << ")";
  }
  r.detail = os.str();
  return r;
}

/// 7. In the 4-dimensional simplex family the k-th member is vertex-only
///    exactly when gcd(k,6) = 1; the 5-dimensional companion is vertex-only;
///    both project onto the doubled triangle.
[[nodiscard]] inline ClaimResult claim_higher_dimensional_family(const VerifyOptions& opts = {}) {
  ClaimResult r{7, "four-dimensional family and five-dimensional companion", ClaimStatus::Pass,
                ""};
  SearchOptions so = detail::engine_options(opts);
  const Int k_max = opts.fast ? 30 : 60;

  SearchReport rep = verify_family(7, k_max, so);
  if (rep.anomalies.empty()) {
    r.detail = "k in [7," + std::to_string(k_max.value()) +
               "]: vertex-only iff gcd(k,6)=1, projections found; companion vertex-only";
  } else {
    r.status = ClaimStatus::Fail;
    std::ostringstream os;
    os << rep.anomalies.size() << " anomalies:";
    for (const std::string& a : rep.anomalies) os << " [" << a << "]";
    r.detail = os.str();
  }
  return r;
}

/// 8. Pyramids over the four one-interior-point polygons, with no interior
///    points and no relative-interior points on any non-base facet, are
///    claimed to reach apex height 6 and never exceed it.  The enumeration
///    is exhaustive up to height 10.
[[nodiscard]] inline ClaimResult claim_apex_height_bound(const VerifyOptions& opts = {}) {
  ClaimResult r{8, "apex height bound over one-interior-point bases", ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);

  SearchReport rep = apex_height_search(10, so);
  const bool none_high = rep.anomalies.empty();
  const bool reaches_six = rep.max_apex_height == 6;
  std::ostringstream os;
  os << rep.class_count << " admissible configurations up to height 10; largest apex height "
     << rep.max_apex_height.value() << " (claimed largest: 6); heights in 7..10: "
     << (none_high ? "none" : std::to_string(rep.anomalies.size()));
  r.detail = os.str();
  if (!none_high || !reaches_six) r.status = ClaimStatus::Fail;
  return r;
}

/// 9. Every corpus class of degree at most 1 is flat or projects onto the
///    doubled triangle.
[[nodiscard]] inline ClaimResult claim_low_degree_structure(const VerifyOptions& opts = {}) {
  ClaimResult r{9, "degree at most 1 forces flatness or a projection", ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);
  const long long budget = opts.fast ? 8 : 10;
  const Int vol_max = opts.fast ? 10 : 20;

  std::vector<CensusRecord> corpus = hollow_census(budget, so);
  for (CensusRecord& rec : enumerate_simplices(vol_max, {}, so)) corpus.push_back(std::move(rec));

  long long low_degree = 0, violations = 0;
  for (const CensusRecord& rec : corpus) {
    if (degree(rec.rep) > 1) continue;
    ++low_degree;
    if (rec.cls.tag != Tag3::Cayley && rec.cls.tag != Tag3::ProjectsTo2Delta2) ++violations;
  }
  std::ostringstream os;
  os << corpus.size() << " corpus classes, " << low_degree << " of degree <= 1, " << violations
     << " violations";
  r.detail = os.str();
  if (violations != 0 || low_degree == 0) r.status = ClaimStatus::Fail;
  return r;
}

/// 10. Canonical form, volume, point counts, degree, width, and the
///     classification tag are invariant under random affine lattice
///     symmetries.
[[nodiscard]] inline ClaimResult claim_invariance_under_maps(const VerifyOptions& opts = {}) {
  ClaimResult r{10, "invariants under random lattice symmetries", ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);
  const std::size_t poly_count = opts.fast ? 20 : 50;
  const int map_count = opts.fast ? 40 : 100;

  std::vector<Polytope> corpus = catalog();
  for (const CensusRecord& rec : hollow_census(7, so)) {
    if (corpus.size() >= poly_count) break;
    corpus.push_back(rec.rep);
  }

  ClassifyOptions co;
  co.box_limit = opts.box_limit;
  co.find_containers = false;

  std::mt19937_64 rng(0x5eed10);
  long long checked = 0, skipped = 0, violations = 0;
  std::ostringstream bad;
  for (const Polytope& p : corpus) {
    CanonicalForm base_form = canonical_form(p);
    Classification base_cls = classify_3d(p, co);
    int base_degree = degree(p);
    for (int m = 0; m < map_count; ++m) {
      UnimodularAffineMap f = detail::random_unimodular_map(rng, 3);
      Polytope q = detail::apply_map(f, p);
      // Keep dilates of the image inside the enumeration guards.
      if (!detail::coords_within(q, 50)) {
        ++skipped;
        continue;
      }
      ++checked;
      Classification cls = classify_3d(q, co);
      bool ok = canonical_form(q) == base_form && cls.tag == base_cls.tag &&
                cls.width == base_cls.width && cls.interior_points == base_cls.interior_points &&
                normalized_volume(q) == base_form.volume &&
                lattice_points(q, opts.box_limit).total == base_form.total_points &&
                degree(q) == base_degree;
      if (!ok) {
        ++violations;
        if (violations == 1) {
          bad << "; first violation: polytope with vertices";
          for (const Vec& v : p.vertices())
            bad << " (" << v[0].value() << "," << v[1].value() << "," << v[2].value() << ")";
        }
      }
    }
  }
  std::ostringstream os;
  os << corpus.size() << " polytopes x " << map_count << " maps: " << checked << " images checked, "
     << skipped << " skipped by the coordinate guard, " << violations << " violations"
     << bad.str();
  r.detail = os.str();
  if (violations != 0 || checked == 0) r.status = ClaimStatus::Fail;
  return r;
}

/// 11. The iterative width algorithm agrees with brute force over all
///     primitive dual vectors with coordinates in [-10,10] on every corpus
///     polytope with coordinates in [-5,5].
[[nodiscard]] inline ClaimResult claim_width_oracle(const VerifyOptions& opts = {}) {
  ClaimResult r{11, "width algorithm agrees with the brute-force oracle", ClaimStatus::Pass, ""};
  SearchOptions so = detail::engine_options(opts);
  const long long budget = opts.fast ? 6 : 8;
  const Int vol_max = opts.fast ? 8 : 12;

  std::vector<Polytope> corpus;
  for (const Polytope& p : catalog())
    if (detail::coords_within(p, 5)) corpus.push_back(p);
  for (const CensusRecord& rec : hollow_census(budget, so))
    if (detail::coords_within(rec.rep, 5)) corpus.push_back(rec.rep);
  for (const CensusRecord& rec : enumerate_simplices(vol_max, {}, so))
    if (detail::coords_within(rec.rep, 5)) corpus.push_back(rec.rep);

  const std::vector<Vec> duals = detail::primitive_duals_3d(10);
  long long mismatches = 0;
  std::ostringstream bad;
  for (const Polytope& p : corpus) {
    Int brute = detail::spread(p.vertices(), duals.front());
    for (const Vec& y : duals) brute = std::min(brute, detail::spread(p.vertices(), y));
    Int fast_width = lattice_width(p, opts.box_limit).width;
    if (fast_width != brute) {
      ++mismatches;
      if (mismatches == 1) {
        bad << "; first mismatch (" << fast_width.value() << " vs " << brute.value()
            << ") at vertices";
        for (const Vec& v : p.vertices())
          bad << " (" << v[0].value() << "," << v[1].value() << "," << v[2].value() << ")";
      }
    }
  }
  std::ostringstream os;
  os << corpus.size() << " corpus polytopes in [-5,5]^3 against " << duals.size()
     << " dual vectors: " << mismatches << " mismatches" << bad.str();
  r.detail = os.str();
  if (mismatches != 0 || corpus.empty()) r.status = ClaimStatus::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// Driver

[[nodiscard]] inline std::vector<ClaimResult> verify_claims(const VerifyOptions& opts = {}) {
  return {
      claim_pick_identity(opts),
      claim_minimal_interior_polygons(opts),
      claim_catalog_exceptional(opts),
      claim_flat_empty_simplices(opts),
      claim_white_simplices(opts),
      claim_exceptional_simplex_census(opts),
      claim_higher_dimensional_family(opts),
      claim_apex_height_bound(opts),
      claim_low_degree_structure(opts),
      claim_invariance_under_maps(opts),
      claim_width_oracle(opts),
  };
}

/// One line per claim: "[ 3] PASS   catalog members classify exceptional — ..."
[[nodiscard]] inline std::string format_claim_line(const ClaimResult& r) {
  std::ostringstream os;
  os << "[" << (r.id < 10 ? " " : "") << r.id << "] " << to_string(r.status);
  for (std::size_t i = to_string(r.status).size(); i < 7; ++i) os << ' ';
  os << r.label;
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

[[nodiscard]] inline bool all_claims_hold(const std::vector<ClaimResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const ClaimResult& r) { return r.status == ClaimStatus::Fail; });
}

}  // namespace latgeo
