// Bounded enumeration engines: simplex enumeration by Hermite normal form,
// polygon enumeration by vertex growth, sub-polytope censuses, the bounded
// apex search over one-interior-point bases, and the two higher-dimensional
// example families.
#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latgeo/classify.hpp"
#include "latgeo/equivalence.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/polytope.hpp"
#include "latgeo/width.hpp"

namespace latgeo {

struct SearchOptions {
  int jobs = 1;
  long long box_limit = 100'000'000;
  Int vol_guard = 40;              // enumerate_simplices / enumerate_polygons
  long long point_limit = 40;      // subpolytope_census container size
  Int k_guard = 120;               // verify_family upper bound
  Int seed_vol_max = 5;            // hollow_census simplex seeds
  long long max_states = 200'000;  // breadth-first engines
  ClassifyOptions classify;
};

/// One equivalence class produced by an engine.
struct CensusRecord {
  CanonicalForm form;
  Polytope rep;
  Classification cls;
  std::string source;
};

/// Aggregate statistics for an engine run.
struct SearchReport {
  std::string engine;
  std::vector<std::pair<std::string, long long>> parameters;
  std::map<std::string, long long> tag_counts;
  long long class_count = 0;
  Int max_volume = 0;
  Int max_apex_height = -1;  // -1 when the engine has no apex notion
  std::vector<std::string> anomalies;
};

/// Rebuilds a representative polytope from a canonical form: the convex hull
/// of the origin and the matrix columns in ambient dimension affine_dim.
[[nodiscard]] inline Polytope polytope_from_canonical(const CanonicalForm& f) {
  if (f.affine_dim < 2) throw PreconditionError("canonical rebuild needs dimension >= 2");
  std::vector<Vec> pts{Vec::zero(f.affine_dim)};
  for (int c = 0; c < f.matrix.cols(); ++c) {
    Vec v = Vec::zero(f.affine_dim);
    for (int r = 0; r < f.affine_dim; ++r) v[r] = f.matrix.at(r, c);
    pts.push_back(v);
  }
  return hull(pts);
}

namespace detail {

/// Compact exact identity of a finite point set (must be sorted by the
/// caller) used to dedup breadth-first states cheaply before any
/// canonical-form work.  Census polytopes live in small coordinate ranges;
/// the guard keeps the encoding honest.
[[nodiscard]] inline std::string point_set_key(const std::vector<Vec>& pts) {
  std::string key;
  key.reserve(pts.size() * 3);
  for (const Vec& x : pts)
    for (int c = 0; c < x.dim(); ++c) {
      long long v = x[c].value();
      if (v < -100 || v > 100) throw ResourceLimitError("census coordinates out of key range");
      key.push_back(static_cast<char>(v + 100));
    }
  return key;
}

/// Runs body(0..count-1) on up to `jobs` threads.  The first exception is
/// rethrown on the calling thread after all workers finish.
inline void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& body) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

/// Deterministic tie-break between representatives of the same class.
[[nodiscard]] inline bool rep_less(const Polytope& a, const Polytope& b) {
  return a.vertices() < b.vertices();
}

/// Deduplicates (form, polytope) candidates into class representatives,
/// keeping the smallest representative per class; output sorted by form.
[[nodiscard]] inline std::vector<std::pair<CanonicalForm, Polytope>> dedup_classes(
    std::vector<std::pair<CanonicalForm, Polytope>> cands) {
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (auto c = a.first <=> b.first; c != 0) return c < 0;
    return rep_less(a.second, b.second);
  });
  std::vector<std::pair<CanonicalForm, Polytope>> out;
  for (auto& cp : cands)
    if (out.empty() || out.back().first != cp.first) out.push_back(std::move(cp));
  return out;
}

/// Classifies every class in parallel and assembles records in sorted order.
[[nodiscard]] inline std::vector<CensusRecord> make_records(
    std::vector<std::pair<CanonicalForm, Polytope>> classes, const std::string& source,
    const SearchOptions& opts) {
  std::vector<std::optional<Classification>> cls(classes.size());
  parallel_for(opts.jobs, classes.size(),
               [&](std::size_t i) { cls[i] = classify_3d(classes[i].second, opts.classify); });
  std::vector<CensusRecord> records;
  records.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    records.push_back({std::move(classes[i].first), std::move(classes[i].second),
                       *std::move(cls[i]), source});
  return records;
}

}  // namespace detail

/// Tag counts, volume maximum, and container anomalies for a census.
[[nodiscard]] inline SearchReport summarize(std::string engine,
                                            std::vector<std::pair<std::string, long long>> params,
                                            const std::vector<CensusRecord>& records) {
  SearchReport rep;
  rep.engine = std::move(engine);
  rep.parameters = std::move(params);
  rep.class_count = static_cast<long long>(records.size());
  for (const CensusRecord& r : records) {
    rep.tag_counts[to_string(r.cls.tag)] += 1;
    rep.max_volume = std::max(rep.max_volume, r.form.volume);
    if (r.cls.tag == Tag3::Exceptional && r.cls.containers.empty())
      rep.anomalies.push_back("class without container: volume " +
                              std::to_string(r.form.volume.value()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Simplex enumeration

/// Every equivalence class of full-dimensional 3-simplices with normalized
/// volume <= vol_max that satisfies `filter`, exactly once.  A class of
/// volume V is the hull of the origin and the columns of a lower-triangular
/// matrix with positive diagonal product V and below-diagonal entries reduced
/// modulo the column's diagonal; enumerating all such matrices covers every
/// class, and canonical forms remove duplicates.
[[nodiscard]] inline std::vector<CensusRecord> enumerate_simplices(
    Int vol_max, const std::function<bool(const Polytope&)>& filter = {},
    const SearchOptions& opts = {}) {
  if (vol_max < 1) throw PreconditionError("simplex enumeration needs vol_max >= 1");
  if (vol_max > opts.vol_guard)
    throw ResourceLimitError("simplex enumeration: vol_max exceeds guard");

  std::vector<Mat> hnfs;
  for (long long v = 1; v <= vol_max.value(); ++v)
    for (long long d0 = 1; d0 <= v; ++d0) {
      if (v % d0 != 0) continue;
      for (long long d1 = 1; d1 * d0 <= v; ++d1) {
        if ((v / d0) % d1 != 0) continue;
        long long d2 = v / (d0 * d1);
        for (long long h10 = 0; h10 < d0; ++h10)
          for (long long h20 = 0; h20 < d0; ++h20)
            for (long long h21 = 0; h21 < d1; ++h21) {
              Mat h(3, 3);
              h.at(0, 0) = d0;
              h.at(1, 0) = h10;
              h.at(2, 0) = h20;
              h.at(1, 1) = d1;
              h.at(2, 1) = h21;
              h.at(2, 2) = d2;
              hnfs.push_back(h);
            }
      }
    }

  std::mutex sink_mutex;
  std::vector<std::pair<CanonicalForm, Polytope>> cands;
  detail::parallel_for(opts.jobs, hnfs.size(), [&](std::size_t i) {
    std::vector<Vec> pts{Vec::zero(3)};
    for (int c = 0; c < 3; ++c) {
      Vec v = Vec::zero(3);
      for (int r = 0; r < 3; ++r) v[r] = hnfs[i].at(r, c);
      pts.push_back(v);
    }
    Polytope p = hull(pts);
    if (filter && !filter(p)) return;
    CanonicalForm f = canonical_form(p, {16, opts.box_limit});
    std::lock_guard<std::mutex> lock(sink_mutex);
    cands.push_back({std::move(f), std::move(p)});
  });

  return detail::make_records(detail::dedup_classes(std::move(cands)),
                              "enumerate_simplices vol_max=" + std::to_string(vol_max.value()),
                              opts);
}

// ---------------------------------------------------------------------------
// Polygon enumeration

/// Every equivalence class of lattice polygons with normalized volume
/// <= vol_max, in ambient dimension 2.  Seeds are the triangle classes from
/// 2x2 lower-triangular matrices; growth adds one new vertex at a time.  Any
/// polygon with more than three vertices stays convex-position after deleting
/// a vertex, so repeatedly deleting vertices reaches a triangle and the
/// reverse growth is exhaustive.
[[nodiscard]] inline std::vector<Polytope> enumerate_polygons(Int vol_max,
                                                              const SearchOptions& opts = {}) {
  if (vol_max < 1) throw PreconditionError("polygon enumeration needs vol_max >= 1");
  if (vol_max > opts.vol_guard)
    throw ResourceLimitError("polygon enumeration: vol_max exceeds guard");

  std::map<CanonicalForm, Polytope> found;
  std::vector<Polytope> frontier;
  for (long long v = 1; v <= vol_max.value(); ++v)
    for (long long d0 = 1; d0 <= v; ++d0) {
      if (v % d0 != 0) continue;
      long long d1 = v / d0;
      for (long long h10 = 0; h10 < d0; ++h10) {
        Polytope p = hull({{0, 0}, {d0, h10}, {0, d1}});
        CanonicalForm f = canonical_form(p, {16, opts.box_limit});
        if (found.emplace(std::move(f), p).second) frontier.push_back(p);
      }
    }

  while (!frontier.empty()) {
    if (static_cast<long long>(found.size()) > opts.max_states)
      throw ResourceLimitError("polygon enumeration: state guard exceeded");

    std::mutex sink_mutex;
    std::vector<std::pair<CanonicalForm, Polytope>> children;
    detail::parallel_for(opts.jobs, frontier.size(), [&](std::size_t i) {
      const Polytope& p = frontier[i];
      const std::vector<Vec>& verts = p.vertices();

      // A new vertex w keeps volume <= vol_max only if every triangle it
      // forms with two current vertices has volume <= vol_max.
      std::vector<HalfSpace> region;
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = 0; b < verts.size(); ++b) {
          if (a == b) continue;
          Vec e = verts[b] - verts[a];
          Vec normal{-e[1], e[0]};  // det(e, w - verts[a]) = <normal, w - verts[a]>
          region.push_back({normal, vol_max + dot(normal, verts[a])});
          region.push_back({Vec{e[1], -e[0]}, vol_max - dot(normal, verts[a])});
        }
      IntBox box = bounding_box(region, 2);
      std::vector<std::pair<CanonicalForm, Polytope>> local;
      for_each_lattice_point(box, opts.box_limit, [&](const Vec& w) {
        if (p.contains(w)) return;
        std::vector<Vec> grown = verts;
        grown.push_back(w);
        Polytope child = hull(grown);
        if (child.vertices().size() != verts.size() + 1) return;
        if (normalized_volume(child) > vol_max) return;
        local.push_back({canonical_form(child, {16, opts.box_limit}), std::move(child)});
      });
      std::lock_guard<std::mutex> lock(sink_mutex);
      for (auto& c : local) children.push_back(std::move(c));
    });

    frontier.clear();
    for (auto& [f, child] : detail::dedup_classes(std::move(children)))
      if (found.emplace(std::move(f), child).second) frontier.push_back(child);
  }

  std::vector<Polytope> out;
  out.reserve(found.size());
  for (auto& [f, p] : found) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Sub-polytope census

/// All equivalence classes of full-dimensional polytopes of the form conv(S)
/// with S a subset of q's lattice points.  Descent: deleting one hull vertex
/// from the point set and re-hulling reaches every strict sub-polytope,
/// because a strict sub-polytope omits at least one vertex of its container.
[[nodiscard]] inline std::vector<CensusRecord> subpolytope_census(const Polytope& q,
                                                                  const SearchOptions& opts = {}) {
  if (q.ambient_dim() != 3 || q.affine_dim() != 3)
    throw PreconditionError("sub-polytope census requires a full-dimensional 3-polytope");
  if (lattice_points(q, opts.box_limit).total > opts.point_limit)
    throw ResourceLimitError("sub-polytope census: container has too many lattice points");

  // Sub-polytopes of a 40-point container can exceed the default vertex
  // guard of canonical_form; the census raises it.
  const CanonicalOptions census_canon{30, opts.box_limit};

  // States are identified by their exact lattice-point set (cheap), and only
  // distinct states are canonicalized; many deletion orders reach the same
  // sub-polytope, so keying the visited set on point sets rather than
  // canonical forms keeps the hot loop free of canonical-form searches.
  struct State {
    Polytope poly;
    std::vector<Vec> pts;
  };
  std::set<std::string> visited;
  std::map<CanonicalForm, Polytope> found;
  std::vector<State> frontier;
  {
    std::vector<Vec> qpts = lattice_points(q, opts.box_limit).points;
    std::sort(qpts.begin(), qpts.end());
    visited.insert(detail::point_set_key(qpts));
    found.emplace(canonical_form(q, census_canon), q);
    frontier.push_back({q, std::move(qpts)});
  }

  while (!frontier.empty()) {
    if (static_cast<long long>(visited.size()) > opts.max_states)
      throw ResourceLimitError("sub-polytope census: state guard exceeded");

    std::mutex sink_mutex;
    std::vector<State> next;
    detail::parallel_for(opts.jobs, frontier.size(), [&](std::size_t i) {
      const State& s = frontier[i];
      for (const Vec& v : s.poly.vertices()) {
        std::vector<Vec> rest;
        rest.reserve(s.pts.size() - 1);
        for (const Vec& x : s.pts)
          if (x != v) rest.push_back(x);
        if (rest.size() < 4) continue;
        Polytope child = hull(rest);
        if (child.affine_dim() != 3) continue;
        // The child's lattice points are exactly the parent's points that
        // satisfy all child facet inequalities.
        std::vector<Vec> child_pts;
        for (const Vec& x : rest) {
          bool inside = true;
          for (const Facet& f : child.facets())
            if (dot(f.normal, x) < f.offset) {
              inside = false;
              break;
            }
          if (inside) child_pts.push_back(x);
        }
        std::string key = detail::point_set_key(child_pts);
        std::lock_guard<std::mutex> lock(sink_mutex);
        if (visited.insert(std::move(key)).second)
          next.push_back({std::move(child), std::move(child_pts)});
      }
    });

    // Canonicalize the new states (the expensive step) in parallel, then
    // keep only states whose equivalence class is new: equivalent polytopes
    // have equivalent sub-polytope trees, so one representative per class
    // covers all classes below it.
    std::vector<std::optional<CanonicalForm>> forms(next.size());
    detail::parallel_for(opts.jobs, next.size(), [&](std::size_t i) {
      forms[i] = canonical_form(next[i].poly, census_canon);
    });
    frontier.clear();
    for (std::size_t i = 0; i < next.size(); ++i)
      if (found.emplace(std::move(*forms[i]), next[i].poly).second)
        frontier.push_back(std::move(next[i]));
  }

  std::vector<std::pair<CanonicalForm, Polytope>> classes;
  classes.reserve(found.size());
  for (auto& [f, p] : found) classes.push_back({f, p});
  return detail::make_records(std::move(classes), "subpolytope_census", opts);
}

// ---------------------------------------------------------------------------
// Bounded apex search

/// The four polygons with normalized volume at most 4 and an interior
/// lattice point (each has exactly one).
[[nodiscard]] inline const std::vector<Polytope>& smallest_interior_point_polygons() {
  static const std::vector<Polytope> polys = [] {
    std::vector<Polytope> v;
    v.push_back(hull({{1, 0}, {0, 1}, {-1, -1}}));
    v.push_back(hull({{1, 0}, {-1, 0}, {0, 2}}));
    v.push_back(hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    v.push_back(hull({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}));
    return v;
  }();
  return polys;
}

/// Pyramids conv(F x {0}, (d1,d2,d3)) over the four one-interior-point bases
/// with 0 <= d1,d2 < d3 <= height_max are admissible when the pyramid has no
/// interior lattice points and every facet other than the base has no
/// relative-interior lattice points.  Reports the largest admissible apex
/// height; heights of 7 or more are anomalies.
[[nodiscard]] inline SearchReport apex_height_search(Int height_max,
                                                     const SearchOptions& opts = {}) {
  if (height_max < 7)
    throw PreconditionError("apex search needs height_max >= 7 to test the bound");

  struct Config {
    int base;
    long long d1, d2, d3;
  };
  std::vector<Config> configs;
  for (int base = 0; base < 4; ++base)
    for (long long d3 = 1; d3 <= height_max.value(); ++d3)
      for (long long d1 = 0; d1 < d3; ++d1)
        for (long long d2 = 0; d2 < d3; ++d2) configs.push_back({base, d1, d2, d3});

  std::mutex sink_mutex;
  std::vector<Config> admissible;
  detail::parallel_for(opts.jobs, configs.size(), [&](std::size_t i) {
    const Config& c = configs[i];
    const Polytope& base2 = smallest_interior_point_polygons()[c.base];
    std::vector<Vec> pts;
    for (const Vec& v : base2.vertices()) pts.push_back(Vec{v[0], v[1], 0});
    pts.push_back(Vec{c.d1, c.d2, c.d3});
    Polytope p = hull(pts);

    if (lattice_points(p, opts.box_limit).interior != 0) return;
    const Vec base_normal = Vec::unit(3, 2);
    for (int fi = 0; fi < static_cast<int>(p.facets().size()); ++fi) {
      const Facet& f = p.facets()[fi];
      if (f.normal == base_normal && f.offset == 0) continue;  // the base polygon
      if (relative_interior_count(facet_polytope(p, fi), opts.box_limit) != 0) return;
    }
    std::lock_guard<std::mutex> lock(sink_mutex);
    admissible.push_back(c);
  });

  std::sort(admissible.begin(), admissible.end(), [](const Config& a, const Config& b) {
    return std::tie(a.d3, a.base, a.d1, a.d2) < std::tie(b.d3, b.base, b.d1, b.d2);
  });

  SearchReport rep;
  rep.engine = "apex_height_search";
  rep.parameters = {{"height_max", height_max.value()}};
  rep.class_count = static_cast<long long>(admissible.size());
  for (const Config& c : admissible) {
    rep.max_apex_height = std::max(rep.max_apex_height, Int(c.d3));
    if (c.d3 >= 7)
      rep.anomalies.push_back("admissible apex height " + std::to_string(c.d3) + " over base " +
                              std::to_string(c.base + 1) + " at (" + std::to_string(c.d1) + "," +
                              std::to_string(c.d2) + ")");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Higher-dimensional example family

/// The 4-dimensional simplex family indexed by k >= 7 and the companion
/// 5-dimensional simplex: checks that the k-th member has no non-vertex
/// lattice points exactly when gcd(k,6) = 1, that the 5-dimensional simplex
/// has none, and that both project onto the doubled triangle.
[[nodiscard]] inline SearchReport verify_family(Int k_min, Int k_max,
                                                const SearchOptions& opts = {}) {
  if (k_min < 7 || k_max < k_min) throw PreconditionError("family check needs 7 <= k_min <= k_max");
  if (k_max > opts.k_guard) throw ResourceLimitError("family check: k_max exceeds guard");

  std::mutex sink_mutex;
  std::vector<std::pair<long long, std::string>> anomalies;
  std::size_t count = static_cast<std::size_t>(k_max.value() - k_min.value() + 1);
  detail::parallel_for(opts.jobs, count, [&](std::size_t i) {
    long long k = k_min.value() + static_cast<long long>(i);
    Polytope s = hull({{1, 0, 0, 0},
                       {0, 1, 0, 0},
                       {0, 0, 1, 0},
                       {0, 0, 0, 1},
                       {2, 2, 3, k - 6}});
    std::string bad;
    bool empty = is_empty_polytope(s, opts.box_limit);
    bool coprime = gcd(Int(k), 6) == 1;
    if (empty != coprime)
      bad = "k=" + std::to_string(k) + ": vertex-only=" + (empty ? "yes" : "no") +
            " but gcd(k,6)=" + std::to_string(gcd(Int(k), 6).value());
    else if (!projects_onto_2delta2(s, opts.box_limit))
      bad = "k=" + std::to_string(k) + ": no projection onto the doubled triangle";
    if (!bad.empty()) {
      std::lock_guard<std::mutex> lock(sink_mutex);
      anomalies.push_back({k, bad});
    }
  });

  Polytope t = hull({{0, 0, 0, 0, 0},
                     {1, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0},
                     {0, 0, 1, 0, 0},
                     {1, 1, 1, 6, 0},
                     {2, 3, 4, 0, 9}});
  if (!is_empty_polytope(t, opts.box_limit))
    anomalies.push_back({k_max.value() + 1, "5-dimensional simplex has a non-vertex lattice point"});
  else if (!projects_onto_2delta2(t, opts.box_limit))
    anomalies.push_back({k_max.value() + 1,
                         "5-dimensional simplex: no projection onto the doubled triangle"});

  std::sort(anomalies.begin(), anomalies.end());
  SearchReport rep;
  rep.engine = "verify_family";
  rep.parameters = {{"k_min", k_min.value()}, {"k_max", k_max.value()}};
  rep.class_count = static_cast<long long>(count);
  for (auto& [k, msg] : anomalies) rep.anomalies.push_back(std::move(msg));
  return rep;
}

// ---------------------------------------------------------------------------
// Hollow corpus generator

/// Grows a corpus of interior-point-free 3-polytopes: seeds are the
/// vertex-only simplex classes of volume <= seed_vol_max, and each step
/// adjoins one outside lattice point whose distance beyond every violated
/// facet is at most 2, keeping hulls that stay interior-point-free within the
/// lattice-point budget.  A generator, not a complete enumeration.
[[nodiscard]] inline std::vector<CensusRecord> hollow_census(long long point_budget,
                                                             const SearchOptions& opts = {}) {
  if (point_budget < 5) throw PreconditionError("hollow corpus needs point_budget >= 5");

  std::vector<CensusRecord> seeds = enumerate_simplices(
      opts.seed_vol_max, [&](const Polytope& p) { return is_empty_polytope(p, opts.box_limit); },
      opts);

  // Same breadth-first scheme as the sub-polytope census: states dedup on
  // exact point sets, canonical forms are computed once per new state, and
  // only states opening a new equivalence class are expanded (the growth rule
  // is equivariant, so equivalent states grow equivalent families).
  std::set<std::string> visited;
  std::map<CanonicalForm, Polytope> found;
  std::vector<Polytope> frontier;
  for (CensusRecord& r : seeds) {
    std::vector<Vec> pts = lattice_points(r.rep, opts.box_limit).points;
    std::sort(pts.begin(), pts.end());
    visited.insert(detail::point_set_key(pts));
    if (found.emplace(std::move(r.form), r.rep).second) frontier.push_back(std::move(r.rep));
  }

  while (!frontier.empty()) {
    if (static_cast<long long>(visited.size()) > opts.max_states)
      throw ResourceLimitError("hollow corpus: state guard exceeded");

    std::mutex sink_mutex;
    std::vector<Polytope> next;
    detail::parallel_for(opts.jobs, frontier.size(), [&](std::size_t i) {
      const Polytope& p = frontier[i];
      std::vector<Vec> pts = lattice_points(p, opts.box_limit).points;
      // A child hull contains all of p's lattice points plus the new one, so
      // a state already at the budget cannot grow.
      if (static_cast<long long>(pts.size()) >= point_budget) return;

      std::vector<HalfSpace> relaxed;
      for (const Facet& f : p.facets()) relaxed.push_back({-f.normal, 2 - f.offset});
      IntBox box = bounding_box(relaxed, 3);

      for_each_lattice_point(box, opts.box_limit, [&](const Vec& w) {
        // The growth region is the polytope relaxed by 2 along every facet,
        // not merely its bounding box: a candidate must sit at lattice
        // distance <= 2 beyond each facet it violates.
        for (const Facet& f : p.facets())
          if (dot(f.normal, w) < f.offset - Int(2)) return;
        if (p.contains(w)) return;
        std::vector<Vec> grown = pts;
        grown.push_back(w);
        Polytope child = hull(grown);
        LatticePointSet child_pts = lattice_points(child, opts.box_limit);
        if (child_pts.total > point_budget || child_pts.interior != 0) return;
        std::vector<Vec> child_sorted = std::move(child_pts.points);
        std::sort(child_sorted.begin(), child_sorted.end());
        std::string key = detail::point_set_key(child_sorted);
        std::lock_guard<std::mutex> lock(sink_mutex);
        if (visited.insert(std::move(key)).second) next.push_back(std::move(child));
      });
    });

    std::vector<std::optional<CanonicalForm>> forms(next.size());
    detail::parallel_for(opts.jobs, next.size(), [&](std::size_t i) {
      forms[i] = canonical_form(next[i], {30, opts.box_limit});
    });
    frontier.clear();
    for (std::size_t i = 0; i < next.size(); ++i)
      if (found.emplace(std::move(*forms[i]), next[i]).second)
        frontier.push_back(std::move(next[i]));
  }

  std::vector<std::pair<CanonicalForm, Polytope>> classes;
  classes.reserve(found.size());
  for (auto& [f, p] : found) classes.push_back({f, p});
  return detail::make_records(std::move(classes),
                              "hollow_census budget=" + std::to_string(point_budget), opts);
}

}  // namespace latgeo
