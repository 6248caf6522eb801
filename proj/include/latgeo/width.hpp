// Lattice width: minimum spread of an integer linear functional, with the
// enumeration of all low-spread dual directions that the classifiers reuse.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/hbox.hpp"
#include "latgeo/polytope.hpp"

namespace latgeo {

/// A primitive dual direction together with the spread (max - min of the
/// functional over the polytope) it achieves.  Directions are expressed in
/// the polytope's hull coordinates, which coincide with ambient coordinates
/// for full-dimensional polytopes.
struct DualVectorEntry {
  DualVec direction;
  Int width = 0;

  [[nodiscard]] friend bool operator==(const DualVectorEntry&, const DualVectorEntry&) = default;
};

struct WidthResult {
  Int width = 0;
  std::vector<DualVec> directions;  // every primitive minimizer, sign-normalized
};

namespace detail {

[[nodiscard]] inline bool lex_positive(const Vec& y) {
  for (int i = 0; i < y.dim(); ++i) {
    if (y[i] > 0) return true;
    if (y[i] < 0) return false;
  }
  return false;  // zero vector
}

[[nodiscard]] inline bool is_primitive(const Vec& y) {
  Int g = 0;
  for (int i = 0; i < y.dim(); ++i) g = gcd(g, y[i]);
  return g == 1;
}

[[nodiscard]] inline Int spread(const std::vector<Vec>& points, const Vec& y) {
  Int lo = dot(y, points[0]);
  Int hi = lo;
  for (const Vec& v : points) {
    Int s = dot(y, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

/// Spread with early exit: returns nullopt as soon as the running spread
/// exceeds `cap`.  The scans below discard almost every candidate, so most
/// calls abort after a handful of vertices.
[[nodiscard]] inline std::optional<Int> spread_at_most(const std::vector<Vec>& points, const Vec& y,
                                                       Int cap) {
  Int lo = dot(y, points[0]);
  Int hi = lo;
  for (const Vec& v : points) {
    Int s = dot(y, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    if (hi - lo > cap) return std::nullopt;
  }
  return hi - lo;
}

}  // namespace detail

/// Enumerates every sign-normalized primitive direction whose spread over the
/// polytope is at most `max_width`, sorted by (spread, direction).  The
/// candidate region { y : all pairwise vertex differences have |<d,y>| <=
/// max_width } is bounded because the vertex differences span hull space.
[[nodiscard]] inline std::vector<DualVectorEntry> dual_vectors_up_to_width(
    const Polytope& p, Int max_width, long long scan_limit = 100'000'000) {
  int r = p.affine_dim();
  if (r == 0) return {};
  if (max_width < 0) return {};
  const std::vector<Vec>& everts = p.embedded_vertices();

  // One slab constraint per primitive difference direction.  A difference
  // m * u (u primitive, m >= 1) forces |<u, y>| <= max_width / m, and since
  // <u, y> is an integer the bound tightens to floor(max_width / m); only the
  // largest multiple per direction matters.
  std::map<Vec, Int> multiple;  // lex-positive primitive direction -> largest m
  for (std::size_t i = 0; i < everts.size(); ++i)
    for (std::size_t j = i + 1; j < everts.size(); ++j) {
      Vec d = everts[i] - everts[j];
      if (!detail::lex_positive(d)) d = -d;
      Int m = 0;
      for (int c = 0; c < r; ++c) m = gcd(m, d[c]);
      for (int c = 0; c < r; ++c) d[c] = exact_div(d[c], m);
      auto [it, fresh] = multiple.emplace(d, m);
      if (!fresh) it->second = std::max(it->second, m);
    }

  // The bounding-box solver enumerates constraint triples, so feed it a small
  // set: an affinely independent anchor (which already bounds the region)
  // plus the tightest remaining constraints.
  std::vector<std::pair<Vec, Int>> diffs(multiple.begin(), multiple.end());
  std::sort(diffs.begin(), diffs.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::pair<Vec, Int>> kept;
  {
    for (const auto& dm : diffs)
      if (static_cast<int>(kept.size()) < r) {
        Mat trial(static_cast<int>(kept.size()) + 1, r);
        for (std::size_t q = 0; q < kept.size(); ++q)
          for (int c = 0; c < r; ++c) trial.at(static_cast<int>(q), c) = kept[q].first[c];
        for (int c = 0; c < r; ++c) trial.at(static_cast<int>(kept.size()), c) = dm.first[c];
        if (rank(trial) == static_cast<int>(kept.size()) + 1) kept.push_back(dm);
      }
    if (static_cast<int>(kept.size()) < r)
      throw InternalError("vertex differences fail to span the hull space");
    const std::size_t cap = 6;
    for (const auto& dm : diffs) {
      if (kept.size() >= cap) break;
      if (std::find(kept.begin(), kept.end(), dm) == kept.end()) kept.push_back(dm);
    }
  }
  std::vector<HalfSpace> slab;
  slab.reserve(kept.size() * 2);
  for (const auto& [u, m] : kept) {
    Int b = max_width.value() / m.value();  // exact floor: both nonnegative
    slab.push_back({u, b});
    slab.push_back({-u, b});
  }

  IntBox box = bounding_box(slab, r);
  std::vector<DualVectorEntry> out;
  for_each_lattice_point(box, scan_limit, [&](const Vec& y) {
    if (!detail::lex_positive(y) || !detail::is_primitive(y)) return;
    if (std::optional<Int> w = detail::spread_at_most(everts, y, max_width)) out.push_back({y, *w});
  });
  std::sort(out.begin(), out.end(), [](const DualVectorEntry& a, const DualVectorEntry& b) {
    if (a.width != b.width) return a.width < b.width;
    return a.direction < b.direction;
  });
  return out;
}

/// Lattice width of the polytope within its affine hull, with every
/// minimizing direction.  A point has width 0 with no directions.
[[nodiscard]] inline WidthResult lattice_width(const Polytope& p,
                                               long long scan_limit = 100'000'000) {
  int r = p.affine_dim();
  if (r == 0) return {0, {}};
  const std::vector<Vec>& everts = p.embedded_vertices();

  // Coordinate directions and facet normals give upper bounds, so the true
  // width appears among the directions of spread at most the best of them;
  // a tight initial bound keeps the candidate region small.
  Int bound = detail::spread(everts, Vec::unit(r, 0));
  for (int i = 1; i < r; ++i) bound = std::min(bound, detail::spread(everts, Vec::unit(r, i)));
  for (const Facet& f : p.facets()) bound = std::min(bound, detail::spread(everts, f.normal));

  std::vector<DualVectorEntry> entries = dual_vectors_up_to_width(p, bound, scan_limit);
  if (entries.empty()) throw InternalError("width scan missed its own upper bound");

  WidthResult result;
  result.width = entries.front().width;
  for (const DualVectorEntry& e : entries)
    if (e.width == result.width) result.directions.push_back(e.direction);
  return result;
}

}  // namespace latgeo
