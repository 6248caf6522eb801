// Classification of 3-dimensional lattice polytopes without interior lattice
// points: Cayley structure, projections onto the doubled unimodular triangle,
// and the exceptional catalog with embedding containers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latgeo/equivalence.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/polytope.hpp"
#include "latgeo/width.hpp"

namespace latgeo {

/// The nine maximal exceptional polytopes.  External interfaces index them
/// 1-based: catalog()[i] is polytope number i + 1.
[[nodiscard]] inline const std::vector<Polytope>& catalog() {
  static const std::vector<Polytope> polys = [] {
    std::vector<Polytope> v;
    v.push_back(hull({{0, 0, 0}, {1, 0, 0}, {2, 5, 0}, {3, 0, 5}}));
    v.push_back(hull({{0, 0, 0}, {3, 0, 0}, {1, 3, 0}, {2, 0, 3}}));
    v.push_back(hull({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    v.push_back(hull({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 2}}));
    v.push_back(hull({{0, 0, 0}, {4, 0, 0}, {2, 4, 0}, {1, 0, 2}}));
    v.push_back(hull({{0, 0, 0}, {6, 0, 0}, {0, 3, 0}, {0, 0, 2}}));
    v.push_back(hull({{2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {1, 1, 2}}));
    v.push_back(hull({{1, 0, 0}, {-1, 0, 0}, {0, 2, 0}, {2, 0, 2}, {0, 0, 2}, {1, 2, 2}}));
    v.push_back(hull({{1, 0, 0},
                      {-1, 0, 0},
                      {0, 1, 0},
                      {0, -1, 0},
                      {2, 1, 2},
                      {0, 1, 2},
                      {1, 2, 2},
                      {1, 0, 2}}));
    return v;
  }();
  return polys;
}

/// The doubled unimodular triangle conv(0, 2e1, 2e2), the common projection
/// target.
[[nodiscard]] inline const Polytope& doubled_triangle() {
  static const Polytope t = hull({{0, 0}, {2, 0}, {0, 2}});
  return t;
}

namespace detail {

[[nodiscard]] inline const CanonicalForm& doubled_triangle_form() {
  static const CanonicalForm f = canonical_form(doubled_triangle());
  return f;
}

/// Equivalence with the doubled triangle, decided directly: a 2-dimensional
/// triangle of normalized volume 4 whose edge vectors are all divisible by 2
/// is twice a volume-1 triangle, and every volume-1 triangle is a unimodular
/// copy of the standard one; the converse is immediate.
[[nodiscard]] inline bool is_doubled_triangle(const Polytope& q) {
  if (q.affine_dim() != 2 || q.vertices().size() != 3) return false;
  if (normalized_volume(q) != 4) return false;
  const std::vector<Vec>& everts = q.embedded_vertices();
  for (int i = 0; i < 3; ++i) {
    Vec d = everts[i] - everts[(i + 1) % 3];
    for (int c = 0; c < d.dim(); ++c)
      if (d[c].value() % 2 != 0) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polygons

enum class PolygonKind { HasInteriorPoints, TwoDelta2, Lawrence };

[[nodiscard]] inline std::string to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::HasInteriorPoints: return "HasInteriorPoints";
    case PolygonKind::TwoDelta2: return "TwoDelta2";
    case PolygonKind::Lawrence: return "Lawrence";
  }
  throw InternalError("unknown polygon kind");
}

/// For Lawrence polygons, h1 >= h2 >= 0 are the lattice lengths of the two
/// parallel edges: the polygon is equivalent to conv(0, h1*e1, e2, h2*e1+e2).
struct PolygonClass {
  PolygonKind kind;
  Int h1 = 0;
  Int h2 = 0;
};

/// Builds the reference Lawrence polygon in ambient dimension 2.
[[nodiscard]] inline Polytope lawrence_polygon(Int h1, Int h2) {
  if (h1 < h2 || h2 < 0 || h1 < 1) throw PreconditionError("Lawrence parameters need h1 >= h2 >= 0, h1 >= 1");
  return hull({{0, 0}, {h1, 0}, {0, 1}, {h2, 1}});
}

/// Trichotomy for polygons: interior points, the doubled triangle, or a
/// Lawrence polygon.  The computed class is re-validated by reconstructing a
/// reference polygon and comparing canonical forms.
[[nodiscard]] inline PolygonClass classify_polygon(const Polytope& p,
                                                   long long box_limit = 100'000'000) {
  if (p.affine_dim() != 2) throw PreconditionError("polygon classification requires a 2-dimensional polytope");
  LatticePointSet pts = lattice_points(p, box_limit);
  if (pts.relative_interior > 0) return {PolygonKind::HasInteriorPoints, 0, 0};

  std::vector<DualVectorEntry> flat = dual_vectors_up_to_width(p, 1, box_limit);
  if (flat.empty()) {
    if (canonical_form(p) != detail::doubled_triangle_form())
      throw InternalError("hollow polygon of width >= 2 is not the doubled triangle");
    return {PolygonKind::TwoDelta2, 0, 0};
  }

  // Each width-1 direction splits the lattice points into two consecutive
  // levels; their segment lengths are the Lawrence parameters.
  std::vector<Vec> embedded;
  embedded.reserve(pts.points.size());
  for (const Vec& x : pts.points) embedded.push_back(*p.embed(x));

  Int best_h1 = -1, best_h2 = -1;
  for (const DualVectorEntry& e : flat) {
    if (e.width != 1) continue;
    Int lo = dot(e.direction, embedded[0]);
    for (const Vec& c : embedded) lo = std::min(lo, dot(e.direction, c));
    long long low = 0, high = 0;
    for (const Vec& c : embedded) (dot(e.direction, c) == lo ? low : high) += 1;
    Int a = std::max(low, high) - 1;
    Int b = std::min(low, high) - 1;
    if (a > best_h1 || (a == best_h1 && b > best_h2)) {
      best_h1 = a;
      best_h2 = b;
    }
  }
  if (best_h1 < 1) throw InternalError("width-1 polygon produced no Lawrence parameters");
  if (canonical_form(p) != canonical_form(lawrence_polygon(best_h1, best_h2)))
    throw InternalError("Lawrence parameters failed reconstruction check");
  return {PolygonKind::Lawrence, best_h1, best_h2};
}

// ---------------------------------------------------------------------------
// Cayley structure

/// Witness that the polytope lies between two adjacent lattice hyperplanes:
/// the functional, its lower value, and the lattice points on each level.
struct CayleyWitness {
  DualVec direction;
  Int base_level = 0;
  std::vector<Vec> lower;  // ambient lattice points with <direction, x> == base_level
  std::vector<Vec> upper;  // ... == base_level + 1
};

/// A full-dimensional 3-polytope is a Cayley polytope exactly when its width
/// is 1.  Returns the witness for the lexicographically first minimizer.
[[nodiscard]] inline std::optional<CayleyWitness> is_cayley(const Polytope& p,
                                                            long long box_limit = 100'000'000) {
  if (p.ambient_dim() != 3 || p.affine_dim() != 3)
    throw PreconditionError("Cayley test requires a full-dimensional 3-polytope");
  WidthResult w = lattice_width(p, box_limit);
  if (w.width != 1) return std::nullopt;

  CayleyWitness wit;
  wit.direction = w.directions.front();  // hull coords == ambient coords here
  LatticePointSet pts = lattice_points(p, box_limit);
  Int lo = dot(wit.direction, pts.points.front());
  for (const Vec& x : pts.points) lo = std::min(lo, dot(wit.direction, x));
  wit.base_level = lo;
  for (const Vec& x : pts.points) {
    Int s = dot(wit.direction, x);
    if (s == lo)
      wit.lower.push_back(x);
    else if (s == lo + 1)
      wit.upper.push_back(x);
    else
      throw InternalError("width-1 polytope has a lattice point off both levels");
  }
  return wit;
}

// ---------------------------------------------------------------------------
// Projection onto the doubled triangle

/// Witness that x |-> map * x (an affine lattice surjection onto Z^2 after
/// translation) carries the polytope onto a copy of the doubled triangle.
struct ProjectionWitness {
  Mat map{2, 2};                    // 2 x ambient_dim integer matrix
  std::vector<Vec> image_vertices;  // hull vertices of the image polygon
};

/// Searches for a lattice projection of the full-dimensional polytope onto
/// the doubled triangle.  Both rows of any such projection pull back to
/// primitive functionals of spread exactly 2, so candidate pairs are drawn
/// from the spread-2 dual directions.
[[nodiscard]] inline std::optional<ProjectionWitness> projects_onto_2delta2(
    const Polytope& p, long long box_limit = 100'000'000) {
  int n = p.ambient_dim();
  if (p.affine_dim() != n) throw PreconditionError("projection test requires a full-dimensional polytope");

  std::vector<DualVectorEntry> cands = dual_vectors_up_to_width(p, 2, box_limit);
  std::erase_if(cands, [](const DualVectorEntry& e) { return e.width != 2; });

  const std::vector<Vec>& verts = p.vertices();

  // Cache each candidate functional's values on the vertices; image polygons
  // are then assembled by zipping two rows.
  std::vector<std::vector<Int>> values(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    values[i].reserve(verts.size());
    for (const Vec& v : verts) values[i].push_back(dot(cands[i].direction, v));
  }

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const Vec& y1 = cands[i].direction;
      const Vec& y2 = cands[j].direction;

      // Surjectivity onto Z^2: the 2x2 minors of the stacked rows must have
      // gcd 1.
      Int g = 0;
      for (int a = 0; a < n && g != 1; ++a)
        for (int b = a + 1; b < n; ++b) {
          g = gcd(g, y1[a] * y2[b] - y1[b] * y2[a]);
          if (g == 1) break;
        }
      if (g != 1) continue;

      // Vertices must land on the doubled triangle's six lattice points, so
      // more than six distinct images rule the pair out before any hull work.
      std::vector<Vec> image;
      image.reserve(verts.size());
      for (std::size_t v = 0; v < verts.size(); ++v) image.push_back(Vec{values[i][v], values[j][v]});
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() > 6) continue;

      Polytope q = hull(image);
      if (!detail::is_doubled_triangle(q)) continue;

      ProjectionWitness wit;
      wit.map = Mat(2, n);
      for (int c = 0; c < n; ++c) {
        wit.map.at(0, c) = y1[c];
        wit.map.at(1, c) = y2[c];
      }
      wit.image_vertices = q.vertices();
      return wit;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The trichotomy

enum class Tag3 { HasInteriorPoints, Cayley, ProjectsTo2Delta2, Exceptional };

[[nodiscard]] inline std::string to_string(Tag3 t) {
  switch (t) {
    case Tag3::HasInteriorPoints: return "HasInteriorPoints";
    case Tag3::Cayley: return "Cayley";
    case Tag3::ProjectsTo2Delta2: return "ProjectsTo2Delta2";
    case Tag3::Exceptional: return "Exceptional";
  }
  throw InternalError("unknown classification tag");
}

struct ClassifyOptions {
  long long box_limit = 100'000'000;
  EmbedOptions embed;
  bool find_containers = true;  // search the catalog for embedding containers
};

struct Classification {
  Tag3 tag = Tag3::HasInteriorPoints;
  long long interior_points = 0;
  Int width = 0;
  std::optional<CayleyWitness> cayley;
  std::optional<ProjectionWitness> projection;
  std::vector<int> containers;  // 1-based catalog indices admitting an embedding
};

/// Classifies a full-dimensional 3-polytope.  Polytopes without interior
/// lattice points are Cayley, project onto the doubled triangle, or embed
/// into a catalog member; `containers` lists every catalog index that admits
/// an embedding when the first two cases fail.
[[nodiscard]] inline Classification classify_3d(const Polytope& p, const ClassifyOptions& opts = {}) {
  if (p.ambient_dim() != 3 || p.affine_dim() != 3)
    throw PreconditionError("classification requires a full-dimensional 3-polytope");

  Classification cls;
  LatticePointSet pts = lattice_points(p, opts.box_limit);
  cls.interior_points = pts.interior;
  WidthResult w = lattice_width(p, opts.box_limit);
  cls.width = w.width;

  if (pts.interior > 0) {
    cls.tag = Tag3::HasInteriorPoints;
    return cls;
  }
  if (w.width == 1) {
    cls.tag = Tag3::Cayley;
    cls.cayley = is_cayley(p, opts.box_limit);
    if (!cls.cayley) throw InternalError("width-1 polytope rejected by Cayley test");
    return cls;
  }
  if (auto proj = projects_onto_2delta2(p, opts.box_limit)) {
    cls.tag = Tag3::ProjectsTo2Delta2;
    cls.projection = std::move(proj);
    return cls;
  }
  cls.tag = Tag3::Exceptional;
  if (opts.find_containers) {
    const std::vector<Polytope>& cat = catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (embeds_into(p, cat[i], opts.embed)) cls.containers.push_back(static_cast<int>(i) + 1);
  }
  return cls;
}

}  // namespace latgeo
