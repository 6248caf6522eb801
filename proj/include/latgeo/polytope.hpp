#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latgeo/affine.hpp"
#include "latgeo/hbox.hpp"

namespace latgeo {

/// Facet inequality <normal, x> >= offset in the affine-hull coordinates of
/// the owning polytope. The normal is primitive and points inward.
struct Facet {
  Vec normal;
  Int offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend std::strong_ordering operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

/// Convex hull of finitely many lattice points. Immutable after
/// construction. Works in every ambient dimension 2..5 and keeps degenerate
/// (lower-dimensional) inputs usable: vertices stay in ambient coordinates
/// while facets are stored in exact affine-hull coordinates, reached through
/// a full unimodular change of basis (so the induced lattice is automatically
/// the saturated one).
class Polytope {
 public:
  [[nodiscard]] int ambient_dim() const { return ambient_; }
  [[nodiscard]] int affine_dim() const { return affine_; }

  /// Hull-minimal vertex list, ambient coordinates, lex-sorted.
  [[nodiscard]] const std::vector<Vec>& vertices() const { return vertices_; }
  /// Same vertices in affine-hull coordinates (dimension affine_dim).
  [[nodiscard]] const std::vector<Vec>& embedded_vertices() const { return embedded_; }
  /// Facets in affine-hull coordinates, sorted.
  [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }

  /// x -> head of emb_u * (x - base): ambient point to affine-hull
  /// coordinates; nullopt when x is not on the affine hull lattice.
  [[nodiscard]] std::optional<Vec> embed(const Vec& x) const {
    if (x.dim() != ambient_) throw PreconditionError("embed: ambient dimension mismatch");
    Vec y = emb_u_.apply(x - base_);
    for (int i = affine_; i < ambient_; ++i)
      if (y[i] != 0) return std::nullopt;
    Vec c(affine_);
    for (int i = 0; i < affine_; ++i) c[i] = y[i];
    return c;
  }

  [[nodiscard]] Vec unembed(const Vec& c) const {
    if (c.dim() != affine_) throw PreconditionError("unembed: affine dimension mismatch");
    Vec y = Vec::zero(ambient_);
    for (int i = 0; i < affine_; ++i) y[i] = c[i];
    return base_ + emb_uinv_.apply(y);
  }

  /// Full unimodular hull coordinates: x -> emb_u * (x - base). On the
  /// affine hull the trailing ambient-affine coordinates vanish.
  [[nodiscard]] const Mat& hull_basis() const { return emb_u_; }
  [[nodiscard]] const Mat& hull_basis_inverse() const { return emb_uinv_; }
  [[nodiscard]] const Vec& hull_base() const { return base_; }

  [[nodiscard]] bool contains(const Vec& x) const {
    auto c = embed(x);
    return c && embedded_contains(*c);
  }

  [[nodiscard]] bool embedded_contains(const Vec& c) const {
    for (const Facet& f : facets_)
      if (dot(f.normal, c) < f.offset) return false;
    return affine_ != 0 || c == Vec(0);
  }

  /// Vertex indices incident to facet `fi`.
  [[nodiscard]] std::vector<int> facet_vertex_indices(int fi) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(embedded_.size()); ++i)
      if (dot(facets_[fi].normal, embedded_[i]) == facets_[fi].offset) out.push_back(i);
    return out;
  }

  friend Polytope hull(std::vector<Vec> points);

 private:
  Polytope() = default;

  int ambient_ = 0, affine_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Vec> embedded_;
  Mat emb_u_, emb_uinv_;
  Vec base_;
  std::vector<Facet> facets_;
};

/// Convex hull factory. Accepts any nonempty uniform-dimension point list
/// with ambient dimension 2..5; duplicates are absorbed and lower-dimensional
/// hulls are fully supported.
[[nodiscard]] inline Polytope hull(std::vector<Vec> points) {
  if (points.empty()) throw PreconditionError("hull of empty point set");
  int n = points[0].dim();
  if (n < 2 || n > kMaxDim) throw PreconditionError("ambient dimension must be 2..5");
  for (const Vec& p : points)
    if (p.dim() != n) throw PreconditionError("hull: mixed point dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope p;
  p.ambient_ = n;
  p.base_ = points[0];

  // Affine hull: row-reduce the difference matrix with a full unimodular
  // transform; in the new coordinates the hull spans the leading r axes.
  Mat diffs(n, static_cast<int>(points.size()) - 1);
  for (int j = 1; j < static_cast<int>(points.size()); ++j)
    diffs.set_col(j - 1, points[j] - points[0]);
  HnfResult hr = detail::hnf_upper(diffs);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    bool nonzero = false;
    for (int j = 0; j < diffs.cols(); ++j)
      if (hr.h.at(i, j) != 0) nonzero = true;
    if (nonzero) ++r;
  }
  p.affine_ = r;
  if (r == n) {
    p.emb_u_ = Mat::identity(n);
    p.emb_uinv_ = Mat::identity(n);
    p.base_ = Vec::zero(n);
  } else {
    p.emb_u_ = hr.u;
    p.emb_uinv_ = inverse_unimodular(hr.u);
  }

  std::vector<Vec> emb;
  emb.reserve(points.size());
  for (const Vec& q : points) {
    Vec y = p.emb_u_.apply(q - p.base_);
    Vec c(r);
    for (int i = 0; i < r; ++i) c[i] = y[i];
    emb.push_back(c);
  }

  // Facets by supporting-hyperplane enumeration: every facet is spanned by r
  // of the input points, so scanning r-subsets and keeping one-sided planes
  // finds exactly the facet list. Robust against the coplanar degeneracies
  // that lattice polytopes produce everywhere.
  std::vector<Facet> facets;
  if (r == 1) {
    Int lo = emb[0][0], hi = emb[0][0];
    for (const Vec& c : emb) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    facets.push_back({Vec{1}, lo});
    facets.push_back({Vec{-1}, -hi});
  } else if (r >= 2) {
    int k = static_cast<int>(emb.size());
    std::map<std::pair<Vec, Int>, bool> seen;  // canonical plane -> is a facet
    std::vector<int> pick(r);
    auto consider = [&]() {
      Mat dirs(r - 1, r);
      for (int i = 1; i < r; ++i)
        for (int j = 0; j < r; ++j) dirs.at(i - 1, j) = (emb[pick[i]] - emb[pick[0]])[j];
      Vec normal = hyperplane_normal(dirs);
      if (is_zero(normal)) return;
      Int c = dot(normal, emb[pick[0]]);
      // Canonical signed representative so each plane is side-tested once.
      Vec key_n = normal;
      Int key_c = c;
      for (int i = 0; i < r; ++i) {
        if (key_n[i] == 0) continue;
        if (key_n[i] < 0) {
          key_n = -key_n;
          key_c = -key_c;
        }
        break;
      }
      auto it = seen.find({key_n, key_c});
      if (it != seen.end()) return;
      bool below = false, above = false;
      for (const Vec& q : emb) {
        Int s = dot(key_n, q) - key_c;
        if (s < 0) below = true;
        if (s > 0) above = true;
        if (below && above) break;
      }
      bool supporting = !(below && above);
      seen.emplace(std::make_pair(key_n, key_c), supporting);
      if (!supporting) return;
      if (below)
        facets.push_back({-key_n, -key_c});
      else
        facets.push_back({key_n, key_c});
    };
    std::vector<int> stack;
    // iterate r-subsets of 0..k-1
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    if (k >= r) {
      while (true) {
        pick = idx;
        consider();
        int i = r - 1;
        while (i >= 0 && idx[i] == k - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    std::sort(facets.begin(), facets.end());
  }
  p.facets_ = std::move(facets);

  // Hull-minimal vertices: points whose active facet normals span the space.
  if (r == 0) {
    p.vertices_ = {points[0]};
    p.embedded_ = {Vec(0)};
  } else {
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      std::vector<Vec> active;
      for (const Facet& f : p.facets_)
        if (dot(f.normal, emb[i]) == f.offset) active.push_back(f.normal);
      if (static_cast<int>(active.size()) < r) continue;
      Mat a(static_cast<int>(active.size()), r);
      for (int ai = 0; ai < static_cast<int>(active.size()); ++ai)
        for (int j = 0; j < r; ++j) a.at(ai, j) = active[ai][j];
      if (rank(a) == r) {
        p.vertices_.push_back(points[i]);
        p.embedded_.push_back(emb[i]);
      }
    }
  }
  return p;
}

/// Lattice points of a polytope with their boundary/interior split.
/// `interior` counts topological interior points (zero whenever the polytope
/// is lower-dimensional); `relative_interior` counts points interior within
/// the affine hull, which is what polygon classification consumes.
struct LatticePointSet {
  std::vector<Vec> points;  // ambient coordinates, lex-sorted
  long long total = 0;
  long long interior = 0;
  long long boundary = 0;
  long long relative_interior = 0;
};

[[nodiscard]] inline LatticePointSet lattice_points(const Polytope& p,
                                                    long long box_limit = 100'000'000) {
  LatticePointSet out;
  if (p.affine_dim() == 0) {
    out.points = {p.vertices()[0]};
    out.total = out.boundary = 1;
    out.relative_interior = 1;  // the relative interior of a point is itself
    return out;
  }
  IntBox box = IntBox::of_points(p.embedded_vertices());
  bool full_dim = p.affine_dim() == p.ambient_dim();
  for_each_lattice_point(box, box_limit, [&](const Vec& c) {
    bool strict = true;
    for (const Facet& f : p.facets()) {
      Int s = dot(f.normal, c) - f.offset;
      if (s < 0) return;
      if (s == 0) strict = false;
    }
    out.points.push_back(p.unembed(c));
    ++out.total;
    if (strict) {
      ++out.relative_interior;
      if (full_dim) ++out.interior;
    }
  });
  out.boundary = out.total - out.interior;
  std::sort(out.points.begin(), out.points.end());
  return out;
}

namespace detail {

/// Triangulates conv(pts) into affine_dim-simplices by fanning from the
/// first vertex over recursively triangulated facets. Returns index tuples
/// into `pts`; `pts` must be the vertex list of the polytope (any ambient).
inline std::vector<std::vector<int>> fan_triangulation(const std::vector<Vec>& pts) {
  Polytope q = hull(pts);
  // Map hull vertices back to caller indices.
  auto index_of = [&](const Vec& v) {
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
      if (pts[i] == v) return i;
    throw InternalError("fan_triangulation: vertex lookup failed");
  };
  int r = q.affine_dim();
  if (r == 0) return {{index_of(q.vertices()[0])}};
  if (r == 1) {
    // Segment: endpoints are the two extreme embedded coordinates.
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(q.vertices().size()); ++i) {
      if (q.embedded_vertices()[i][0] < q.embedded_vertices()[lo][0]) lo = i;
      if (q.embedded_vertices()[i][0] > q.embedded_vertices()[hi][0]) hi = i;
    }
    return {{index_of(q.vertices()[lo]), index_of(q.vertices()[hi])}};
  }
  std::vector<std::vector<int>> simplices;
  const Vec& apex = q.vertices()[0];
  for (int fi = 0; fi < static_cast<int>(q.facets().size()); ++fi) {
    const Facet& f = q.facets()[fi];
    if (dot(f.normal, q.embedded_vertices()[0]) == f.offset) continue;  // apex on facet
    std::vector<int> fverts = q.facet_vertex_indices(fi);
    std::vector<Vec> fpts;
    fpts.reserve(fverts.size());
    for (int vi : fverts) fpts.push_back(q.vertices()[vi]);
    for (const auto& cell : fan_triangulation(fpts)) {
      std::vector<int> simplex;
      simplex.push_back(index_of(apex));
      for (int ci : cell) simplex.push_back(index_of(fpts[ci]));
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace detail

/// Normalized volume (affine_dim! times the euclidean volume, measured in
/// the affine hull lattice): the sum of |det| of edge matrices over a fan
/// triangulation from vertex 0. Points have volume 1 by convention.
[[nodiscard]] inline Int normalized_volume(const Polytope& p) {
  int r = p.affine_dim();
  if (r == 0) return 1;
  const auto& emb = p.embedded_vertices();
  if (static_cast<int>(emb.size()) == r + 1) {
    Mat d(r, r);
    for (int j = 0; j < r; ++j) d.set_col(j, emb[j + 1] - emb[0]);
    return abs(det(d));
  }
  Int vol = 0;
  for (const auto& cell : detail::fan_triangulation(p.vertices())) {
    Mat d(r, r);
    for (int j = 0; j < r; ++j) {
      auto c0 = p.embed(p.vertices()[cell[0]]);
      auto cj = p.embed(p.vertices()[cell[j + 1]]);
      d.set_col(j, *cj - *c0);
    }
    vol += abs(det(d));
  }
  return vol;
}

[[nodiscard]] inline Polytope dilate(const Polytope& p, Int k) {
  if (k < 1) throw PreconditionError("dilate: factor must be positive");
  std::vector<Vec> scaled;
  scaled.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) scaled.push_back(k * v);
  return hull(std::move(scaled));
}

/// Degree of a full-dimensional lattice polytope: n + 1 - k for the smallest
/// dilation factor k whose k-fold dilate has an interior lattice point.
/// Always lands in [0, n]; the n+1 dilate of a full-dimensional polytope
/// contains the sum of n+1 affinely independent lattice points strictly
/// inside.
[[nodiscard]] inline int degree(const Polytope& p) {
  int n = p.ambient_dim();
  if (p.affine_dim() != n) throw PreconditionError("degree requires a full-dimensional polytope");
  for (int k = 1; k <= n + 1; ++k) {
    if (lattice_points(dilate(p, k)).interior > 0) return n + 1 - k;
  }
  throw InternalError("degree: no dilate up to n+1 has interior points");
}

/// Pick's identity Vol == total + interior - 2 for polygons, with both sides
/// computed by independent code paths (fan-triangulation determinants versus
/// point enumeration).
[[nodiscard]] inline bool pick_identity_holds(const Polytope& p) {
  if (p.affine_dim() != 2) throw PreconditionError("pick identity requires a polygon");
  LatticePointSet pts = lattice_points(p);
  return normalized_volume(p) == Int(pts.total) + Int(pts.relative_interior) - 2;
}

/// An edge (1-face) of a polytope: endpoint vertices, primitive direction
/// and lattice length.
struct Edge {
  Vec a, b;        // ambient endpoints, a < b lexicographically
  Vec direction;   // primitive, from a to b
  Int length;      // lattice length: b - a == length * direction
};

/// All edges, found as vertex pairs whose common active facet normals have
/// rank affine_dim - 1.
[[nodiscard]] inline std::vector<Edge> edges(const Polytope& p) {
  int r = p.affine_dim();
  if (r < 2) throw PreconditionError("edges require affine dimension >= 2");
  const auto& emb = p.embedded_vertices();
  int k = static_cast<int>(emb.size());
  std::vector<Edge> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<Vec> common;
      for (const Facet& f : p.facets())
        if (dot(f.normal, emb[i]) == f.offset && dot(f.normal, emb[j]) == f.offset)
          common.push_back(f.normal);
      if (static_cast<int>(common.size()) < r - 1) continue;
      Mat m(static_cast<int>(common.size()), r);
      for (int ci = 0; ci < static_cast<int>(common.size()); ++ci)
        for (int c = 0; c < r; ++c) m.at(ci, c) = common[ci][c];
      if (rank(m) != r - 1) continue;
      PrimitivePart d = primitive_part(p.vertices()[j] - p.vertices()[i]);
      out.push_back({p.vertices()[i], p.vertices()[j], d.direction, d.multiplier});
    }
  return out;
}

/// White polytope: every lattice point lies on an edge.
[[nodiscard]] inline bool is_white(const Polytope& p) {
  if (p.affine_dim() != 3) throw PreconditionError("is_white requires a 3-dimensional polytope");
  std::vector<Edge> es = edges(p);
  for (const Vec& q : lattice_points(p).points) {
    bool on_edge = false;
    for (const Edge& e : es) {
      Vec d = q - e.a;
      int nz = -1;
      for (int i = 0; i < d.dim() && nz < 0; ++i)
        if (e.direction[i] != 0) nz = i;
      if (nz < 0) continue;
      if (d[nz].value() % e.direction[nz].value() != 0) continue;
      Int c = exact_div(d[nz], e.direction[nz]);
      if (c < 0 || c > e.length) continue;
      if (d == c * e.direction) {
        on_edge = true;
        break;
      }
    }
    if (!on_edge) return false;
  }
  return true;
}

/// Empty polytope: the only lattice points are the vertices.
[[nodiscard]] inline bool is_empty_polytope(const Polytope& p,
                                            long long box_limit = 100'000'000) {
  return lattice_points(p, box_limit).total == static_cast<long long>(p.vertices().size());
}

[[nodiscard]] inline long long relative_interior_count(const Polytope& p,
                                                       long long box_limit = 100'000'000) {
  return lattice_points(p, box_limit).relative_interior;
}

/// The facet `fi` as a polytope of its own (ambient coordinates).
[[nodiscard]] inline Polytope facet_polytope(const Polytope& p, int fi) {
  std::vector<Vec> pts;
  for (int vi : p.facet_vertex_indices(fi)) pts.push_back(p.vertices()[vi]);
  return hull(std::move(pts));
}

}  // namespace latgeo
