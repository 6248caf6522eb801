// Affine-unimodular equivalence: canonical forms, equivalence witnesses,
// and lattice-preserving embedding search.
#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "latgeo/affine.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/mat.hpp"
#include "latgeo/polytope.hpp"

namespace latgeo {

struct CanonicalOptions {
  int max_vertices = 16;           // guard: frame enumeration is O(k^(r+1))
  long long box_limit = 100'000'000;  // passed through to lattice-point scans
};

/// Complete invariant for affine-unimodular equivalence.
///
/// `matrix` has one column per vertex other than a distinguished base vertex,
/// written in a lattice basis chosen so that equivalent polytopes produce the
/// identical matrix: the polytope is recovered (up to equivalence) as the
/// convex hull of the origin together with the columns.  The cheap numeric
/// invariants are kept alongside so collections can be bucketed before the
/// matrix is compared.
struct CanonicalForm {
  int affine_dim = 0;
  int vertex_count = 0;
  Int volume = 0;                    // normalized volume of the hull
  long long total_points = 0;        // lattice points in the polytope
  long long relative_interior_points = 0;
  std::vector<long long> facet_point_counts;  // sorted per-facet totals
  Mat matrix{0, 0};

  // Transform that realizes the form: embedded coords c |-> u * (c - base).
  // Not part of the equivalence-class identity.
  Mat u{0, 0};
  Vec base{};

  [[nodiscard]] friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.affine_dim == b.affine_dim && a.vertex_count == b.vertex_count &&
           a.volume == b.volume && a.total_points == b.total_points &&
           a.relative_interior_points == b.relative_interior_points &&
           a.facet_point_counts == b.facet_point_counts && a.matrix == b.matrix;
  }

  [[nodiscard]] friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                                        const CanonicalForm& b) {
    if (auto c = a.affine_dim <=> b.affine_dim; c != 0) return c;
    if (auto c = a.vertex_count <=> b.vertex_count; c != 0) return c;
    if (auto c = a.volume <=> b.volume; c != 0) return c;
    if (auto c = a.total_points <=> b.total_points; c != 0) return c;
    if (auto c = a.relative_interior_points <=> b.relative_interior_points; c != 0) return c;
    if (auto c = a.facet_point_counts <=> b.facet_point_counts; c != 0) return c;
    return a.matrix <=> b.matrix;
  }
};

namespace detail {

/// Intrinsic sort key per vertex: the multiset of (lattice-point count,
/// vertex count) over the facets containing it.  Preserved by any
/// lattice-affine isomorphism, so base/frame enumeration may be restricted
/// to minimum-key vertices without losing canonicity.
[[nodiscard]] inline std::vector<std::vector<std::pair<long long, int>>> vertex_keys(
    const Polytope& p, const std::vector<Vec>& embedded_points) {
  const auto& facets = p.facets();
  const auto& everts = p.embedded_vertices();
  int k = static_cast<int>(everts.size());
  int f = static_cast<int>(facets.size());

  std::vector<long long> facet_points(f, 0);
  std::vector<int> facet_verts(f, 0);
  for (int fi = 0; fi < f; ++fi) {
    for (const Vec& c : embedded_points)
      if (dot(facets[fi].normal, c) == facets[fi].offset) ++facet_points[fi];
    for (const Vec& c : everts)
      if (dot(facets[fi].normal, c) == facets[fi].offset) ++facet_verts[fi];
  }

  std::vector<std::vector<std::pair<long long, int>>> keys(k);
  for (int vi = 0; vi < k; ++vi) {
    for (int fi = 0; fi < f; ++fi)
      if (dot(facets[fi].normal, everts[vi]) == facets[fi].offset)
        keys[vi].push_back({facet_points[fi], facet_verts[fi]});
    std::sort(keys[vi].begin(), keys[vi].end());
  }
  return keys;
}

/// Recursively extends `chosen` (indices into everts, diffs against base) to a
/// full affinely independent frame, evaluating the candidate matrix at the
/// leaves and keeping the lexicographic minimum.
struct FrameSearch {
  const std::vector<Vec>& everts;
  int r;
  int base_index;
  std::vector<int> frame;          // vertex indices of the partial frame
  std::vector<bool> used;
  std::optional<CanonicalForm>* best;
  const CanonicalForm* proto;      // invariant fields, reused for candidates

  void run() { extend(); }

  [[nodiscard]] bool independent(const std::vector<int>& ids) const {
    Mat d(r, static_cast<int>(ids.size()));
    for (int c = 0; c < static_cast<int>(ids.size()); ++c)
      d.set_col(c, everts[ids[c]] - everts[base_index]);
    return rank(d) == static_cast<int>(ids.size());
  }

  void extend() {
    int k = static_cast<int>(everts.size());
    if (static_cast<int>(frame.size()) == r) {
      evaluate();
      return;
    }
    for (int vi = 0; vi < k; ++vi) {
      if (vi == base_index || used[vi]) continue;
      frame.push_back(vi);
      if (independent(frame)) {
        used[vi] = true;
        extend();
        used[vi] = false;
      }
      frame.pop_back();
    }
  }

  void evaluate() {
    int k = static_cast<int>(everts.size());
    const Vec& b = everts[base_index];

    Mat d(r, r);
    for (int c = 0; c < r; ++c) d.set_col(c, everts[frame[c]] - b);
    HnfResult hnf = hermite_normal_form(d);

    std::vector<Vec> rest;
    rest.reserve(k - 1 - r);
    for (int vi = 0; vi < k; ++vi) {
      if (vi == base_index || used_in_frame(vi)) continue;
      rest.push_back(hnf.u.apply(everts[vi] - b));
    }
    std::sort(rest.begin(), rest.end());

    Mat m(r, k - 1);
    for (int c = 0; c < r; ++c)
      for (int row = 0; row < r; ++row) m.at(row, c) = hnf.h.at(row, c);
    for (int c = 0; c < static_cast<int>(rest.size()); ++c) m.set_col(r + c, rest[c]);

    if (!*best || m < (*best)->matrix) {
      CanonicalForm cand = *proto;
      cand.matrix = std::move(m);
      cand.u = hnf.u;
      cand.base = b;
      *best = std::move(cand);
    }
  }

  [[nodiscard]] bool used_in_frame(int vi) const {
    return std::find(frame.begin(), frame.end(), vi) != frame.end();
  }
};

}  // namespace detail

/// Computes the canonical form of `p`.  Equivalent polytopes yield equal
/// forms; unequal forms certify inequivalence.
[[nodiscard]] inline CanonicalForm canonical_form(const Polytope& p,
                                                  const CanonicalOptions& opts = {}) {
  const auto& everts = p.embedded_vertices();
  int k = static_cast<int>(everts.size());
  int r = p.affine_dim();
  if (k > opts.max_vertices)
    throw ResourceLimitError("canonical form: vertex count " + std::to_string(k) +
                             " exceeds limit " + std::to_string(opts.max_vertices));

  LatticePointSet pts = lattice_points(p, opts.box_limit);

  CanonicalForm proto;
  proto.affine_dim = r;
  proto.vertex_count = k;
  proto.volume = normalized_volume(p);
  proto.total_points = pts.total;
  proto.relative_interior_points = pts.relative_interior;

  std::vector<Vec> embedded_points;
  embedded_points.reserve(pts.points.size());
  for (const Vec& x : pts.points) {
    auto c = p.embed(x);
    if (!c) throw InternalError("lattice point outside affine hull");
    embedded_points.push_back(*c);
  }

  const auto& facets = p.facets();
  for (const Facet& fc : facets) {
    long long on = 0;
    for (const Vec& c : embedded_points)
      if (dot(fc.normal, c) == fc.offset) ++on;
    proto.facet_point_counts.push_back(on);
  }
  std::sort(proto.facet_point_counts.begin(), proto.facet_point_counts.end());

  if (r == 0) {
    proto.matrix = Mat(0, 0);
    proto.u = Mat::identity(0);
    proto.base = everts[0];
    return proto;
  }

  auto keys = detail::vertex_keys(p, embedded_points);
  auto min_key = *std::min_element(keys.begin(), keys.end());

  std::optional<CanonicalForm> best;
  for (int bi = 0; bi < k; ++bi) {
    if (keys[bi] != min_key) continue;
    detail::FrameSearch search{everts, r, bi, {}, std::vector<bool>(k, false), &best, &proto};
    search.run();
  }
  if (!best) throw InternalError("no affine frame found for canonical form");
  return *std::move(best);
}

namespace detail {

/// Lifts an affine map on embedded r-coordinates to ambient n-space by acting
/// as the identity on the trailing coordinates.
[[nodiscard]] inline UnimodularAffineMap lift_embedded_map(const Mat& linear, const Vec& trans,
                                                           int ambient) {
  int r = linear.rows();
  Mat big = Mat::identity(ambient);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) big.at(i, j) = linear.at(i, j);
  Vec t = Vec::zero(ambient);
  for (int i = 0; i < r; ++i) t[i] = trans[i];
  return UnimodularAffineMap(big, t);
}

/// Ambient map sending every point of p's affine hull to coordinates
/// (embedded coords, 0, ..., 0).
[[nodiscard]] inline UnimodularAffineMap hull_chart(const Polytope& p) {
  const Mat& u = p.hull_basis();
  Vec shift = u.apply(p.hull_base());
  return UnimodularAffineMap(u, Vec::zero(p.ambient_dim()) - shift);
}

[[nodiscard]] inline UnimodularAffineMap hull_chart_inverse(const Polytope& p) {
  return UnimodularAffineMap(p.hull_basis_inverse(), p.hull_base());
}

}  // namespace detail

/// Tests affine-unimodular equivalence.  On success returns a lattice-affine
/// map f with f(p) == q, validated against the vertex sets before returning.
[[nodiscard]] inline std::optional<UnimodularAffineMap> are_equivalent(
    const Polytope& p, const Polytope& q, const CanonicalOptions& opts = {}) {
  if (p.ambient_dim() != q.ambient_dim()) return std::nullopt;
  CanonicalForm fp = canonical_form(p, opts);
  CanonicalForm fq = canonical_form(q, opts);
  if (fp != fq) return std::nullopt;

  int n = p.ambient_dim();

  // Embedded-space map: c |-> uq^{-1} * (up * (c - bp)) + bq.
  Mat uq_inv = inverse_unimodular(fq.u);
  Mat linear = uq_inv * fp.u;
  Vec trans = fq.base - linear.apply(fp.base);

  UnimodularAffineMap f = compose(
      detail::hull_chart_inverse(q),
      compose(detail::lift_embedded_map(linear, trans, n), detail::hull_chart(p)));

  std::vector<Vec> image;
  image.reserve(p.vertices().size());
  for (const Vec& v : p.vertices()) image.push_back(f(v));
  std::sort(image.begin(), image.end());
  if (image != q.vertices()) throw InternalError("equivalence witness failed validation");
  return f;
}

struct EmbedOptions {
  long long tuple_limit = 100'000'000;  // guard on |q points|^4
  long long box_limit = 100'000'000;
};

/// Searches for a lattice-affine injection f with f(p) subseteq q.  Both
/// polytopes must be 3-dimensional in ambient dimension 3.  Returns the map
/// if one exists.
[[nodiscard]] inline std::optional<UnimodularAffineMap> embeds_into(
    const Polytope& p, const Polytope& q, const EmbedOptions& opts = {}) {
  if (p.ambient_dim() != 3 || q.ambient_dim() != 3)
    throw PreconditionError("embedding search requires ambient dimension 3");
  if (p.affine_dim() != 3 || q.affine_dim() != 3)
    throw PreconditionError("embedding search requires 3-dimensional polytopes");

  if (normalized_volume(p) > normalized_volume(q)) return std::nullopt;
  LatticePointSet p_pts = lattice_points(p, opts.box_limit);
  LatticePointSet q_pts = lattice_points(q, opts.box_limit);
  if (p_pts.total > q_pts.total) return std::nullopt;

  const std::vector<Vec>& targets = q_pts.points;
  long long n_targets = static_cast<long long>(targets.size());
  {
    Int budget = 1;
    for (int i = 0; i < 4; ++i) budget *= Int(n_targets);
    if (budget > Int(opts.tuple_limit))
      throw ResourceLimitError("embedding search: tuple count exceeds limit");
  }

  // Deterministic anchor: first affinely independent vertex quadruple of p.
  const auto& pv = p.vertices();
  std::vector<int> anchor{0};
  for (int i = 1; i < static_cast<int>(pv.size()) && anchor.size() < 4; ++i) {
    anchor.push_back(i);
    Mat d(3, static_cast<int>(anchor.size()) - 1);
    for (int c = 1; c < static_cast<int>(anchor.size()); ++c)
      d.set_col(c - 1, pv[anchor[c]] - pv[anchor[0]]);
    if (rank(d) != static_cast<int>(anchor.size()) - 1) anchor.pop_back();
  }
  if (anchor.size() != 4) throw InternalError("3-dimensional polytope lacks affine frame");

  Mat a_diff(3, 3);
  for (int c = 0; c < 3; ++c) a_diff.set_col(c, pv[anchor[c + 1]] - pv[anchor[0]]);
  Int det_a = det(a_diff);
  Mat adj_a = adjugate(a_diff);

  auto cross = [](const Vec& x, const Vec& y) {
    Vec z = Vec::zero(3);
    z[0] = x[1] * y[2] - x[2] * y[1];
    z[1] = x[2] * y[0] - x[0] * y[2];
    z[2] = x[0] * y[1] - x[1] * y[0];
    return z;
  };

  for (const Vec& w0 : targets) {
    for (const Vec& w1 : targets) {
      Vec d1 = w1 - w0;
      if (is_zero(d1)) continue;
      for (const Vec& w2 : targets) {
        Vec c12 = cross(d1, w2 - w0);
        if (is_zero(c12)) continue;
        for (const Vec& w3 : targets) {
          Int det_w = dot(c12, w3 - w0);
          if (det_w != det_a && det_w != -det_a) continue;

          // Solve L * a_diff = w_diff over the integers.
          Mat w_diff(3, 3);
          w_diff.set_col(0, d1);
          w_diff.set_col(1, w2 - w0);
          w_diff.set_col(2, w3 - w0);
          Mat num = w_diff * adj_a;
          bool integral = true;
          Mat linear(3, 3);
          for (int i = 0; i < 3 && integral; ++i)
            for (int j = 0; j < 3 && integral; ++j) {
              if (num.at(i, j).value() % det_a.value() != 0) {
                integral = false;
                break;
              }
              linear.at(i, j) = num.at(i, j).value() / det_a.value();
            }
          if (!integral) continue;

          Vec trans = w0 - linear.apply(pv[anchor[0]]);
          bool inside = true;
          for (const Vec& v : pv) {
            if (!q.contains(linear.apply(v) + trans)) {
              inside = false;
              break;
            }
          }
          if (!inside) continue;

          UnimodularAffineMap f(linear, trans);  // ctor re-checks |det| == 1
          for (const Vec& v : pv)
            if (!q.contains(f(v))) throw InternalError("embedding witness failed validation");
          return f;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace latgeo
