#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "latgeo/mat.hpp"
#include "latgeo/rat.hpp"

namespace latgeo {

/// Closed halfspace <a, y> <= b.
struct HalfSpace {
  Vec a;
  Int b;
};

/// Integer coordinate box lo..hi (inclusive); empty() when some coordinate
/// range is void.
struct IntBox {
  Vec lo, hi;

  [[nodiscard]] bool empty() const {
    for (int i = 0; i < lo.dim(); ++i)
      if (lo[i] > hi[i]) return true;
    return false;
  }

  [[nodiscard]] Int cell_count() const {
    if (empty()) return 0;
    Int n = 1;
    for (int i = 0; i < lo.dim(); ++i) n *= hi[i] - lo[i] + 1;
    return n;
  }

  [[nodiscard]] static IntBox of_points(const std::vector<Vec>& pts) {
    if (pts.empty()) throw PreconditionError("box of empty point set");
    IntBox b{pts[0], pts[0]};
    for (const Vec& p : pts)
      for (int i = 0; i < p.dim(); ++i) {
        if (p[i] < b.lo[i]) b.lo[i] = p[i];
        if (p[i] > b.hi[i]) b.hi[i] = p[i];
      }
    return b;
  }
};

/// Tightest integer box around the rational polytope {y : <a_i, y> <= b_i}.
/// The region must be bounded (every caller here passes constraint sets whose
/// normals positively span the space); vertices are enumerated as solutions
/// of d active constraints, solved exactly by Cramer's rule.
[[nodiscard]] inline IntBox bounding_box(const std::vector<HalfSpace>& hs, int dim) {
  std::vector<Rat> lo(dim), hi(dim);
  bool any = false;
  int m = static_cast<int>(hs.size());
  std::vector<int> pick(dim);
  // Iterate over all dim-subsets of the constraints.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == dim) {
      Mat a(dim, dim);
      Vec b(dim);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) a.at(r, c) = hs[pick[r]].a[c];
        b[r] = hs[pick[r]].b;
      }
      Int da = det(a);
      if (da == 0) return;
      // y_j = det(a with column j replaced by b) / det(a)
      std::vector<Rat> y(dim);
      for (int j = 0; j < dim; ++j) {
        Mat aj = a;
        aj.set_col(j, b);
        y[j] = Rat(det(aj), da);
      }
      for (const HalfSpace& h : hs) {
        Rat s(0);
        for (int j = 0; j < dim; ++j) s = s + Rat(h.a[j]) * y[j];
        if (s > Rat(h.b)) return;  // infeasible vertex candidate
      }
      for (int j = 0; j < dim; ++j) {
        if (!any || y[j] < lo[j]) lo[j] = y[j];
        if (!any || y[j] > hi[j]) hi[j] = y[j];
      }
      any = true;
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  IntBox box{Vec::zero(dim), Vec::zero(dim)};
  if (!any) {
    // Empty region: return a canonical empty box.
    box.lo[0] = 1;
    return box;
  }
  for (int j = 0; j < dim; ++j) {
    box.lo[j] = lo[j].ceil();
    box.hi[j] = hi[j].floor();
  }
  return box;
}

/// Visit every integer point of the box. Guarded: throws ResourceLimitError
/// when the box holds more than `limit` cells.
template <typename F>
void for_each_lattice_point(const IntBox& box, long long limit, F&& visit) {
  if (box.empty()) return;
  if (box.cell_count() > Int(limit))
    throw ResourceLimitError("lattice enumeration box exceeds limit");
  int d = box.lo.dim();
  Vec p = box.lo;
  while (true) {
    visit(static_cast<const Vec&>(p));
    int i = d - 1;
    while (i >= 0 && p[i] == box.hi[i]) {
      p[i] = box.lo[i];
      --i;
    }
    if (i < 0) return;
    p[i] += 1;
  }
}

}  // namespace latgeo
